#include "bdg/group_graph.hpp"

namespace bdg {

BipartiteDivisorGraph bdg_of_group(const FamilyGroup& g, std::uint32_t max_p) {
  return build_bdg(noncentral_class_sizes(class_table(g, max_p)));
}

BipartiteDivisorGraph bdg_of_group(const TableGroup& t) {
  return build_bdg(class_sizes_of_table_group(t));
}

}  // namespace bdg
