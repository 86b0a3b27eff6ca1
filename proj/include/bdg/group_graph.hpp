#pragma once

#include "bdg/class_analysis.hpp"
#include "bdg/divisor_graph.hpp"
#include "bdg/group.hpp"
#include "bdg/table_group.hpp"

namespace bdg {

// Bipartite divisor graph of the noncentral conjugacy class sizes.
BipartiteDivisorGraph bdg_of_group(const FamilyGroup& g,
                                   std::uint32_t max_p = kDefaultEnumerationGate);
BipartiteDivisorGraph bdg_of_group(const TableGroup& t);

}  // namespace bdg
