#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace bdg {

// A small generic group given by an explicit multiplication table. Element 0
// is the identity. Validated on load: Latin-square rows/columns, identity
// row/column, associativity (exhaustive up to order 200, sampled above).
class TableGroup {
 public:
  struct LoadInfo {
    bool associativity_exhaustive = false;
    std::uint64_t triples_checked = 0;
  };

  static constexpr std::uint32_t kMaxOrder = 2000;
  static constexpr std::uint32_t kExhaustiveAssocLimit = 200;

  // Throws std::invalid_argument on a malformed table.
  static TableGroup from_table(std::vector<std::vector<std::uint32_t>> table);
  // File format: line 1 the order n, then n lines of n space-separated
  // 0-based indices; LF line endings.
  static TableGroup from_stream(std::istream& in);
  static TableGroup from_file(const std::string& path);

  std::uint32_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  const LoadInfo& load_info() const { return info_; }

  std::vector<std::uint32_t> center() const;
  // Conjugacy classes as element lists, each sorted, ordered by smallest
  // member.
  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const;

 private:
  TableGroup() = default;

  std::uint32_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  LoadInfo info_;
};

// Conjugacy class sizes of the elements outside the center.
std::set<std::uint64_t> class_sizes_of_table_group(const TableGroup& t);

}  // namespace bdg
