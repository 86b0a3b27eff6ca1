#include "bdg/table_group.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bdg {

TableGroup TableGroup::from_table(std::vector<std::vector<std::uint32_t>> table) {
  const std::uint32_t n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw std::invalid_argument("TableGroup: empty table");
  if (n > kMaxOrder) throw std::invalid_argument("TableGroup: order exceeds 2000");
  for (const auto& row : table)
    if (row.size() != n) throw std::invalid_argument("TableGroup: table is not square");
  for (const auto& row : table)
    for (std::uint32_t v : row)
      if (v >= n) throw std::invalid_argument("TableGroup: entry out of range");

  // Identity row and column.
  for (std::uint32_t i = 0; i < n; ++i)
    if (table[0][i] != i || table[i][0] != i)
      throw std::invalid_argument("TableGroup: element 0 is not the identity");

  // Latin square.
  std::vector<bool> seen(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t c = 0; c < n; ++c) {
      if (seen[table[r][c]])
        throw std::invalid_argument("TableGroup: row " + std::to_string(r) +
                                    " is not a permutation");
      seen[table[r][c]] = true;
    }
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (seen[table[r][c]])
        throw std::invalid_argument("TableGroup: column " + std::to_string(c) +
                                    " is not a permutation");
      seen[table[r][c]] = true;
    }
  }

  TableGroup g;
  g.n_ = n;
  g.table_ = std::move(table);

  // Associativity: O(n^3), exhaustive only for small orders.
  if (n <= kExhaustiveAssocLimit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
            throw std::invalid_argument("TableGroup: table is not associative");
    g.info_.associativity_exhaustive = true;
    g.info_.triples_checked = std::uint64_t{n} * n * n;
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    constexpr std::uint64_t kSamples = 1'000'000;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
      std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
        throw std::invalid_argument("TableGroup: table is not associative");
    }
    g.info_.associativity_exhaustive = false;
    g.info_.triples_checked = kSamples;
  }

  g.inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (g.table_[a][b] == 0 && g.table_[b][a] == 0) {
        g.inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("TableGroup: element without inverse");
  }
  return g;
}

TableGroup TableGroup::from_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("TableGroup: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::uint64_t n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n == 0 || n > kMaxOrder)
      throw std::invalid_argument("TableGroup: bad order line");
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("TableGroup: bad order line");
  }
  std::vector<std::vector<std::uint32_t>> table;
  table.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    if (!std::getline(in, line))
      throw std::invalid_argument("TableGroup: expected " + std::to_string(n) + " rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    row.reserve(n);
    std::uint64_t v;
    while (ls >> v) {
      if (v >= n) throw std::invalid_argument("TableGroup: entry out of range");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (row.size() != n)
      throw std::invalid_argument("TableGroup: row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
    table.push_back(std::move(row));
  }
  return from_table(std::move(table));
}

TableGroup TableGroup::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("TableGroup: cannot open " + path);
  return from_stream(in);
}

std::vector<std::uint32_t> TableGroup::center() const {
  std::vector<std::uint32_t> z;
  for (std::uint32_t a = 0; a < n_; ++a) {
    bool central = true;
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (table_[a][b] != table_[b][a]) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<std::vector<std::uint32_t>> TableGroup::conjugacy_classes() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t g = 0; g < n_; ++g) {
    if (seen[g]) continue;
    std::vector<std::uint32_t> cls;
    for (std::uint32_t h = 0; h < n_; ++h) {
      std::uint32_t c = table_[table_[inverse_[h]][g]][h];
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::set<std::uint64_t> class_sizes_of_table_group(const TableGroup& t) {
  std::set<std::uint64_t> sizes;
  for (const auto& cls : t.conjugacy_classes())
    if (cls.size() > 1) sizes.insert(cls.size());
  return sizes;
}

}  // namespace bdg
