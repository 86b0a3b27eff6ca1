#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace bdg {

// Bipartite divisor graph of a finite set X of positive integers: one part is
// X minus {1}, the other the primes dividing some member, with an edge (q, x)
// exactly when q divides x. Values shared by both parts are distinct
// vertices.
struct BipartiteDivisorGraph {
  std::set<std::uint64_t> prime_vertices;
  std::set<std::uint64_t> size_vertices;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // (prime, size)

  std::size_t vertex_count() const { return prime_vertices.size() + size_vertices.size(); }
};

struct GraphInvariants {
  std::uint32_t components = 0;
  std::vector<std::uint32_t> diameters;     // one per component, in discovery order
  std::optional<std::uint32_t> girth;       // empty when acyclic
};

struct GraphShape {
  enum class Kind { CompleteBipartite, Path, Cycle, Other };

  Kind kind = Kind::Other;
  // CompleteBipartite: m = prime part size, n = size part size.
  std::uint32_t m = 0, n = 0;
  // Path/Cycle: number of edges.
  std::uint32_t length = 0;
  GraphInvariants invariants;

  bool is_complete_bipartite(std::uint32_t em, std::uint32_t en) const {
    return kind == Kind::CompleteBipartite && m == em && n == en;
  }
};

// Prime factors of n (distinct), by trial division against a sieved prime
// table up to 10^6; a cofactor above 10^12 is primality-tested and rejected
// if composite (out of the supported range).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

BipartiteDivisorGraph build_bdg(const std::set<std::uint64_t>& values);

GraphInvariants graph_invariants(const BipartiteDivisorGraph& g);

// Tag precedence when shapes overlap: CompleteBipartite > Cycle > Path >
// Other. The invariants record disambiguates.
GraphShape classify_shape(const BipartiteDivisorGraph& g);

}  // namespace bdg
