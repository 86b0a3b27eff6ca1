#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "bdg/divisor_graph.hpp"

using namespace bdg;

namespace {

// ---- independent oracle, sharing no code with the library ----

struct OracleGraph {
  // vertices: (0, q) primes, (1, x) sizes
  std::set<std::pair<int, std::uint64_t>> vertices;
  std::set<std::pair<std::pair<int, std::uint64_t>, std::pair<int, std::uint64_t>>> edges;
};

std::vector<std::uint64_t> naive_prime_divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= x; ++q) {
    if (x % q == 0) {
      out.push_back(q);
      while (x % q == 0) x /= q;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

OracleGraph oracle_build(const std::set<std::uint64_t>& values) {
  OracleGraph g;
  for (std::uint64_t x : values) {
    if (x == 1) continue;
    g.vertices.insert({1, x});
    for (std::uint64_t q : naive_prime_divisors(x)) {
      g.vertices.insert({0, q});
      g.edges.insert({{0, q}, {1, x}});
    }
  }
  return g;
}

struct OracleInvariants {
  int components;
  std::vector<int> diameters;
  std::optional<int> girth;
};

OracleInvariants oracle_invariants(const OracleGraph& g) {
  std::vector<std::pair<int, std::uint64_t>> verts(g.vertices.begin(), g.vertices.end());
  const int n = static_cast<int>(verts.size());
  auto id = [&](const std::pair<int, std::uint64_t>& v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : g.edges) {
    edges.push_back({id(a), id(b)});
    adj[id(a)].push_back(id(b));
    adj[id(b)].push_back(id(a));
  }

  // all-pairs shortest paths by Floyd-Warshall
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  // components by repeated scans over the distance matrix
  OracleInvariants inv{0, {}, std::nullopt};
  std::vector<int> comp(n, -1);
  for (int i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    int diameter = 0;
    for (int j = 0; j < n; ++j) {
      if (d[i][j] < inf) {
        comp[j] = inv.components;
        for (int k = 0; k < n; ++k)
          if (d[j][k] < inf) diameter = std::max(diameter, d[j][k]);
      }
    }
    ++inv.components;
    inv.diameters.push_back(diameter);
  }

  // girth: shortest cycle through each edge = 1 + shortest path avoiding it
  int girth = inf;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [s, t] = edges[e];
    std::vector<int> dist(n, inf);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (u == s && w == t) continue;
        if (w == s && u == t) continue;
        if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    if (dist[t] < inf) girth = std::min(girth, dist[t] + 1);
  }
  if (girth < inf) inv.girth = girth;
  return inv;
}

enum class OracleShape { CompleteBipartite, Cycle, Path, Other };

OracleShape oracle_shape(const OracleGraph& g) {
  std::set<std::pair<int, std::uint64_t>> primes, sizes;
  for (const auto& v : g.vertices) (v.first == 0 ? primes : sizes).insert(v);
  if (!primes.empty() && !sizes.empty() && g.edges.size() == primes.size() * sizes.size())
    return OracleShape::CompleteBipartite;

  OracleInvariants inv = oracle_invariants(g);
  if (inv.components == 1) {
    std::map<std::pair<int, std::uint64_t>, int> degree;
    for (const auto& [a, b] : g.edges) {
      ++degree[a];
      ++degree[b];
    }
    int deg1 = 0, deg2 = 0;
    for (const auto& v : g.vertices) {
      if (degree[v] == 1) ++deg1;
      if (degree[v] == 2) ++deg2;
    }
    int v = static_cast<int>(g.vertices.size());
    int e = static_cast<int>(g.edges.size());
    if (deg2 == v && e == v) return OracleShape::Cycle;
    if (deg1 == 2 && deg1 + deg2 == v && e == v - 1) return OracleShape::Path;
  }
  return OracleShape::Other;
}

OracleShape to_oracle_kind(const GraphShape& s) {
  switch (s.kind) {
    case GraphShape::Kind::CompleteBipartite:
      return OracleShape::CompleteBipartite;
    case GraphShape::Kind::Cycle:
      return OracleShape::Cycle;
    case GraphShape::Kind::Path:
      return OracleShape::Path;
    default:
      return OracleShape::Other;
  }
}

}  // namespace

TEST_CASE("prime factorization") {
  CHECK(distinct_prime_factors(1).empty());
  CHECK(distinct_prime_factors(2) == std::vector<std::uint64_t>{2});
  CHECK(distinct_prime_factors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(distinct_prime_factors(96) == std::vector<std::uint64_t>{2, 3});
  CHECK(distinct_prime_factors(97) == std::vector<std::uint64_t>{97});
  // one prime factor above the sieve bound
  CHECK(distinct_prime_factors(2 * 999983) == std::vector<std::uint64_t>{2, 999983});
  CHECK(distinct_prime_factors(std::uint64_t{999983} * 999983) ==
        std::vector<std::uint64_t>{999983});
  // Mersenne prime beyond 10^12: primality-tested, accepted
  CHECK(distinct_prime_factors(2305843009213693951ull) ==
        std::vector<std::uint64_t>{2305843009213693951ull});
  // semiprime with both factors above the sieve bound: rejected
  CHECK_THROWS_AS(distinct_prime_factors(std::uint64_t{1000003} * 1000033), std::out_of_range);
}

TEST_CASE("building the graph for the p=3 class sizes gives K_{2,5}") {
  BipartiteDivisorGraph g = build_bdg({6, 12, 36, 72, 96});
  CHECK(g.prime_vertices == std::set<std::uint64_t>{2, 3});
  CHECK(g.size_vertices == std::set<std::uint64_t>{6, 12, 36, 72, 96});
  CHECK(g.edges.size() == 10);
  GraphShape s = classify_shape(g);
  CHECK(s.is_complete_bipartite(2, 5));
  CHECK(s.invariants.components == 1);
  REQUIRE(s.invariants.diameters.size() == 1);
  CHECK(s.invariants.diameters[0] == 2);
  REQUIRE(s.invariants.girth.has_value());
  CHECK(*s.invariants.girth == 4);
}

TEST_CASE("1 is excluded; the empty graph has no components") {
  BipartiteDivisorGraph g = build_bdg({1});
  CHECK(g.vertex_count() == 0);
  CHECK(g.edges.empty());
  GraphInvariants inv = graph_invariants(g);
  CHECK(inv.components == 0);
  CHECK(inv.diameters.empty());
  CHECK(!inv.girth.has_value());
  CHECK(classify_shape(g).kind == GraphShape::Kind::Other);

  CHECK(build_bdg({}).vertex_count() == 0);
  CHECK_THROWS_AS(build_bdg({0}), std::invalid_argument);
}

TEST_CASE("two coprime primes give two disjoint edges") {
  BipartiteDivisorGraph g = build_bdg({2, 3});
  CHECK(g.edges == decltype(g.edges){{2, 2}, {3, 3}});
  GraphShape s = classify_shape(g);
  CHECK(s.kind == GraphShape::Kind::Other);
  CHECK(s.invariants.components == 2);
  CHECK(s.invariants.diameters == std::vector<std::uint32_t>{1, 1});
  CHECK(!s.invariants.girth.has_value());
}

TEST_CASE("a single edge is complete bipartite, not a path (tag precedence)") {
  GraphShape s = classify_shape(build_bdg({2}));
  CHECK(s.is_complete_bipartite(1, 1));
}

TEST_CASE("K_{2,2} is reported as complete bipartite, not a cycle") {
  // {6, 12} over primes {2, 3} is a 4-cycle and all 4 edges are present
  GraphShape s = classify_shape(build_bdg({6, 12}));
  CHECK(s.is_complete_bipartite(2, 2));
  REQUIRE(s.invariants.girth.has_value());
  CHECK(*s.invariants.girth == 4);
}

TEST_CASE("cycle and path detection") {
  // 6-10-15 over primes 2,3,5 is a hexagon
  GraphShape hexagon = classify_shape(build_bdg({6, 10, 15}));
  CHECK(hexagon.kind == GraphShape::Kind::Cycle);
  CHECK(hexagon.length == 6);
  REQUIRE(hexagon.invariants.girth.has_value());
  CHECK(*hexagon.invariants.girth == 6);

  // 2 - 6 - 3 with both prime endpoints is a path with 4 edges
  GraphShape path = classify_shape(build_bdg({2, 3, 6}));
  CHECK(path.kind == GraphShape::Kind::Path);
  CHECK(path.length == 4);
  CHECK(!path.invariants.girth.has_value());

  GraphShape p2 = classify_shape(build_bdg({4, 6}));  // 4 - 2 - 6 - 3
  CHECK(p2.kind == GraphShape::Kind::Path);
  CHECK(p2.length == 3);
}

TEST_CASE("vertex degrees count divisors and multiples") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> draw(2, 1000000);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::uint64_t> values;
    int k = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) values.insert(draw(rng));
    BipartiteDivisorGraph g = build_bdg(values);

    std::map<std::uint64_t, int> prime_degree, size_degree;
    for (const auto& [q, x] : g.edges) {
      ++prime_degree[q];
      ++size_degree[x];
    }
    for (std::uint64_t x : g.size_vertices) {
      CHECK(size_degree[x] == static_cast<int>(naive_prime_divisors(x).size()));
      CHECK(size_degree[x] >= 1);
    }
    for (std::uint64_t q : g.prime_vertices) {
      int multiples = 0;
      for (std::uint64_t x : g.size_vertices)
        if (x % q == 0) ++multiples;
      CHECK(prime_degree[q] == multiples);
      CHECK(prime_degree[q] >= 1);
    }
  }
}

TEST_CASE("classifier and invariants agree with the oracle on 1000 random sets") {
  std::mt19937_64 rng(12345);
  const std::uint64_t smooth_primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::uint64_t> values;
    int k = 1 + static_cast<int>(rng() % 6);
    bool smooth = trial % 2 == 0;
    for (int i = 0; i < k; ++i) {
      if (smooth) {
        // products of a few small primes: exercises the special shapes
        std::uint64_t v = 1;
        int factors = 1 + static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) v *= smooth_primes[rng() % 4];
        values.insert(v);
      } else {
        values.insert(2 + rng() % 999999);
      }
    }

    BipartiteDivisorGraph g = build_bdg(values);
    OracleGraph og = oracle_build(values);

    REQUIRE(g.edges.size() == og.edges.size());
    REQUIRE(g.vertex_count() == og.vertices.size());

    GraphShape shape = classify_shape(g);
    CHECK(to_oracle_kind(shape) == oracle_shape(og));

    OracleInvariants oi = oracle_invariants(og);
    CHECK(shape.invariants.components == static_cast<std::uint32_t>(oi.components));
    std::multiset<int> lib_diams(shape.invariants.diameters.begin(),
                                 shape.invariants.diameters.end());
    std::multiset<int> ora_diams(oi.diameters.begin(), oi.diameters.end());
    CHECK(lib_diams == ora_diams);
    CHECK(shape.invariants.girth.has_value() == oi.girth.has_value());
    if (shape.invariants.girth && oi.girth)
      CHECK(*shape.invariants.girth == static_cast<std::uint32_t>(*oi.girth));
  }
}
