#include "bdg/divisor_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace bdg {

namespace {

constexpr std::uint64_t kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& sieved_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Adjacency-list view with vertex ids 0..V-1: primes first (ascending), then
// sizes (ascending).
struct FlatGraph {
  std::size_t prime_count = 0;
  std::vector<std::vector<std::uint32_t>> adj;
};

FlatGraph flatten(const BipartiteDivisorGraph& g) {
  FlatGraph f;
  f.prime_count = g.prime_vertices.size();
  f.adj.resize(g.vertex_count());
  std::vector<std::uint64_t> primes(g.prime_vertices.begin(), g.prime_vertices.end());
  std::vector<std::uint64_t> sizes(g.size_vertices.begin(), g.size_vertices.end());
  auto prime_id = [&](std::uint64_t q) {
    return static_cast<std::uint32_t>(
        std::lower_bound(primes.begin(), primes.end(), q) - primes.begin());
  };
  auto size_id = [&](std::uint64_t x) {
    return static_cast<std::uint32_t>(
        f.prime_count + (std::lower_bound(sizes.begin(), sizes.end(), x) - sizes.begin()));
  };
  for (const auto& [q, x] : g.edges) {
    std::uint32_t u = prime_id(q), v = size_id(x);
    f.adj[u].push_back(v);
    f.adj[v].push_back(u);
  }
  return f;
}

}  // namespace

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint32_t q : sieved_primes()) {
    if (std::uint64_t{q} * q > n) break;
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) {
    // No factor <= 10^6 remains, so a cofactor below 10^12 is prime.
    if (n >= kSieveLimit * kSieveLimit && !is_prime_u64(n))
      throw std::out_of_range("distinct_prime_factors: composite cofactor beyond 10^12");
    factors.push_back(n);
  }
  return factors;
}

BipartiteDivisorGraph build_bdg(const std::set<std::uint64_t>& values) {
  BipartiteDivisorGraph g;
  for (std::uint64_t x : values) {
    if (x == 0) throw std::invalid_argument("build_bdg: values must be positive");
    if (x == 1) continue;
    g.size_vertices.insert(x);
    for (std::uint64_t q : distinct_prime_factors(x)) {
      g.prime_vertices.insert(q);
      g.edges.insert({q, x});
    }
  }
  return g;
}

GraphInvariants graph_invariants(const BipartiteDivisorGraph& g) {
  FlatGraph f = flatten(g);
  const std::size_t v = f.adj.size();
  GraphInvariants inv;

  std::vector<std::uint32_t> component(v, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> members;
  for (std::uint32_t s = 0; s < v; ++s) {
    if (component[s] != UINT32_MAX) continue;
    std::uint32_t id = inv.components++;
    members.emplace_back();
    std::queue<std::uint32_t> q;
    q.push(s);
    component[s] = id;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      members[id].push_back(u);
      for (std::uint32_t w : f.adj[u]) {
        if (component[w] == UINT32_MAX) {
          component[w] = id;
          q.push(w);
        }
      }
    }
  }

  // Diameter per component: max BFS eccentricity.
  std::vector<std::uint32_t> dist(v);
  for (const auto& comp : members) {
    std::uint32_t diameter = 0;
    for (std::uint32_t s : comp) {
      std::fill(dist.begin(), dist.end(), UINT32_MAX);
      std::queue<std::uint32_t> q;
      q.push(s);
      dist[s] = 0;
      while (!q.empty()) {
        std::uint32_t u = q.front();
        q.pop();
        diameter = std::max(diameter, dist[u]);
        for (std::uint32_t w : f.adj[u])
          if (dist[w] == UINT32_MAX) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
      }
    }
    inv.diameters.push_back(diameter);
  }

  // Girth: BFS from every vertex; a non-parent edge (u, w) closes a cycle of
  // length at most dist[u] + dist[w] + 1, and the bound is attained from any
  // vertex on a shortest cycle.
  std::uint32_t girth = UINT32_MAX;
  std::vector<std::uint32_t> parent(v);
  for (std::uint32_t s = 0; s < v; ++s) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    std::queue<std::uint32_t> q;
    q.push(s);
    dist[s] = 0;
    parent[s] = UINT32_MAX;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t w : f.adj[u]) {
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u] && u != parent[w]) {
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (girth != UINT32_MAX) inv.girth = girth;
  return inv;
}

GraphShape classify_shape(const BipartiteDivisorGraph& g) {
  GraphShape shape;
  shape.invariants = graph_invariants(g);

  const std::size_t m = g.prime_vertices.size();
  const std::size_t n = g.size_vertices.size();
  if (m > 0 && n > 0 && g.edges.size() == m * n) {
    shape.kind = GraphShape::Kind::CompleteBipartite;
    shape.m = static_cast<std::uint32_t>(m);
    shape.n = static_cast<std::uint32_t>(n);
    return shape;
  }

  if (shape.invariants.components == 1) {
    FlatGraph f = flatten(g);
    std::size_t deg1 = 0, deg2 = 0;
    for (const auto& nbrs : f.adj) {
      if (nbrs.size() == 1) ++deg1;
      if (nbrs.size() == 2) ++deg2;
    }
    const std::size_t v = f.adj.size();
    const std::size_t e = g.edges.size();
    if (deg2 == v && e == v) {
      shape.kind = GraphShape::Kind::Cycle;
      shape.length = static_cast<std::uint32_t>(e);
      return shape;
    }
    if (deg1 == 2 && deg1 + deg2 == v && e + 1 == v) {
      shape.kind = GraphShape::Kind::Path;
      shape.length = static_cast<std::uint32_t>(e);
      return shape;
    }
  }
  return shape;
}

}  // namespace bdg
