#include "bdg/class_analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace bdg {

namespace {

// Conjugating generators with precomputed inverses. n1 and z are central.
std::vector<std::pair<GroupElement, GroupElement>> conjugating_generators(const FamilyGroup& g) {
  std::vector<std::pair<GroupElement, GroupElement>> gens;
  auto add = [&](const GroupElement& h) { gens.emplace_back(h, g.inverse(h)); };
  add(g.gen_n2());
  for (std::uint32_t i = 1; i < g.p(); ++i) add(g.gen_x(i));
  for (std::uint32_t i = 1; i < g.p(); ++i) add(g.gen_y(i));
  add(g.gen_a());
  add(g.gen_b());
  return gens;
}

void check_gate(const FamilyGroup& g, std::uint32_t max_p, const char* what) {
  std::uint32_t effective = std::min(max_p, kMaxEnumerationPrime);
  if (g.p() > effective)
    throw GateError(std::string(what) + ": p = " + std::to_string(g.p()) +
                    " exceeds the enumeration gate (max " + std::to_string(effective) + ")");
}

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

Stratum stratum_of(const GroupElement& u) {
  if (u.b_exp) return Stratum::ReflectionCoset;
  return u.a_exp ? Stratum::RotationCoset : Stratum::InsideN;
}

ConjugacyClass conjugacy_class_of(const FamilyGroup& g, const GroupElement& u) {
  auto gens = conjugating_generators(g);
  std::unordered_set<std::uint64_t> seen;
  std::vector<GroupElement> frontier{u};
  std::uint64_t start = g.element_index(u);
  seen.insert(start);
  std::uint64_t min_index = start;
  while (!frontier.empty()) {
    GroupElement v = frontier.back();
    frontier.pop_back();
    for (const auto& [h, h_inv] : gens) {
      GroupElement w = g.multiply(g.multiply(h_inv, v), h);
      std::uint64_t k = g.element_index(w);
      if (seen.insert(k).second) {
        min_index = std::min(min_index, k);
        frontier.push_back(w);
      }
    }
  }
  return {g.element_from_index(min_index), seen.size()};
}

ClassTable class_table(const FamilyGroup& g, std::uint32_t max_p) {
  check_gate(g, max_p, "class_table");
  const std::uint64_t n = g.order();
  auto gens = conjugating_generators(g);

  Bitmap seen(n);
  std::vector<ConjugacyClass> classes;
  std::vector<GroupElement> frontier;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (seen.test(k)) continue;
    GroupElement rep = g.element_from_index(k);
    seen.set(k);
    std::uint64_t size = 1;
    frontier.clear();
    frontier.push_back(rep);
    while (!frontier.empty()) {
      GroupElement v = frontier.back();
      frontier.pop_back();
      for (const auto& [h, h_inv] : gens) {
        GroupElement w = g.multiply(g.multiply(h_inv, v), h);
        std::uint64_t wi = g.element_index(w);
        if (!seen.test(wi)) {
          seen.set(wi);
          ++size;
          frontier.push_back(w);
        }
      }
    }
    // All indices below k belong to earlier classes, so k is the minimal
    // index of this class and rep is the canonical representative.
    classes.push_back({rep, size});
  }

  ClassTable table{g.params(), std::move(classes), 0};
  for (const auto& c : table.classes)
    if (c.size == 1) ++table.center_order;
  std::sort(table.classes.begin(), table.classes.end(),
            [&g](const ConjugacyClass& a, const ConjugacyClass& b) {
              if (a.size != b.size) return a.size < b.size;
              return g.element_index(a.representative) < g.element_index(b.representative);
            });
  return table;
}

std::vector<GroupElement> center(const FamilyGroup& g, std::uint32_t max_p) {
  check_gate(g, max_p, "center");
  std::vector<GroupElement> result;
  for (const GroupElement& u : g.elements()) {
    bool central = true;
    for (const GroupElement& h : g.generators()) {
      if (g.multiply(u, h) != g.multiply(h, u)) {
        central = false;
        break;
      }
    }
    if (central) result.push_back(u);
  }
  return result;
}

std::uint64_t centralizer_order(const FamilyGroup& g, const GroupElement& u) {
  return g.order() / conjugacy_class_of(g, u).size;
}

std::uint64_t centralizer_order_direct(const FamilyGroup& g, const GroupElement& u,
                                       std::uint32_t max_p) {
  check_gate(g, max_p, "centralizer_order_direct");
  std::uint64_t count = 0;
  for (const GroupElement& v : g.elements())
    if (g.multiply(u, v) == g.multiply(v, u)) ++count;
  return count;
}

std::vector<GroupElement> centralizer_of_b_in_e(const FamilyGroup& g) {
  const std::uint32_t p = g.p();
  if (p > 7) throw GateError("centralizer_of_b_in_e requires p <= 7");
  const GroupElement b = g.gen_b();

  std::vector<GroupElement> fixed;
  GroupElement e;
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << (p - 1)); ++eps) {
    for (std::uint64_t eta = 0; eta < (std::uint64_t{1} << (p - 1)); ++eta) {
      for (std::uint8_t nu = 0; nu < 2; ++nu) {
        e.x_bits.lo = eps;
        e.y_bits.lo = eta;
        e.z_exp = nu;
        if (g.conjugate(e, b) == e) fixed.push_back(e);
      }
    }
  }
  std::sort(fixed.begin(), fixed.end(), [&g](const GroupElement& u, const GroupElement& v) {
    return g.element_index(u) < g.element_index(v);
  });

  // Cross-check against the span of {x_i x_{p-i}}, {y_i y_{p-i}}, z.
  std::vector<GroupElement> basis;
  for (std::uint32_t i = 1; 2 * i < p; ++i) {
    basis.push_back(g.multiply(g.gen_x(i), g.gen_x(p - i)));
    basis.push_back(g.multiply(g.gen_y(i), g.gen_y(p - i)));
  }
  basis.push_back(g.gen_z());
  std::vector<GroupElement> span;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    GroupElement acc = g.identity();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((mask >> i) & 1) acc = g.multiply(acc, basis[i]);
    span.push_back(acc);
  }
  std::sort(span.begin(), span.end(), [&g](const GroupElement& u, const GroupElement& v) {
    return g.element_index(u) < g.element_index(v);
  });
  span.erase(std::unique(span.begin(), span.end()), span.end());
  if (span != fixed)
    throw std::logic_error("centralizer_of_b_in_e: fixed set differs from the generating span");

  return fixed;
}

std::set<std::uint64_t> m_orbit_sizes_on_e(const FamilyGroup& g) {
  const std::uint32_t p = g.p();
  if (p > 7) throw GateError("m_orbit_sizes_on_e requires p <= 7");
  const GroupElement a = g.gen_a();
  const GroupElement b = g.gen_b();

  auto pack = [p](const GroupElement& u) -> std::uint32_t {
    return (static_cast<std::uint32_t>(u.x_bits.lo) << p) |
           (static_cast<std::uint32_t>(u.y_bits.lo) << 1) | u.z_exp;
  };

  std::vector<bool> seen(std::uint64_t{1} << (2 * p - 1), false);
  std::set<std::uint64_t> sizes;
  GroupElement e;
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << (p - 1)); ++eps) {
    for (std::uint64_t eta = 0; eta < (std::uint64_t{1} << (p - 1)); ++eta) {
      if (eps == 0 && eta == 0) continue;  // {1, z} = Z(E) is excluded
      for (std::uint8_t nu = 0; nu < 2; ++nu) {
        e.x_bits.lo = eps;
        e.y_bits.lo = eta;
        e.z_exp = nu;
        std::uint32_t k0 = pack(e);
        if (seen[k0]) continue;
        seen[k0] = true;
        std::uint64_t size = 1;
        std::vector<GroupElement> frontier{e};
        while (!frontier.empty()) {
          GroupElement v = frontier.back();
          frontier.pop_back();
          for (const GroupElement& h : {a, b}) {
            GroupElement w = g.conjugate(v, h);
            std::uint32_t k = pack(w);
            if (!seen[k]) {
              seen[k] = true;
              ++size;
              frontier.push_back(w);
            }
          }
        }
        sizes.insert(size);
      }
    }
  }
  return sizes;
}

std::map<Stratum, std::set<std::uint64_t>> coset_stratum_sizes(const FamilyGroup& g,
                                                               std::uint32_t max_p) {
  ClassTable table = class_table(g, max_p);
  std::map<Stratum, std::set<std::uint64_t>> result;
  for (const auto& c : table.classes) {
    if (c.size == 1) continue;
    result[stratum_of(c.representative)].insert(c.size);
  }
  return result;
}

std::set<std::uint64_t> noncentral_class_sizes(const ClassTable& table) {
  std::set<std::uint64_t> sizes;
  for (const auto& c : table.classes)
    if (c.size > 1) sizes.insert(c.size);
  return sizes;
}

}  // namespace bdg
