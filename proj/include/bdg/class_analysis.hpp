#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bdg/group.hpp"

namespace bdg {

struct ConjugacyClass {
  GroupElement representative;  // smallest element index within the class
  std::uint64_t size = 0;
};

struct ClassTable {
  GroupParams params;
  std::vector<ConjugacyClass> classes;  // sorted by (size, representative index)
  std::uint64_t center_order = 0;
};

// The three cases of the class-size analysis, read off the normal form:
// (a_exp, b_exp) = (0,0) inside N, (!=0, 0) in <N,a> \ N, (*, 1) outside
// <N,a>. Conjugation preserves the case, so it is a class invariant.
enum class Stratum { InsideN, RotationCoset, ReflectionCoset };

Stratum stratum_of(const GroupElement& u);

// Orbit of u under conjugation, closed over the generator list (n2, x_i, y_i,
// a, b; n1 and z are central and skipped). Memory scales with the class size,
// not with |G|.
ConjugacyClass conjugacy_class_of(const FamilyGroup& g, const GroupElement& u);

// Partitions all |G| elements into conjugacy classes with a flat |G|-bit
// seen-set over the perfect index. Deterministic: representatives are the
// ascending-scan minima and classes are sorted by (size, representative
// index). Throws GateError when p exceeds the gate.
ClassTable class_table(const FamilyGroup& g, std::uint32_t max_p = kDefaultEnumerationGate);

// Elements commuting with every generator, ascending index order. Must equal
// <n1, z> (order 2p).
std::vector<GroupElement> center(const FamilyGroup& g,
                                 std::uint32_t max_p = kDefaultEnumerationGate);

// |C_G(u)| = |G| / |u^G| (always available for indexable p).
std::uint64_t centralizer_order(const FamilyGroup& g, const GroupElement& u);
// |C_G(u)| by scanning all elements; gated.
std::uint64_t centralizer_order_direct(const FamilyGroup& g, const GroupElement& u,
                                       std::uint32_t max_p = kDefaultEnumerationGate);

// {e in E : b^-1 e b = e}, ascending index order; checked against the span of
// {x_i x_{p-i}}, {y_i y_{p-i}}, z before returning. Requires p <= 7.
std::vector<GroupElement> centralizer_of_b_in_e(const FamilyGroup& g);

// Sizes of the orbits of <a,b> acting by conjugation on E minus {1, z}.
// Requires p <= 7.
std::set<std::uint64_t> m_orbit_sizes_on_e(const FamilyGroup& g);

// Class sizes occurring in each stratum, noncentral classes only.
std::map<Stratum, std::set<std::uint64_t>> coset_stratum_sizes(
    const FamilyGroup& g, std::uint32_t max_p = kDefaultEnumerationGate);

// Noncentral class sizes as a set.
std::set<std::uint64_t> noncentral_class_sizes(const ClassTable& table);

}  // namespace bdg
