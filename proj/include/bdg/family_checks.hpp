#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bdg/gf2.hpp"
#include "bdg/group.hpp"

namespace bdg {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

// Machine-readable pass/fail list; a failed check never aborts the rest.
struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = true;

  void add(std::string name, std::string expected, std::string actual);
  void add_bool(std::string name, bool passed);
  const CheckResult* find(const std::string& name) const;
};

struct ActionMatrices {
  Gf2Matrix xa, ya, xb, yb;
};

// The four (p-1)x(p-1) generator-image matrices, built from p alone.
ActionMatrices build_action_matrices(std::uint32_t p);
// Same matrices as stored in g.
ActionMatrices action_matrices(const FamilyGroup& g);

// Checks every defining relation of E under the engine's multiply and, for
// p <= 7, confirms |E| = 2^{2p-1} by closing the E-generators under
// multiplication. The mul hook exists so tests can substitute a corrupted
// product rule.
using MulFn = std::function<GroupElement(const GroupElement&, const GroupElement&)>;
VerificationReport verify_presentation(const FamilyGroup& g);
VerificationReport verify_presentation(const FamilyGroup& g, const MulFn& mul);

// Matrix-level verification that A and B extend to automorphisms a, b with
// a^p = b^2 = (ab)^2 = 1 on both the E-blocks and the <n1,n2> action, and
// that both block maps preserve the symplectic pairing
// <(e,h),(e',h')> = <e,h'> + <h,e'> (i.e. T^t J T = J).
VerificationReport verify_dihedral_action(std::uint32_t p);
VerificationReport verify_dihedral_action(const ActionMatrices& m, std::uint32_t p);

// Dimension of the fixed space of the named automorphism on E/<z>, i.e. of
// ker(T + I) on GF(2)^{2(p-1)}.
std::uint32_t fixed_space_of_a(std::uint32_t p);
std::uint32_t fixed_space_of_b(std::uint32_t p);

}  // namespace bdg
