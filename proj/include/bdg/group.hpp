#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdg/gf2.hpp"

namespace bdg {

// Thrown when an enumeration-bound operation is asked for a parameter beyond
// its resource gate.
class GateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest p for which the element index (and hence full enumeration) is
// supported: |G| = 2^{2p} p^3 must index a flat bitmap.
inline constexpr std::uint32_t kMaxEnumerationPrime = 13;
// Default resource gate for operations that materialize all |G| elements.
inline constexpr std::uint32_t kDefaultEnumerationGate = 7;
// Largest p for which the group structure (generators, action matrices) is
// built at all.
inline constexpr std::uint32_t kMaxSymbolicPrime = 101;

struct GroupParams {
  std::uint32_t p;

  // Validates that p is an odd prime with 3 <= p <= 101.
  explicit GroupParams(std::uint32_t p);
};

// One element of G(p) in normal form
//   n1^n1_exp n2^n2_exp x^x_bits y^y_bits z^z_exp a^a_exp b^b_exp,
// residues reduced mod p, bit vectors of length p-1.
struct GroupElement {
  std::uint32_t n1_exp = 0;
  std::uint32_t n2_exp = 0;
  Bits128 x_bits;
  Bits128 y_bits;
  std::uint8_t z_exp = 0;
  std::uint32_t a_exp = 0;
  std::uint8_t b_exp = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class FamilyGroup;

// Forward iteration over all elements of G in ascending index order.
class ElementIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = GroupElement;
  using difference_type = std::int64_t;

  ElementIterator() = default;
  ElementIterator(const FamilyGroup* g, std::uint64_t index);

  const GroupElement& operator*() const { return current_; }
  const GroupElement* operator->() const { return &current_; }
  ElementIterator& operator++();
  friend bool operator==(const ElementIterator& a, const ElementIterator& b) {
    return a.index_ == b.index_;
  }

 private:
  const FamilyGroup* group_ = nullptr;
  std::uint64_t index_ = 0;
  GroupElement current_;
};

class ElementRange {
 public:
  ElementRange(const FamilyGroup* g, std::uint64_t count) : group_(g), count_(count) {}
  ElementIterator begin() const { return {group_, 0}; }
  ElementIterator end() const { return {nullptr, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  const FamilyGroup* group_;
  std::uint64_t count_;
};

// The group G(p) = (<n1> x <n2> x E) x| <a,b>, where E is the extraspecial
// 2-group of plus type of order 2^{2p-1} and <a,b> is dihedral of order 2p.
// Everything is immutable after construction; all member functions are pure
// and safe to call concurrently.
//
// Conventions (fixed once, used everywhere):
//   * conjugation is u^h = h^-1 u h, and the semidirect product satisfies
//     a^-1 n a = n^A for n in N, so the generator action maps are literal;
//   * normal form order: n1, n2, x (ascending), y (ascending), z, a, b;
//   * merging E-parts, moving y^eta past x^eps' contributes z^<eta, eps'>;
//   * dihedral rewriting uses b a^k = a^-k b.
class FamilyGroup {
 public:
  explicit FamilyGroup(GroupParams params);

  const GroupParams& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }

  // |G| = 2^{2p} p^3. Throws std::overflow_error if this exceeds 64 bits
  // (p >= 29); such groups still support the symbolic operations.
  std::uint64_t order() const;
  std::uint64_t e_order() const;  // |E| = 2^{2p-1}
  std::uint64_t n_order() const;  // |N| = p^2 2^{2p-1}
  std::uint64_t m_order() const { return 2ull * params_.p; }

  GroupElement identity() const { return GroupElement{}; }
  GroupElement multiply(const GroupElement& u, const GroupElement& v) const;
  GroupElement inverse(const GroupElement& u) const;
  // h^-1 u h
  GroupElement conjugate(const GroupElement& u, const GroupElement& h) const;
  // u^-1 h^-1 u h
  GroupElement commutator(const GroupElement& u, const GroupElement& h) const;

  // Mixed-radix perfect index: digits alpha, beta, a-exp, b-exp, x, y, z from
  // most to least significant. Bijective with [0, |G|). Requires p <= 13.
  std::uint64_t element_index(const GroupElement& u) const;
  GroupElement element_from_index(std::uint64_t k) const;
  ElementRange elements() const;

  // n1, n2, x_1..x_{p-1}, y_1..y_{p-1}, z, a, b
  const std::vector<GroupElement>& generators() const { return generators_; }
  GroupElement gen_n1() const { return generators_[0]; }
  GroupElement gen_n2() const { return generators_[1]; }
  GroupElement gen_x(std::uint32_t i) const;  // 1-based, 1 <= i <= p-1
  GroupElement gen_y(std::uint32_t i) const;
  GroupElement gen_z() const { return generators_[2 * (params_.p - 1) + 2]; }
  GroupElement gen_a() const { return generators_[2 * (params_.p - 1) + 3]; }
  GroupElement gen_b() const { return generators_[2 * (params_.p - 1) + 4]; }

  // (p-1)x(p-1) matrices over GF(2); column i-1 is the coordinate vector of
  // the image of the i-th generator under the named map.
  const Gf2Matrix& xa_matrix() const { return xa_; }
  const Gf2Matrix& ya_matrix() const { return ya_; }
  const Gf2Matrix& xb_matrix() const { return xb_; }
  const Gf2Matrix& yb_matrix() const { return yb_; }

 private:
  // Exponent action n -> n^m = m^-1 n m of one m = a^i b^j on N, tabulated:
  // column bit-vectors for the x- and y-blocks, 2x2 matrix mod p on the
  // <n1,n2> exponents.
  struct MAction {
    std::vector<Bits128> x_cols;
    std::vector<Bits128> y_cols;
    std::uint32_t n00, n01, n10, n11;
  };

  GroupParams params_;
  std::vector<GroupElement> generators_;
  Gf2Matrix xa_, ya_, xb_, yb_;
  std::vector<MAction> actions_;      // indexed by 2*a_exp + b_exp
  std::vector<std::uint32_t> m_inv_;  // index of m^-1, same indexing

  void require_indexable() const;
  static Bits128 apply_cols(const std::vector<Bits128>& cols, const Bits128& v);
};

// Normal-form word, e.g. "n1^2 x1 x3 y2 z a^2 b"; identity renders as "1".
std::string to_word_string(const FamilyGroup& g, const GroupElement& u);

}  // namespace bdg
