#include "bdg/group.hpp"

#include <cassert>

namespace bdg {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Images of the generator maps, as (p-1)x(p-1) matrices with column i-1 the
// coordinate vector of the image of the i-th generator:
//   x_i^A = x_{i+1} (i < p-1),  x_{p-1}^A = x_1 ... x_{p-1}
//   y_i^A = y_1 y_{i+1} (i < p-1),  y_{p-1}^A = y_1
//   x_i^B = x_{p-i},  y_i^B = y_{p-i}
Gf2Matrix build_xa(std::uint32_t p) {
  Gf2Matrix m(p - 1, p - 1);
  for (std::uint32_t i = 0; i + 1 < p - 1; ++i) m.set(i + 1, i, true);
  for (std::uint32_t r = 0; r < p - 1; ++r) m.set(r, p - 2, true);
  return m;
}

Gf2Matrix build_ya(std::uint32_t p) {
  Gf2Matrix m(p - 1, p - 1);
  for (std::uint32_t i = 0; i + 1 < p - 1; ++i) {
    m.set(0, i, true);
    m.set(i + 1, i, true);
  }
  m.set(0, p - 2, true);
  return m;
}

Gf2Matrix build_reversal(std::uint32_t p) {
  Gf2Matrix m(p - 1, p - 1);
  for (std::uint32_t i = 0; i < p - 1; ++i) m.set(p - 2 - i, i, true);
  return m;
}

}  // namespace

GroupParams::GroupParams(std::uint32_t p_in) : p(p_in) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("GroupParams: p must be an odd prime >= 3");
  if (p > kMaxSymbolicPrime)
    throw std::invalid_argument("GroupParams: p exceeds the supported range (p <= 101)");
}

FamilyGroup::FamilyGroup(GroupParams params) : params_(params) {
  const std::uint32_t p = params_.p;

  generators_.reserve(2 * (p - 1) + 5);
  GroupElement n1, n2, z, a, b;
  n1.n1_exp = 1;
  n2.n2_exp = 1;
  z.z_exp = 1;
  a.a_exp = 1;
  b.b_exp = 1;
  generators_.push_back(n1);
  generators_.push_back(n2);
  for (std::uint32_t i = 0; i < p - 1; ++i) {
    GroupElement x;
    x.x_bits.set(i);
    generators_.push_back(x);
  }
  for (std::uint32_t i = 0; i < p - 1; ++i) {
    GroupElement y;
    y.y_bits.set(i);
    generators_.push_back(y);
  }
  generators_.push_back(z);
  generators_.push_back(a);
  generators_.push_back(b);

  xa_ = build_xa(p);
  ya_ = build_ya(p);
  xb_ = build_reversal(p);
  yb_ = build_reversal(p);

  // Tabulate the exponent action of every m = a^i b^j. The action on the
  // E-part is linear on (x, y) with no z term: generator images under A and B
  // are z-free products of pairwise-commuting generators. Composition order
  // n^{a^i b^j} = (n^{a^i})^{b^j} gives matrix Xb^j Xa^i.
  actions_.resize(2 * p);
  m_inv_.resize(2 * p);
  Gf2Matrix xa_pow = Gf2Matrix::identity(p - 1);
  Gf2Matrix ya_pow = Gf2Matrix::identity(p - 1);
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      MAction& act = actions_[2 * i + j];
      Gf2Matrix xm = j ? xb_ * xa_pow : xa_pow;
      Gf2Matrix ym = j ? yb_ * ya_pow : ya_pow;
      act.x_cols.resize(p - 1);
      act.y_cols.resize(p - 1);
      for (std::uint32_t c = 0; c < p - 1; ++c) {
        act.x_cols[c] = xm.column(c);
        act.y_cols[c] = ym.column(c);
      }
      // <n1,n2>: a^i maps (alpha, beta) to (alpha + i beta, beta); b then
      // negates beta.
      act.n00 = 1;
      act.n01 = i;
      act.n10 = 0;
      act.n11 = j ? p - 1 : 1;
      m_inv_[2 * i + j] = j ? 2 * i + 1 : 2 * ((p - i) % p);
    }
    xa_pow = xa_pow * xa_;
    ya_pow = ya_pow * ya_;
  }
}

std::uint64_t FamilyGroup::order() const {
  const std::uint32_t p = params_.p;
  if (p > 23) throw std::overflow_error("FamilyGroup::order: 2^{2p} p^3 exceeds 64 bits");
  return (std::uint64_t{1} << (2 * p)) * p * p * p;
}

std::uint64_t FamilyGroup::e_order() const {
  const std::uint32_t p = params_.p;
  if (p > 31) throw std::overflow_error("FamilyGroup::e_order: 2^{2p-1} exceeds 64 bits");
  return std::uint64_t{1} << (2 * p - 1);
}

std::uint64_t FamilyGroup::n_order() const {
  return e_order() * params_.p * params_.p;
}

GroupElement FamilyGroup::gen_x(std::uint32_t i) const {
  assert(i >= 1 && i <= params_.p - 1);
  return generators_[1 + i];
}

GroupElement FamilyGroup::gen_y(std::uint32_t i) const {
  assert(i >= 1 && i <= params_.p - 1);
  return generators_[params_.p + i];
}

Bits128 FamilyGroup::apply_cols(const std::vector<Bits128>& cols, const Bits128& v) {
  Bits128 out;
  std::uint64_t w = v.lo;
  while (w) {
    unsigned i = std::countr_zero(w);
    out ^= cols[i];
    w &= w - 1;
  }
  w = v.hi;
  while (w) {
    unsigned i = std::countr_zero(w);
    out ^= cols[64 + i];
    w &= w - 1;
  }
  return out;
}

GroupElement FamilyGroup::multiply(const GroupElement& u, const GroupElement& v) const {
  const std::uint32_t p = params_.p;
  // u v = n_u m_u n_v m_v = n_u (n_v)^{m_u^-1} (m_u m_v)
  const MAction& act = actions_[m_inv_[2 * u.a_exp + u.b_exp]];

  std::uint32_t alpha = (std::uint64_t{act.n00} * v.n1_exp + std::uint64_t{act.n01} * v.n2_exp) % p;
  std::uint32_t beta = (std::uint64_t{act.n10} * v.n1_exp + std::uint64_t{act.n11} * v.n2_exp) % p;
  Bits128 eps = apply_cols(act.x_cols, v.x_bits);
  Bits128 eta = apply_cols(act.y_cols, v.y_bits);

  GroupElement r;
  r.n1_exp = (u.n1_exp + alpha) % p;
  r.n2_exp = (u.n2_exp + beta) % p;
  r.x_bits = u.x_bits ^ eps;
  r.y_bits = u.y_bits ^ eta;
  r.z_exp = u.z_exp ^ v.z_exp ^ static_cast<std::uint8_t>(dot_parity(u.y_bits, eps));
  r.a_exp = u.b_exp ? (u.a_exp + p - v.a_exp) % p : (u.a_exp + v.a_exp) % p;
  r.b_exp = u.b_exp ^ v.b_exp;
  return r;
}

GroupElement FamilyGroup::inverse(const GroupElement& u) const {
  const std::uint32_t p = params_.p;
  // u^-1 = m_u^-1 n_u^-1 = (n_u^-1)^{m_u} m_u^-1
  GroupElement n_inv;
  n_inv.n1_exp = (p - u.n1_exp) % p;
  n_inv.n2_exp = (p - u.n2_exp) % p;
  n_inv.x_bits = u.x_bits;
  n_inv.y_bits = u.y_bits;
  n_inv.z_exp = u.z_exp ^ static_cast<std::uint8_t>(dot_parity(u.x_bits, u.y_bits));

  const MAction& act = actions_[2 * u.a_exp + u.b_exp];
  GroupElement r;
  r.n1_exp = (std::uint64_t{act.n00} * n_inv.n1_exp + std::uint64_t{act.n01} * n_inv.n2_exp) % p;
  r.n2_exp = (std::uint64_t{act.n10} * n_inv.n1_exp + std::uint64_t{act.n11} * n_inv.n2_exp) % p;
  r.x_bits = apply_cols(act.x_cols, n_inv.x_bits);
  r.y_bits = apply_cols(act.y_cols, n_inv.y_bits);
  r.z_exp = n_inv.z_exp;
  std::uint32_t mi = m_inv_[2 * u.a_exp + u.b_exp];
  r.a_exp = mi / 2;
  r.b_exp = mi & 1;
  return r;
}

GroupElement FamilyGroup::conjugate(const GroupElement& u, const GroupElement& h) const {
  return multiply(multiply(inverse(h), u), h);
}

GroupElement FamilyGroup::commutator(const GroupElement& u, const GroupElement& h) const {
  return multiply(inverse(u), conjugate(u, h));
}

void FamilyGroup::require_indexable() const {
  if (params_.p > kMaxEnumerationPrime)
    throw GateError("element indexing and enumeration require p <= 13");
}

std::uint64_t FamilyGroup::element_index(const GroupElement& u) const {
  require_indexable();
  const std::uint32_t p = params_.p;
  std::uint64_t idx = u.n1_exp;
  idx = idx * p + u.n2_exp;
  idx = idx * p + u.a_exp;
  idx = idx * 2 + u.b_exp;
  idx = (idx << (p - 1)) | u.x_bits.lo;
  idx = (idx << (p - 1)) | u.y_bits.lo;
  idx = (idx << 1) | u.z_exp;
  return idx;
}

GroupElement FamilyGroup::element_from_index(std::uint64_t k) const {
  require_indexable();
  const std::uint32_t p = params_.p;
  if (k >= order()) throw std::out_of_range("element_from_index: index out of range");
  const std::uint64_t mask = (std::uint64_t{1} << (p - 1)) - 1;
  GroupElement u;
  u.z_exp = k & 1;
  k >>= 1;
  u.y_bits.lo = k & mask;
  k >>= (p - 1);
  u.x_bits.lo = k & mask;
  k >>= (p - 1);
  u.b_exp = k & 1;
  k >>= 1;
  u.a_exp = k % p;
  k /= p;
  u.n2_exp = k % p;
  u.n1_exp = k / p;
  return u;
}

ElementRange FamilyGroup::elements() const {
  require_indexable();
  return {this, order()};
}

ElementIterator::ElementIterator(const FamilyGroup* g, std::uint64_t index)
    : group_(g), index_(index) {
  if (group_) current_ = group_->element_from_index(index_);
}

ElementIterator& ElementIterator::operator++() {
  ++index_;
  if (group_ && index_ < group_->order()) current_ = group_->element_from_index(index_);
  return *this;
}

std::string to_word_string(const FamilyGroup& g, const GroupElement& u) {
  std::string s;
  auto append = [&s](const std::string& gen, std::uint64_t e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += gen;
    if (e > 1) s += "^" + std::to_string(e);
  };
  append("n1", u.n1_exp);
  append("n2", u.n2_exp);
  for (std::uint32_t i = 0; i < g.p() - 1; ++i)
    if (u.x_bits.test(i)) append("x" + std::to_string(i + 1), 1);
  for (std::uint32_t i = 0; i < g.p() - 1; ++i)
    if (u.y_bits.test(i)) append("y" + std::to_string(i + 1), 1);
  append("z", u.z_exp);
  append("a", u.a_exp);
  append("b", u.b_exp);
  return s.empty() ? "1" : s;
}

}  // namespace bdg
