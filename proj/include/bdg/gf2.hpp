#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bdg {

// 128-bit vector over GF(2). Wide enough for the x/y exponent vectors of
// every supported parameter (p <= 101 needs p-1 <= 100 bits).
struct Bits128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  constexpr bool test(unsigned i) const {
    return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
  }
  constexpr void set(unsigned i) {
    if (i < 64)
      lo |= std::uint64_t{1} << i;
    else
      hi |= std::uint64_t{1} << (i - 64);
  }
  constexpr void flip(unsigned i) {
    if (i < 64)
      lo ^= std::uint64_t{1} << i;
    else
      hi ^= std::uint64_t{1} << (i - 64);
  }
  constexpr bool any() const { return (lo | hi) != 0; }
  constexpr int popcount() const {
    return std::popcount(lo) + std::popcount(hi);
  }
  constexpr Bits128& operator^=(const Bits128& o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend constexpr Bits128 operator^(Bits128 a, const Bits128& b) {
    a ^= b;
    return a;
  }
  friend constexpr bool operator==(const Bits128&, const Bits128&) = default;
};

// Parity of <a, b> over GF(2).
constexpr unsigned dot_parity(const Bits128& a, const Bits128& b) {
  return (std::popcount(a.lo & b.lo) + std::popcount(a.hi & b.hi)) & 1u;
}

// Dense matrix over GF(2), row-major bit rows. Sized for the action and
// symplectic checks (dimensions up to 2(p-1) <= 200), not for bulk linear
// algebra.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(unsigned rows, unsigned cols);

  static Gf2Matrix identity(unsigned n);
  static Gf2Matrix block_diagonal(const Gf2Matrix& a, const Gf2Matrix& b);
  // Gram matrix of the pairing <(e,h),(e',h')> = <e,h'> + <h,e'> on
  // GF(2)^{2m}: [[0, I], [I, 0]].
  static Gf2Matrix symplectic_gram(unsigned m);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  bool get(unsigned r, unsigned c) const;
  void set(unsigned r, unsigned c, bool v);

  Gf2Matrix operator*(const Gf2Matrix& o) const;
  Gf2Matrix operator+(const Gf2Matrix& o) const;
  bool operator==(const Gf2Matrix& o) const;

  Gf2Matrix transposed() const;
  Gf2Matrix pow(unsigned long long e) const;

  unsigned rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }
  unsigned kernel_dimension() const { return cols_ - rank(); }

  // Column c as a bit vector (requires rows <= 128).
  Bits128 column(unsigned c) const;
  // Matrix-vector product (requires rows, cols <= 128).
  Bits128 apply(const Bits128& v) const;

 private:
  unsigned rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;

  const std::uint64_t* row(unsigned r) const { return data_.data() + std::size_t{r} * words_; }
  std::uint64_t* row(unsigned r) { return data_.data() + std::size_t{r} * words_; }
};

}  // namespace bdg
