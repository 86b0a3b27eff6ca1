#include "bdg/gf2.hpp"

#include <cassert>
#include <stdexcept>

namespace bdg {

Gf2Matrix::Gf2Matrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(std::size_t{rows} * words_, 0) {}

Gf2Matrix Gf2Matrix::identity(unsigned n) {
  Gf2Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::block_diagonal(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (unsigned r = 0; r < a.rows_; ++r)
    for (unsigned c = 0; c < a.cols_; ++c)
      if (a.get(r, c)) m.set(r, c, true);
  for (unsigned r = 0; r < b.rows_; ++r)
    for (unsigned c = 0; c < b.cols_; ++c)
      if (b.get(r, c)) m.set(a.rows_ + r, a.cols_ + c, true);
  return m;
}

Gf2Matrix Gf2Matrix::symplectic_gram(unsigned m) {
  Gf2Matrix j(2 * m, 2 * m);
  for (unsigned i = 0; i < m; ++i) {
    j.set(i, m + i, true);
    j.set(m + i, i, true);
  }
  return j;
}

bool Gf2Matrix::get(unsigned r, unsigned c) const {
  assert(r < rows_ && c < cols_);
  return (row(r)[c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(unsigned r, unsigned c, bool v) {
  assert(r < rows_ && c < cols_);
  std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (v)
    row(r)[c / 64] |= bit;
  else
    row(r)[c / 64] &= ~bit;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Gf2Matrix: dimension mismatch");
  Gf2Matrix out(rows_, o.cols_);
  // Row r of the product is the XOR of rows k of `o` where this(r, k) = 1.
  for (unsigned r = 0; r < rows_; ++r) {
    for (unsigned k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = o.row(k);
      std::uint64_t* dst = out.row(r);
      for (unsigned w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Gf2Matrix: dimension mismatch");
  Gf2Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= o.data_[i];
  return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix out(cols_, rows_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

Gf2Matrix Gf2Matrix::pow(unsigned long long e) const {
  if (rows_ != cols_) throw std::invalid_argument("Gf2Matrix: pow needs a square matrix");
  Gf2Matrix result = identity(rows_);
  Gf2Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

unsigned Gf2Matrix::rank() const {
  Gf2Matrix m = *this;
  unsigned r = 0;
  for (unsigned c = 0; c < cols_ && r < rows_; ++c) {
    unsigned pivot = r;
    while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (unsigned w = 0; w < words_; ++w) std::swap(m.row(r)[w], m.row(pivot)[w]);
    for (unsigned i = r + 1; i < rows_; ++i) {
      if (!m.get(i, c)) continue;
      for (unsigned w = 0; w < words_; ++w) m.row(i)[w] ^= m.row(r)[w];
    }
    ++r;
  }
  return r;
}

Bits128 Gf2Matrix::column(unsigned c) const {
  assert(rows_ <= 128);
  Bits128 v;
  for (unsigned r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

Bits128 Gf2Matrix::apply(const Bits128& v) const {
  assert(rows_ <= 128 && cols_ <= 128);
  Bits128 out;
  for (unsigned r = 0; r < rows_; ++r) {
    Bits128 rowbits;
    rowbits.lo = row(r)[0];
    if (words_ > 1) rowbits.hi = row(r)[1];
    if (dot_parity(rowbits, v)) out.set(r);
  }
  return out;
}

}  // namespace bdg
