#include "edgecodes/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgecodes::linalg {

Matrix::Matrix(gf::FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(gf::FieldPtr field, std::size_t cols, const std::vector<std::vector<Code>>& rows)
    : Matrix(std::move(field), 0, cols) {
  for (const auto& r : rows) append_row(r);
}

void Matrix::append_row(std::span<const Code> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  gf::require_same(*field_, *other.field_);
  if (other.cols_ != cols_) throw std::invalid_argument("stacked matrices differ in width");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

bool Matrix::operator==(const Matrix& other) const {
  return *field_ == *other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

// P(P-1) < 256 for these primes, so the update fits in a byte before the
// reduction and the loop vectorizes.
template <unsigned P>
void axpy_small_prime(Code* dst, const Code* src, Code factor, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = Code((dst[j] + factor * src[j]) % P);
}

void axpy_prime(Code* dst, const Code* src, Code factor, std::size_t n, unsigned p) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = Code((unsigned(dst[j]) + unsigned(factor) * src[j]) % p);
}

void axpy_char2(Code* dst, const Code* src, const Code* mul_row, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] ^= mul_row[src[j]];
}

void axpy_tables(Code* dst, const Code* src, const Code* mul_row, const gf::Field& field, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = field.add(dst[j], mul_row[src[j]]);
}

void scale(std::span<Code> row, Code factor, const gf::Field& field) {
  const Code* mul_row = field.mul_row(factor);
  for (Code& x : row) x = mul_row[x];
}

// Gaussian elimination; `full` also clears above each pivot (RREF).
std::vector<std::size_t> eliminate(Matrix& m, bool full) {
  const gf::Field& field = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    scale(m.row(r).subspan(c), field.inv(m.at(r, c)), field);
    auto pivot_tail = std::span<const Code>(m.row(r)).subspan(c);
    for (std::size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r) continue;
      const Code f = m.at(i, c);
      if (f != 0) axpy(m.row(i).subspan(c), pivot_tail, field.neg(f), field);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

void axpy(std::span<Code> dst, std::span<const Code> src, Code factor, const gf::Field& field) {
  if (dst.size() != src.size()) throw std::invalid_argument("axpy length mismatch");
  if (factor == 0) return;
  const std::size_t n = dst.size();
  if (field.is_prime()) {
    switch (field.p()) {
      case 2:
        for (std::size_t j = 0; j < n; ++j) dst[j] ^= src[j];
        return;
      case 3: return axpy_small_prime<3>(dst.data(), src.data(), factor, n);
      case 5: return axpy_small_prime<5>(dst.data(), src.data(), factor, n);
      case 7: return axpy_small_prime<7>(dst.data(), src.data(), factor, n);
      case 11: return axpy_small_prime<11>(dst.data(), src.data(), factor, n);
      case 13: return axpy_small_prime<13>(dst.data(), src.data(), factor, n);
      default: return axpy_prime(dst.data(), src.data(), factor, n, field.p());
    }
  }
  if (field.p() == 2) return axpy_char2(dst.data(), src.data(), field.mul_row(factor), n);
  axpy_tables(dst.data(), src.data(), field.mul_row(factor), field, n);
}

Echelon rref(Matrix m) {
  auto pivots = eliminate(m, true);
  return Echelon{std::move(m), std::move(pivots)};
}

std::vector<Code> residual(const Echelon& echelon, std::span<const Code> v) {
  const Matrix& r = echelon.reduced;
  if (v.size() != r.cols()) throw std::invalid_argument("vector length does not match matrix width");
  const gf::Field& field = *r.field();
  std::vector<Code> out(v.begin(), v.end());
  for (std::size_t i = 0; i < echelon.pivots.size(); ++i) {
    const Code f = out[echelon.pivots[i]];
    if (f != 0) axpy(out, r.row(i), field.neg(f), field);
  }
  return out;
}

std::vector<std::size_t> pivot_columns(Matrix m) { return eliminate(m, false); }

std::size_t rank(const Matrix& m) { return pivot_columns(m).size(); }

Matrix kernel_basis(const Matrix& m) {
  const gf::Field& field = *m.field();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix basis(m.field(), 0, m.cols());
  std::vector<Code> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(reduced.at(i, free));
    basis.append_row(v);
  }
  return basis;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

std::vector<Code> apply(const Matrix& m, std::span<const Code> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match matrix width");
  const gf::Field& field = *m.field();
  std::vector<Code> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Code acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (v[c] != 0 && row[c] != 0) acc = field.add(acc, field.mul(row[c], v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  gf::require_same(*a.field(), *b.field());
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a.at(i, k) != 0) axpy(out.row(i), b.row(k), a.at(i, k), *a.field());
  return out;
}

bool in_row_span(const Matrix& m, std::span<const Code> v) {
  Matrix stacked = m;
  stacked.append_row(v);
  return rank(stacked) == rank(m);
}

bool is_zero(std::span<const Code> v) {
  return std::all_of(v.begin(), v.end(), [](Code c) { return c == 0; });
}

}  // namespace edgecodes::linalg
