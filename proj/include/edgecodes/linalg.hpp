#pragma once

// Dense exact linear algebra over F_q.

#include <cstddef>
#include <span>
#include <vector>

#include "edgecodes/gf.hpp"

namespace edgecodes::linalg {

using gf::Code;

class Matrix {
 public:
  Matrix(gf::FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(gf::FieldPtr field, std::size_t cols, const std::vector<std::vector<Code>>& rows);

  const gf::FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Code& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Code at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Code> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Code> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Code> values);
  /// Rows of `other` appended below this matrix.
  void append_rows(const Matrix& other);
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const Matrix& other) const;

 private:
  gf::FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> data_;
};

/// dst += factor * src, elementwise.
void axpy(std::span<Code> dst, std::span<const Code> src, Code factor, const gf::Field& field);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i, strictly increasing
};

/// Reduced row-echelon form; the pivot is the first nonzero entry in column order.
Echelon rref(Matrix m);

/// v minus its projection onto the row space of an RREF; zero exactly when v
/// lies in that row space.
std::vector<Code> residual(const Echelon& echelon, std::span<const Code> v);

/// Pivot columns of a row-echelon form (forward elimination only).
std::vector<std::size_t> pivot_columns(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0} as the rows of the returned matrix, one vector per
/// free column of the RREF, with a 1 at that column.
Matrix kernel_basis(const Matrix& m);

Matrix transpose(const Matrix& m);

/// m * v.
std::vector<Code> apply(const Matrix& m, std::span<const Code> v);

/// a * b.
Matrix multiply(const Matrix& a, const Matrix& b);

/// True when v lies in the row space of m, decided by rank(m) == rank(m + v).
bool in_row_span(const Matrix& m, std::span<const Code> v);

bool is_zero(std::span<const Code> v);

}  // namespace edgecodes::linalg
