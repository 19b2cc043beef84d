#include <doctest.h>

#include <random>

#include "edgecodes/linalg.hpp"
#include "oracles.hpp"

using namespace edgecodes;
using linalg::Matrix;

namespace {

const std::vector<unsigned> kSizes{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 256};

// Random matrix of the given rank bound: a product of two random factors.
Matrix random_matrix(const gf::FieldPtr& f, std::size_t rows, std::size_t cols, std::size_t inner, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> pick(0, f->q() - 1);
  Matrix a(f, rows, inner), b(f, inner, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < inner; ++j) a.at(i, j) = gf::Code(pick(rng));
  for (std::size_t i = 0; i < inner; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = gf::Code(pick(rng));
  return linalg::multiply(a, b);
}

std::vector<oracle::Vec> rows_of(const Matrix& m) {
  std::vector<oracle::Vec> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

}  // namespace

TEST_CASE("axpy agrees with elementwise field arithmetic") {
  std::mt19937 rng(1);
  for (unsigned q : kSizes) {
    auto f = gf::Field::make(q);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<gf::Code> dst(37), src(37);
      for (auto& c : dst) c = gf::Code(pick(rng));
      for (auto& c : src) c = gf::Code(pick(rng));
      const gf::Code factor = gf::Code(pick(rng));
      auto expected = dst;
      for (std::size_t i = 0; i < dst.size(); ++i) expected[i] = f->add(dst[i], f->mul(factor, src[i]));
      linalg::axpy(dst, src, factor, *f);
      CHECK(dst == expected);
    }
  }
}

TEST_CASE("rank against the reference elimination") {
  std::mt19937 rng(2);
  for (unsigned q : kSizes) {
    auto f = gf::Field::make(q);
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12, inner = 1 + rng() % 12;
      const Matrix m = random_matrix(f, rows, cols, inner, rng);
      const std::size_t r = linalg::rank(m);
      CAPTURE(q);
      CHECK(r == oracle::rank(rows_of(m), *f));
      CHECK(r == linalg::rank(linalg::transpose(m)));
      CHECK(r <= std::min({rows, cols, inner}));
    }
  }
}

TEST_CASE("rref is idempotent and has unit pivots") {
  std::mt19937 rng(3);
  for (unsigned q : {2u, 5u, 9u, 16u}) {
    auto f = gf::Field::make(q);
    const Matrix m = random_matrix(f, 9, 14, 6, rng);
    const auto e = linalg::rref(m);
    const auto again = linalg::rref(e.reduced);
    CHECK(again.reduced == e.reduced);
    CHECK(again.pivots == e.pivots);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      CHECK(e.reduced.at(i, e.pivots[i]) == 1);
      for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        if (r != i) CHECK(e.reduced.at(r, e.pivots[i]) == 0);
    }
    for (std::size_t r = e.pivots.size(); r < e.reduced.rows(); ++r) CHECK(linalg::is_zero(e.reduced.row(r)));
    CHECK(linalg::pivot_columns(m) == e.pivots);
  }
}

TEST_CASE("kernel basis vectors annihilate and span the kernel") {
  std::mt19937 rng(4);
  for (unsigned q : kSizes) {
    auto f = gf::Field::make(q);
    const Matrix m = random_matrix(f, 7, 13, 5, rng);
    const Matrix k = linalg::kernel_basis(m);
    CHECK(k.rows() == m.cols() - linalg::rank(m));
    CHECK(linalg::rank(k) == k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) CHECK(linalg::is_zero(linalg::apply(m, k.row(r))));
  }
  auto f = gf::Field::make(3);
  const Matrix full(f, 2, {{1, 0}, {0, 1}});
  CHECK(linalg::kernel_basis(full).rows() == 0);
  const Matrix zero(f, 2, 3);
  CHECK(linalg::kernel_basis(zero).rows() == 3);
}

TEST_CASE("span membership by residual and by rank agree") {
  std::mt19937 rng(5);
  for (unsigned q : {2u, 4u, 7u}) {
    auto f = gf::Field::make(q);
    const Matrix m = random_matrix(f, 6, 10, 4, rng);
    const auto e = linalg::rref(m);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<gf::Code> v(10);
      if (trial % 2) {
        // A combination of rows is in the span.
        for (std::size_t r = 0; r < m.rows(); ++r) linalg::axpy(v, m.row(r), gf::Code(pick(rng)), *f);
      } else {
        for (auto& c : v) c = gf::Code(pick(rng));
      }
      const bool by_rank = linalg::in_row_span(m, v);
      CHECK(by_rank == linalg::is_zero(linalg::residual(e, v)));
      if (trial % 2) CHECK(by_rank);
    }
  }
}

TEST_CASE("products") {
  std::mt19937 rng(6);
  auto f = gf::Field::make(8);
  const Matrix a = random_matrix(f, 4, 5, 5, rng);
  const Matrix b = random_matrix(f, 5, 3, 5, rng);
  const Matrix c = random_matrix(f, 3, 6, 3, rng);
  CHECK(linalg::multiply(linalg::multiply(a, b), c) == linalg::multiply(a, linalg::multiply(b, c)));
  CHECK(linalg::transpose(linalg::multiply(a, b)) == linalg::multiply(linalg::transpose(b), linalg::transpose(a)));
  const Matrix ab = linalg::multiply(a, b);
  std::vector<gf::Code> x{1, 2, 3};
  const auto y = linalg::apply(ab, x);
  CHECK(y == linalg::apply(a, linalg::apply(b, x)));
  CHECK_THROWS(linalg::multiply(a, c));
  CHECK_THROWS(linalg::multiply(a, random_matrix(gf::Field::make(7), 5, 2, 2, rng)));
}

TEST_CASE("matrix construction checks widths") {
  auto f = gf::Field::make(5);
  Matrix m(f, 0, 3);
  CHECK_THROWS(m.append_row(std::vector<gf::Code>{1, 2}));
  m.append_row(std::vector<gf::Code>{1, 2, 3});
  CHECK(m.rows() == 1);
  CHECK_THROWS(m.append_rows(Matrix(f, 1, 4)));
}
