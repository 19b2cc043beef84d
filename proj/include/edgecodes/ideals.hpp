#pragma once

// Homogeneous sparse polynomials, the generators of I_Y, the block-collapsing
// map theta : K[X_1..X_s] -> K[Y_1, Y_3, ..., Y_{2k-1}], and degreewise checks
// of the relations between I_X, I_Y, ker(theta) and the torus ideal.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgecodes/codes.hpp"
#include "edgecodes/gf.hpp"
#include "edgecodes/instance.hpp"
#include "edgecodes/linalg.hpp"
#include "edgecodes/points.hpp"
#include "edgecodes/report.hpp"

namespace edgecodes::ideals {

using codes::Exponents;

enum class VariableNames {
  X,      // X_1, ..., X_s
  OddY,   // Y_1, Y_3, ..., Y_{2k-1}
};

class SparsePoly {
 public:
  using Terms = std::map<Exponents, gf::Code>;

  SparsePoly(gf::FieldPtr field, std::size_t nvars);
  /// Drops zero coefficients; throws std::invalid_argument unless every term
  /// has nvars exponents and all terms share one degree.
  SparsePoly(gf::FieldPtr field, std::size_t nvars, Terms terms);

  static SparsePoly monomial(gf::FieldPtr field, Exponents exponents, gf::Code coefficient = 1);
  /// Variable i (0-based) raised to `power`.
  static SparsePoly variable(gf::FieldPtr field, std::size_t nvars, std::size_t i, unsigned power = 1);
  static SparsePoly from_coefficients(gf::FieldPtr field, const std::vector<Exponents>& basis,
                                      std::span<const gf::Code> coefficients);

  const gf::FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Homogeneous degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;

  /// Coefficients in the given monomial basis; throws if a term is missing.
  std::vector<gf::Code> coefficients(const std::vector<Exponents>& basis) const;

  gf::Code evaluate(const Coords& point) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(gf::Code c) const;
  bool operator==(const SparsePoly& o) const;

  /// Terms listed under lex order with X_s > ... > X_1.
  std::string to_string(VariableNames names = VariableNames::X) const;

 private:
  void check_compatible(const SparsePoly& o) const;

  gf::FieldPtr field_;
  std::size_t nvars_;
  Terms terms_;
};

struct Generator {
  SparsePoly poly;
  std::string symbolic;  // exponent q-1 kept symbolic, e.g. X_3^{q-1}-X_1^{q-1}
};

/// Generators of I_Y: W_0 (binomials in the block leads) and W_1, W_3, ...
/// (linear binomials inside each block).
struct GeneratorSet {
  std::vector<std::size_t> blocks;
  unsigned q = 0;
  std::vector<Generator> w0;
  std::vector<std::vector<Generator>> linear;  // one list per block

  std::vector<Generator> all() const;
  std::size_t size() const;
};

GeneratorSet i_y_generators(const std::vector<std::size_t>& blocks, const gf::FieldPtr& field);

/// Block index of each X variable.
std::vector<std::size_t> block_index(const std::vector<std::size_t>& blocks);

/// Substitutes X_i -> Y_{block(i)}.
SparsePoly theta(const SparsePoly& p, const std::vector<std::size_t>& blocks);

/// Matrix of theta on degree-d pieces: columns indexed by monomials(s, d),
/// rows by monomials(k, d).
linalg::Matrix theta_matrix(const std::vector<std::size_t>& blocks, unsigned d, const gf::FieldPtr& field);

/// theta(I_X(d)) = I_T(d) for d in [0, d_max]: every theta-image vanishes on
/// T_{k-1}, and every degree-d multiple of each torus binomial lies in the
/// span of the images.
Report verify_prop_theta(const BipartiteInstance& instance, unsigned d_max);

/// Same checks for one degree with a caller-supplied basis of I_X(d) (rows in
/// monomials(s, d) order).
Report check_theta_image(const BipartiteInstance& instance, unsigned d, const linalg::Matrix& ix_basis);

/// Dimensions entering the degree-d decomposition, each from its own rank
/// computation.
struct DegreeDims {
  unsigned d = 0;
  std::size_t monomials = 0;      // dim S_d
  std::size_t dim_ix = 0;         // kernel of evaluation on X
  std::size_t dim_iy = 0;         // kernel of evaluation on Y
  std::size_t dim_sum = 0;        // rank of I_X(d) stacked with ker(theta)_d
  std::size_t dim_preimage = 0;   // kernel of (evaluation on T_{k-1}) o theta_d
  std::size_t h_torus = 0;        // rank of evaluation on T_{k-1}
  std::size_t h_x() const { return monomials - dim_ix; }
  std::size_t h_y() const { return monomials - dim_iy; }
  std::size_t h_psi() const { return dim_iy - dim_ix; }
};

DegreeDims decomposition_dims(const BipartiteInstance& instance, unsigned d);

std::string format_point(const Coords& point, const gf::Field& field);

/// I_Y(d) = I_X(d) + ker(theta)_d and H_X(d) - H_Y(d) = dim I_Y(d) - dim I_X(d),
/// plus theta^{-1}(I_T(d)) = I_Y(d) (the kernel of psi_d is I_Y(d)/I_X(d)).
Report verify_iy_decomposition(const BipartiteInstance& instance, unsigned d_max);

/// Generator count s-1, vanishing on Y, and |Y| = product of generator degrees.
Report verify_complete_intersection(const std::vector<std::size_t>& blocks, const gf::FieldPtr& field);

/// Degree-d part of the ideal generated by the W sets equals I_Y(d).
Report verify_iy_generation(const std::vector<std::size_t>& blocks, const gf::FieldPtr& field, unsigned d_max);

}  // namespace edgecodes::ideals
