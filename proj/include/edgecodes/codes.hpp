#pragma once

// Evaluation codes C_X(d): evaluation matrices, Hilbert function, regularity
// index, and minimum distance by exhaustive enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "edgecodes/gf.hpp"
#include "edgecodes/graph.hpp"
#include "edgecodes/linalg.hpp"
#include "edgecodes/points.hpp"

namespace edgecodes::codes {

using Exponents = std::vector<unsigned>;

inline constexpr std::uint64_t kMonomialLimit = std::uint64_t(1) << 22;
inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t(1) << 24;

/// All monomials of degree d in s variables, lexicographically decreasing
/// (X_1^d first). Throws std::overflow_error past `limit`.
std::vector<Exponents> monomials(std::size_t s, unsigned d, std::uint64_t limit = kMonomialLimit);

gf::Code evaluate_monomial(const Exponents& monomial, const Coords& point, const gf::Field& field);

/// M[i][j] = m_j(P_i) / X_1(P_i)^d. Throws std::domain_error when a point has
/// a zero first coordinate.
linalg::Matrix evaluation_matrix(const PointSet& points, const std::vector<Exponents>& basis);
linalg::Matrix evaluation_matrix(const PointSet& points, unsigned d);

/// Rows are the normalized evaluation vectors of the chosen monomials.
linalg::Matrix generator_matrix(const PointSet& points, const std::vector<Exponents>& chosen);

struct EvalProfile {
  unsigned d = 0;
  std::size_t hilbert = 0;                  // H_X(d)
  std::vector<Exponents> basis_monomials;   // monomials whose evaluations span the code
  linalg::Matrix generator;                 // hilbert x |X|
  std::optional<linalg::Matrix> kernel;     // coefficient vectors of I_X(d), in monomials(s, d) order
};

/// Rank of the full evaluation matrix; the kernel basis is computed on request.
EvalProfile evaluation_profile(const PointSet& points, unsigned d, bool with_kernel = true);

enum class HilbertMethod {
  Auto,
  /// Elimination on the evaluation matrix after dropping repeated columns.
  Rank,
  /// Count of distinct characters t -> m(point(t)) of the parameter group;
  /// needs a parameterized point set.
  Characters,
};

struct HilbertResult {
  std::size_t value = 0;
  std::vector<Exponents> basis_monomials;
  HilbertMethod method = HilbertMethod::Rank;
};

HilbertResult hilbert(const PointSet& points, unsigned d, HilbertMethod method = HilbertMethod::Auto);
std::size_t hilbert_value(const PointSet& points, unsigned d, HilbertMethod method = HilbertMethod::Auto);

struct RegularitySweep {
  unsigned reg = 0;
  std::vector<std::size_t> hilbert;  // H(0), ..., H(reg)
};

/// Least d with H(d) = |points|. Throws std::runtime_error if max_degree is
/// passed first.
RegularitySweep regularity_index(const PointSet& points, unsigned max_degree,
                                 HilbertMethod method = HilbertMethod::Auto);

struct Distance {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool exact = false;
  std::uint64_t enumerated = 0;  // codewords visited
};

/// Exact minimum Hamming weight when q^dim <= budget; otherwise the interval
/// [max(1, lower_bound), least weight seen over a partial sweep].
Distance min_distance(const linalg::Matrix& generator, std::uint64_t budget = kDefaultDistanceBudget,
                      std::uint64_t lower_bound = 1);
Distance min_distance(const EvalProfile& profile, std::uint64_t budget = kDefaultDistanceBudget,
                      std::uint64_t lower_bound = 1);

struct CodeParams {
  std::size_t length = 0;
  std::size_t dimension = 0;
  Distance distance;
  unsigned d = 0;
  unsigned q = 0;
};

/// Graph input is reordered canonically when it is bipartite with a perfect
/// matching, which also supplies the distance lower bound.
CodeParams code_params(const Graph& graph, const gf::FieldPtr& field, unsigned d,
                       std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace edgecodes::codes
