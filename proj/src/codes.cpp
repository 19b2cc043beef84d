#include "edgecodes/codes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "edgecodes/formulas.hpp"
#include "edgecodes/instance.hpp"

namespace edgecodes::codes {

namespace {

template <typename T>
struct VectorHash {
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (T x : v) h = (h ^ std::size_t(x)) * 1099511628211ull;
    return h;
  }
};

void enumerate_monomials(std::size_t s, unsigned d, std::size_t var, Exponents& current,
                         std::vector<Exponents>& out) {
  if (var + 1 == s) {
    current[var] = d;
    out.push_back(current);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    current[var] = e;
    enumerate_monomials(s, d - e, var + 1, current, out);
  }
  current[var] = 0;
}

// Normalized evaluations of monomials at a point, through discrete logs when
// the point lies on the torus.
class PointEvaluator {
 public:
  PointEvaluator(const Coords& point, unsigned d, const gf::Field& field) : point_(point), field_(field) {
    if (point[0] == 0) throw std::domain_error("evaluation point has zero first coordinate");
    on_torus_ = std::none_of(point.begin(), point.end(), [](gf::Code c) { return c == 0; });
    if (on_torus_) {
      logs_.reserve(point.size());
      for (gf::Code c : point) logs_.push_back(field.log(c));
    }
    denominator_inv_ = field.inv(field.pow(point[0], d));
  }

  gf::Code operator()(const Exponents& monomial) const {
    if (on_torus_) {
      long long acc = 0;
      for (std::size_t i = 0; i < monomial.size(); ++i) acc += static_cast<long long>(monomial[i]) * logs_[i];
      return field_.mul(field_.exp(acc), denominator_inv_);
    }
    return field_.mul(evaluate_monomial(monomial, point_, field_), denominator_inv_);
  }

 private:
  const Coords& point_;
  const gf::Field& field_;
  bool on_torus_ = false;
  std::vector<unsigned> logs_;
  gf::Code denominator_inv_ = 1;
};

unsigned degree_of(const std::vector<Exponents>& basis) {
  if (basis.empty()) return 0;
  unsigned d = 0;
  for (unsigned e : basis.front()) d += e;
  return d;
}

HilbertResult hilbert_by_rank(const PointSet& points, unsigned d) {
  const auto basis = monomials(points.dim(), d);
  const gf::Field& field = *points.field();
  std::vector<PointEvaluator> evaluators;
  evaluators.reserve(points.size());
  for (const Coords& p : points.points()) evaluators.emplace_back(p, d, field);

  // Repeated columns do not change the rank.
  std::unordered_map<std::vector<gf::Code>, std::size_t, VectorHash<gf::Code>> distinct;
  std::vector<std::size_t> representative;
  std::vector<gf::Code> column(points.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < points.size(); ++i) column[i] = evaluators[i](basis[j]);
    if (distinct.emplace(column, representative.size()).second) representative.push_back(j);
  }
  linalg::Matrix m(points.field(), points.size(), representative.size());
  for (const auto& [col, idx] : distinct)
    for (std::size_t i = 0; i < points.size(); ++i) m.at(i, idx) = col[i];

  HilbertResult result;
  result.method = HilbertMethod::Rank;
  for (std::size_t c : linalg::pivot_columns(std::move(m))) result.basis_monomials.push_back(basis[representative[c]]);
  result.value = result.basis_monomials.size();
  return result;
}

HilbertResult hilbert_by_characters(const PointSet& points, unsigned d) {
  if (!points.parameterization())
    throw std::invalid_argument("character count needs a parameterized point set");
  const MonomialMap& map = *points.parameterization();
  const long long order = points.field()->q() - 1;
  const auto basis = monomials(points.dim(), d);

  // The monomial pulls back to the character t -> t^c with
  // c_j = sum_i a_i (A_ij - A_0j); normalization by X_1^d removes A_0j.
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, VectorHash<std::uint32_t>> seen;
  std::vector<std::size_t> first;
  std::vector<std::uint32_t> key(map.parameters);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const Exponents& a = basis[idx];
    for (std::size_t j = 0; j < map.parameters; ++j) {
      long long c = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) c += static_cast<long long>(a[i]) * (static_cast<long long>(map.exponents[i][j]) - map.exponents[0][j]);
      c %= order;
      if (c < 0) c += order;
      key[j] = static_cast<std::uint32_t>(c);
    }
    if (seen.emplace(key, idx).second) first.push_back(idx);
  }
  HilbertResult result;
  result.method = HilbertMethod::Characters;
  result.value = first.size();
  for (std::size_t idx : first) result.basis_monomials.push_back(basis[idx]);
  return result;
}

bool pow_within(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit, std::uint64_t& out) {
  out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (out > limit / base) return false;
    out *= base;
  }
  return out <= limit;
}

}  // namespace

std::vector<Exponents> monomials(std::size_t s, unsigned d, std::uint64_t limit) {
  if (s == 0) throw std::invalid_argument("monomials need at least one variable");
  const auto count = formulas::monomial_count(static_cast<long long>(s), d);
  if (count > limit)
    throw std::overflow_error("degree " + std::to_string(d) + " in " + std::to_string(s) + " variables has " +
                              count.str() + " monomials, above the limit of " + std::to_string(limit));
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(count));
  Exponents current(s, 0);
  enumerate_monomials(s, d, 0, current, out);
  return out;
}

gf::Code evaluate_monomial(const Exponents& monomial, const Coords& point, const gf::Field& field) {
  if (monomial.size() != point.size()) throw std::invalid_argument("monomial and point differ in length");
  gf::Code acc = 1;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (monomial[i]) acc = field.mul(acc, field.pow(point[i], monomial[i]));
  return acc;
}

linalg::Matrix evaluation_matrix(const PointSet& points, const std::vector<Exponents>& basis) {
  const unsigned d = degree_of(basis);
  linalg::Matrix m(points.field(), points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointEvaluator eval(points[i], d, *points.field());
    auto row = m.row(i);
    for (std::size_t j = 0; j < basis.size(); ++j) row[j] = eval(basis[j]);
  }
  return m;
}

linalg::Matrix evaluation_matrix(const PointSet& points, unsigned d) {
  return evaluation_matrix(points, monomials(points.dim(), d));
}

linalg::Matrix generator_matrix(const PointSet& points, const std::vector<Exponents>& chosen) {
  return linalg::transpose(evaluation_matrix(points, chosen));
}

EvalProfile evaluation_profile(const PointSet& points, unsigned d, bool with_kernel) {
  const auto basis = monomials(points.dim(), d);
  linalg::Matrix m = evaluation_matrix(points, basis);

  EvalProfile profile{d, 0, {}, linalg::Matrix(points.field(), 0, points.size()), std::nullopt};
  std::vector<std::size_t> pivots;
  if (with_kernel) {
    profile.kernel = linalg::kernel_basis(m);
    pivots = linalg::rref(m).pivots;
  } else {
    pivots = linalg::pivot_columns(m);
  }
  profile.hilbert = pivots.size();
  for (std::size_t c : pivots) profile.basis_monomials.push_back(basis[c]);
  profile.generator = generator_matrix(points, profile.basis_monomials);
  return profile;
}

HilbertResult hilbert(const PointSet& points, unsigned d, HilbertMethod method) {
  if (method == HilbertMethod::Auto) {
    const auto count = formulas::monomial_count(static_cast<long long>(points.dim()), d);
    const bool large = points.size() > 1024 || count * points.size() > (std::uint64_t(1) << 26);
    method = (large && points.parameterization()) ? HilbertMethod::Characters : HilbertMethod::Rank;
  }
  return method == HilbertMethod::Characters ? hilbert_by_characters(points, d) : hilbert_by_rank(points, d);
}

std::size_t hilbert_value(const PointSet& points, unsigned d, HilbertMethod method) {
  return hilbert(points, d, method).value;
}

RegularitySweep regularity_index(const PointSet& points, unsigned max_degree, HilbertMethod method) {
  RegularitySweep sweep;
  for (unsigned d = 0; d <= max_degree; ++d) {
    sweep.hilbert.push_back(hilbert_value(points, d, method));
    if (sweep.hilbert.back() == points.size()) {
      sweep.reg = d;
      return sweep;
    }
  }
  throw std::runtime_error("Hilbert function did not reach |X| = " + std::to_string(points.size()) +
                           " by degree " + std::to_string(max_degree));
}

Distance min_distance(const linalg::Matrix& generator, std::uint64_t budget, std::uint64_t lower_bound) {
  const gf::Field& field = *generator.field();
  auto [reduced, pivots] = linalg::rref(generator);
  const std::size_t dim = pivots.size();
  const std::size_t length = generator.cols();
  if (dim == 0) throw std::invalid_argument("minimum distance of the zero code");

  Distance result;
  if (dim == length) {
    // Whole space: unit vectors are codewords.
    result.lo = result.hi = 1;
    result.exact = true;
    return result;
  }

  auto weight = [](std::span<const gf::Code> v) {
    return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](gf::Code c) { return c != 0; }));
  };
  std::uint64_t best = length;
  for (std::size_t i = 0; i < dim; ++i) best = std::min(best, weight(reduced.row(i)));

  std::uint64_t total = 0;
  result.exact = pow_within(field.q(), dim, budget, total);
  const std::uint64_t sweep = result.exact ? total : std::min<std::uint64_t>(budget, std::uint64_t(1) << 16);

  // F_p-basis of the code: beta * row for beta = 1, a, ..., a^{e-1}. The
  // odometer over Z_p digits adds exactly one basis vector per digit change.
  std::vector<std::vector<gf::Code>> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    gf::Code beta = 1;
    for (unsigned t = 0; t < field.e(); ++t) {
      std::vector<gf::Code> r(length);
      for (std::size_t c = 0; c < length; ++c) r[c] = field.mul(beta, reduced.at(i, c));
      rows.push_back(std::move(r));
      beta = gf::Code(beta * field.p());
    }
  }
  std::vector<unsigned> digits(rows.size(), 0);
  std::vector<gf::Code> word(length, 0);
  std::uint64_t visited = 1;
  for (; visited < sweep && best > 1; ++visited) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      linalg::axpy(word, rows[j], 1, field);
      if (++digits[j] < field.p()) break;
      digits[j] = 0;
    }
    const std::uint64_t w = weight(word);
    if (w != 0) best = std::min(best, w);
  }
  result.enumerated = visited;
  result.hi = best;
  result.lo = result.exact ? best : std::max<std::uint64_t>(1, lower_bound);
  if (best == 1) {
    result.lo = 1;
    result.exact = true;
  }
  return result;
}

Distance min_distance(const EvalProfile& profile, std::uint64_t budget, std::uint64_t lower_bound) {
  return min_distance(profile.generator, budget, lower_bound);
}

CodeParams code_params(const Graph& graph, const gf::FieldPtr& field, unsigned d, std::uint64_t budget) {
  CodeParams params;
  params.d = d;
  params.q = field->q();

  std::uint64_t lower = 1;
  std::optional<PointSet> x;
  if (!bipartite_obstruction(graph)) {
    auto inst = make_instance(graph, field);
    const auto bounds = formulas::edge_bounds(inst.shape, field->q(), d);
    lower = static_cast<std::uint64_t>(bounds.l_d);
    x.emplace(std::move(inst.x));
  } else {
    x.emplace(build_x(graph, field));
  }
  const auto h = hilbert(*x, d);
  params.length = x->size();
  params.dimension = h.value;
  params.distance = min_distance(generator_matrix(*x, h.basis_monomials), budget, lower);
  return params;
}

}  // namespace edgecodes::codes
