#include "edgecodes/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edgecodes/formulas.hpp"

namespace edgecodes::ideals {

using linalg::Matrix;

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Lex with X_s > ... > X_1: compare from the last variable down.
bool lex_greater(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::string variable_name(std::size_t i, VariableNames names) {
  return names == VariableNames::X ? "X_" + std::to_string(i + 1) : "Y_" + std::to_string(2 * i + 1);
}

std::string monomial_string(const Exponents& e, VariableNames names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(i, names);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::map<Exponents, std::size_t> index_of(const std::vector<Exponents>& basis) {
  std::map<Exponents, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::size_t total(const std::vector<std::size_t>& blocks) {
  return std::accumulate(blocks.begin(), blocks.end(), std::size_t(0));
}

// First row of `values` with a nonzero entry, with that column.
std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const Matrix& values) {
  for (std::size_t r = 0; r < values.rows(); ++r)
    for (std::size_t c = 0; c < values.cols(); ++c)
      if (values.at(r, c) != 0) return std::make_pair(r, c);
  return std::nullopt;
}

std::string vanishing_witness(const Matrix& coefficients, const std::vector<Exponents>& basis, const PointSet& points,
                              std::pair<std::size_t, std::size_t> where, VariableNames names) {
  auto poly = SparsePoly::from_coefficients(coefficients.field(), basis, coefficients.row(where.first));
  return "f=" + poly.to_string(names) + " at " + format_point(points[where.second], *points.field());
}

}  // namespace

SparsePoly::SparsePoly(gf::FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

SparsePoly::SparsePoly(gf::FieldPtr field, std::size_t nvars, Terms terms)
    : field_(std::move(field)), nvars_(nvars) {
  std::optional<unsigned> deg;
  for (auto& [e, c] : terms) {
    if (e.size() != nvars_) throw std::invalid_argument("term has the wrong number of variables");
    if (c == 0) continue;
    const unsigned de = degree_of(e);
    if (deg && *deg != de) throw std::invalid_argument("polynomial is not homogeneous");
    deg = de;
    terms_.emplace(e, c);
  }
}

SparsePoly SparsePoly::monomial(gf::FieldPtr field, Exponents exponents, gf::Code coefficient) {
  const std::size_t n = exponents.size();
  return SparsePoly(std::move(field), n, Terms{{std::move(exponents), coefficient}});
}

SparsePoly SparsePoly::variable(gf::FieldPtr field, std::size_t nvars, std::size_t i, unsigned power) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = power;
  return monomial(std::move(field), std::move(e));
}

SparsePoly SparsePoly::from_coefficients(gf::FieldPtr field, const std::vector<Exponents>& basis,
                                         std::span<const gf::Code> coefficients) {
  if (basis.size() != coefficients.size()) throw std::invalid_argument("coefficient count does not match basis");
  if (basis.empty()) throw std::invalid_argument("empty monomial basis");
  Terms terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coefficients[i] != 0) terms.emplace(basis[i], coefficients[i]);
  return SparsePoly(std::move(field), basis.front().size(), std::move(terms));
}

std::optional<unsigned> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return degree_of(terms_.begin()->first);
}

std::vector<gf::Code> SparsePoly::coefficients(const std::vector<Exponents>& basis) const {
  std::vector<gf::Code> out(basis.size(), 0);
  const auto idx = index_of(basis);
  for (const auto& [e, c] : terms_) {
    auto it = idx.find(e);
    if (it == idx.end()) throw std::invalid_argument("term " + monomial_string(e, VariableNames::X) + " not in basis");
    out[it->second] = c;
  }
  return out;
}

gf::Code SparsePoly::evaluate(const Coords& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point has the wrong number of coordinates");
  const gf::Field& f = *field_;
  gf::Code acc = 0;
  for (const auto& [e, c] : terms_) {
    gf::Code term = c;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i)
      if (e[i] != 0) term = f.mul(term, f.pow(point[i], e[i]));
    acc = f.add(acc, term);
  }
  return acc;
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  gf::require_same(*field_, *o.field_);
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials live in different rings");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_compatible(o);
  Terms t = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) it->second = field_->add(it->second, c);
  }
  return SparsePoly(field_, nvars_, std::move(t));
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + o.scaled(field_->neg(1)); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_compatible(o);
  Terms t;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      const gf::Code c = field_->mul(ca, cb);
      auto [it, inserted] = t.emplace(std::move(e), c);
      if (!inserted) it->second = field_->add(it->second, c);
    }
  return SparsePoly(field_, nvars_, std::move(t));
}

SparsePoly SparsePoly::scaled(gf::Code c) const {
  Terms t;
  for (const auto& [e, x] : terms_) t.emplace(e, field_->mul(x, c));
  return SparsePoly(field_, nvars_, std::move(t));
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return *field_ == *o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string SparsePoly::to_string(VariableNames names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, gf::Code>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return lex_greater(a.first, b.first); });
  const gf::Code minus_one = field_->neg(1);
  std::string out;
  for (const auto& [e, c] : sorted) {
    const std::string mono = monomial_string(e, names);
    const bool constant = mono == "1";
    if (c == 1) {
      if (!out.empty()) out += "+";
      out += mono;
    } else if (c == minus_one) {
      out += "-" + mono;
    } else {
      if (!out.empty()) out += "+";
      out += field_->to_string(c);
      if (!constant) out += "*" + mono;
    }
  }
  return out;
}

std::vector<Generator> GeneratorSet::all() const {
  std::vector<Generator> out = w0;
  for (const auto& block : linear) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::size_t GeneratorSet::size() const {
  std::size_t n = w0.size();
  for (const auto& block : linear) n += block.size();
  return n;
}

GeneratorSet i_y_generators(const std::vector<std::size_t>& blocks, const gf::FieldPtr& field) {
  if (blocks.empty()) throw std::invalid_argument("at least one block is required");
  if (std::find(blocks.begin(), blocks.end(), 0) != blocks.end()) throw std::invalid_argument("empty block");
  const std::size_t s = total(blocks);
  const unsigned q = field->q();
  GeneratorSet set{blocks, q, {}, {}};

  std::vector<std::size_t> leads;
  for (std::size_t b = 0, at = 0; b < blocks.size(); at += blocks[b++]) leads.push_back(at);

  const auto x1 = SparsePoly::variable(field, s, 0, q - 1);
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const std::size_t j = leads[b];
    set.w0.push_back({SparsePoly::variable(field, s, j, q - 1) - x1,
                      "X_" + std::to_string(j + 1) + "^{q-1}-X_1^{q-1}"});
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Generator> w;
    const std::size_t lead = leads[b];
    for (std::size_t j = lead + 1; j < lead + blocks[b]; ++j)
      w.push_back({SparsePoly::variable(field, s, j) - SparsePoly::variable(field, s, lead),
                   "X_" + std::to_string(j + 1) + "-X_" + std::to_string(lead + 1)});
    set.linear.push_back(std::move(w));
  }
  return set;
}

std::vector<std::size_t> block_index(const std::vector<std::size_t>& blocks) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) out.insert(out.end(), blocks[b], b);
  return out;
}

SparsePoly theta(const SparsePoly& p, const std::vector<std::size_t>& blocks) {
  const auto idx = block_index(blocks);
  if (p.nvars() != idx.size()) throw std::invalid_argument("polynomial does not match the block structure");
  SparsePoly::Terms t;
  for (const auto& [e, c] : p.terms()) {
    Exponents y(blocks.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) y[idx[i]] += e[i];
    auto [it, inserted] = t.emplace(std::move(y), c);
    if (!inserted) it->second = p.field()->add(it->second, c);
  }
  return SparsePoly(p.field(), blocks.size(), std::move(t));
}

Matrix theta_matrix(const std::vector<std::size_t>& blocks, unsigned d, const gf::FieldPtr& field) {
  const auto idx = block_index(blocks);
  const auto s_basis = codes::monomials(idx.size(), d);
  const auto r_basis = codes::monomials(blocks.size(), d);
  const auto r_index = index_of(r_basis);
  Matrix m(field, r_basis.size(), s_basis.size());
  Exponents y(blocks.size());
  for (std::size_t j = 0; j < s_basis.size(); ++j) {
    std::fill(y.begin(), y.end(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) y[idx[i]] += s_basis[j][i];
    m.at(r_index.at(y), j) = 1;
  }
  return m;
}

std::string format_point(const Coords& point, const gf::Field& field) {
  std::string out = "[";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += field.to_string(point[i]);
  }
  return out + "]";
}

Report check_theta_image(const BipartiteInstance& instance, unsigned d, const Matrix& ix_basis) {
  Report report;
  const auto& field = instance.field;
  const std::size_t k = instance.k();
  const unsigned q = field->q();
  const auto r_basis = codes::monomials(k, d);

  const Matrix th = theta_matrix(instance.blocks, d, field);
  const Matrix image = ix_basis.rows() ? linalg::multiply(ix_basis, linalg::transpose(th)) : Matrix(field, 0, r_basis.size());

  const PointSet torus = build_torus(k, field);
  const Matrix et = codes::evaluation_matrix(torus, r_basis);
  const Matrix values = linalg::multiply(image, linalg::transpose(et));
  if (auto where = first_nonzero(values))
    report.fail("theta_containment", d, "theta(I_X(d)) vanishes on T_{k-1}", "nonzero value",
                vanishing_witness(image, r_basis, torus, *where, VariableNames::OddY));
  else
    report.pass("theta_containment", d, "theta(I_X(d)) vanishes on T_{k-1}",
                std::to_string(image.rows()) + " images vanish");

  const auto echelon = linalg::rref(image);
  std::size_t multiples = 0;
  std::optional<std::string> missing;
  if (d >= q - 1) {
    const auto cofactors = codes::monomials(k, d - (q - 1));
    const auto y1 = SparsePoly::variable(field, k, 0, q - 1);
    for (std::size_t j = 1; j < k && !missing; ++j) {
      const auto binomial = SparsePoly::variable(field, k, j, q - 1) - y1;
      for (const auto& mu : cofactors) {
        const auto g = SparsePoly::monomial(field, mu) * binomial;
        ++multiples;
        if (!linalg::is_zero(linalg::residual(echelon, g.coefficients(r_basis)))) {
          missing = g.to_string(VariableNames::OddY);
          break;
        }
      }
    }
  }
  if (missing)
    report.fail("theta_reverse", d, "torus binomial multiples lie in theta(I_X(d))", "outside span", *missing);
  else
    report.pass("theta_reverse", d, "torus binomial multiples lie in theta(I_X(d))",
                std::to_string(multiples) + " multiples in span");

  const auto expected = r_basis.size() - formulas::torus_hilbert(k, d, q).convert_to<std::size_t>();
  report.compare("theta_dimension", d, std::to_string(expected), std::to_string(echelon.pivots.size()),
                 "dim I_T(d)=" + std::to_string(expected) + ", rank theta(I_X(d))=" +
                     std::to_string(echelon.pivots.size()));
  return report;
}

Report verify_prop_theta(const BipartiteInstance& instance, unsigned d_max) {
  Report report;
  for (unsigned d = 0; d <= d_max; ++d) {
    const auto profile = codes::evaluation_profile(instance.x, d, true);
    report.append(check_theta_image(instance, d, *profile.kernel));
  }
  return report;
}

namespace {

struct Decomposition {
  DegreeDims dims;
  Report report;
};

Decomposition decompose(const BipartiteInstance& instance, unsigned d, const PointSet& y, const PointSet& torus) {
  Decomposition out;
  DegreeDims& dims = out.dims;
  Report& report = out.report;
  const auto& field = instance.field;
  const auto s_basis = codes::monomials(instance.x.dim(), d);
  const auto r_basis = codes::monomials(instance.k(), d);
  dims.d = d;
  dims.monomials = s_basis.size();

  const Matrix kx = linalg::kernel_basis(codes::evaluation_matrix(instance.x, s_basis));
  const Matrix ey = codes::evaluation_matrix(y, s_basis);
  const Matrix ky = linalg::kernel_basis(ey);
  const Matrix th = theta_matrix(instance.blocks, d, field);
  const Matrix kth = linalg::kernel_basis(th);
  dims.dim_ix = kx.rows();
  dims.dim_iy = ky.rows();

  Matrix stacked = kx;
  stacked.append_rows(kth);
  dims.dim_sum = linalg::rank(stacked);

  const Matrix et = codes::evaluation_matrix(torus, r_basis);
  dims.h_torus = linalg::rank(et);
  const Matrix composite = linalg::multiply(et, th);
  const Matrix kp = linalg::kernel_basis(composite);
  dims.dim_preimage = kp.rows();

  const std::string triple = "dim I_X=" + std::to_string(dims.dim_ix) + ", dim I_Y=" + std::to_string(dims.dim_iy) +
                             ", dim(I_X+ker theta)=" + std::to_string(dims.dim_sum);

  if (auto where = first_nonzero(linalg::multiply(stacked, linalg::transpose(ey))))
    report.fail("iy_decomposition", d, "I_X(d)+ker theta vanishes on Y", "nonzero value",
                vanishing_witness(stacked, s_basis, y, *where, VariableNames::X));
  else
    report.compare("iy_decomposition", d, std::to_string(dims.dim_iy), std::to_string(dims.dim_sum), triple);

  report.compare("h_psi", d, std::to_string(dims.h_x() - dims.h_y()), std::to_string(dims.h_psi()), triple);

  std::optional<std::string> ker_witness;
  if (auto where = first_nonzero(linalg::multiply(kp, linalg::transpose(ey))))
    ker_witness = "preimage element " + vanishing_witness(kp, s_basis, y, *where, VariableNames::X);
  else if (auto where2 = first_nonzero(linalg::multiply(ky, linalg::transpose(composite))))
    ker_witness = "I_Y element outside preimage: f=" +
                    SparsePoly::from_coefficients(field, s_basis, ky.row(where2->first)).to_string();
  else if (dims.dim_preimage != dims.dim_iy)
    ker_witness = "dim preimage=" + std::to_string(dims.dim_preimage) + ", dim I_Y=" + std::to_string(dims.dim_iy);
  if (ker_witness)
    report.fail("ker_psi", d, std::to_string(dims.dim_iy), std::to_string(dims.dim_preimage), *ker_witness);
  else
    report.pass("ker_psi", d, std::to_string(dims.dim_iy), std::to_string(dims.dim_preimage));

  report.compare("psi_torus_split", d, std::to_string(dims.h_x()),
                 std::to_string(dims.h_psi() + dims.h_torus),
                 "H_X=" + std::to_string(dims.h_x()) + ", H_psi=" + std::to_string(dims.h_psi()) +
                     ", H_T=" + std::to_string(dims.h_torus));
  return out;
}

}  // namespace

DegreeDims decomposition_dims(const BipartiteInstance& instance, unsigned d) {
  const PointSet y = build_y(instance.blocks, instance.field);
  const PointSet torus = build_torus(instance.k(), instance.field);
  return decompose(instance, d, y, torus).dims;
}

Report verify_iy_decomposition(const BipartiteInstance& instance, unsigned d_max) {
  const PointSet y = build_y(instance.blocks, instance.field);
  const PointSet torus = build_torus(instance.k(), instance.field);
  Report report;
  for (unsigned d = 0; d <= d_max; ++d) report.append(decompose(instance, d, y, torus).report);
  return report;
}

Report verify_complete_intersection(const std::vector<std::size_t>& blocks, const gf::FieldPtr& field) {
  Report report;
  const auto gens = i_y_generators(blocks, field);
  const std::size_t s = total(blocks);
  const PointSet y = build_y(blocks, field);

  report.compare("ci_generator_count", std::nullopt, std::to_string(s - 1), std::to_string(gens.size()),
                 "s=" + std::to_string(s));

  std::optional<std::string> witness;
  for (const auto& g : gens.all()) {
    for (const auto& pt : y.points())
      if (g.poly.evaluate(pt) != 0) {
        witness = g.symbolic + " at " + format_point(pt, *field);
        break;
      }
    if (witness) break;
  }
  if (witness)
    report.fail("ci_vanishing", std::nullopt, "all generators vanish on Y", "nonzero value", *witness);
  else
    report.pass("ci_vanishing", std::nullopt, "all generators vanish on Y",
                std::to_string(gens.size()) + " generators vanish");

  formulas::BigInt product = 1;
  for (const auto& g : gens.all()) product *= g.poly.degree().value_or(0);
  report.compare("ci_degree", std::nullopt, std::to_string(y.size()), product.str(),
                 "|Y|=" + std::to_string(y.size()) + ", degree product=" + product.str());
  const auto expected = formulas::ipow(field->q() - 1, static_cast<long long>(blocks.size()) - 1);
  report.compare("y_cardinality", std::nullopt, expected.str(), std::to_string(y.size()),
                 "|Y|=" + std::to_string(y.size()));
  return report;
}

Report verify_iy_generation(const std::vector<std::size_t>& blocks, const gf::FieldPtr& field, unsigned d_max) {
  Report report;
  const auto gens = i_y_generators(blocks, field);
  const std::size_t s = total(blocks);
  const PointSet y = build_y(blocks, field);
  for (unsigned d = 0; d <= d_max; ++d) {
    const auto basis = codes::monomials(s, d);
    const auto idx = index_of(basis);
    const Matrix ey = codes::evaluation_matrix(y, basis);
    const std::size_t dim_iy = basis.size() - linalg::rank(ey);

    Matrix rows(field, 0, basis.size());
    std::vector<gf::Code> v(basis.size());
    for (const auto& g : gens.all()) {
      const unsigned e = *g.poly.degree();
      if (e > d) continue;
      for (const auto& mu : codes::monomials(s, d - e)) {
        std::fill(v.begin(), v.end(), 0);
        for (const auto& [t, c] : g.poly.terms()) {
          Exponents m(s);
          for (std::size_t i = 0; i < s; ++i) m[i] = t[i] + mu[i];
          v[idx.at(m)] = c;
        }
        rows.append_row(v);
      }
    }
    const std::size_t got = linalg::rank(rows);
    if (auto where = first_nonzero(linalg::multiply(rows, linalg::transpose(ey))))
      report.fail("iy_generation", d, std::to_string(dim_iy), std::to_string(got),
                  vanishing_witness(rows, basis, y, *where, VariableNames::X));
    else
      report.compare("iy_generation", d, std::to_string(dim_iy), std::to_string(got),
                     "dim I_Y(d)=" + std::to_string(dim_iy) + ", dim (W)_d=" + std::to_string(got));
  }
  return report;
}

}  // namespace edgecodes::ideals
