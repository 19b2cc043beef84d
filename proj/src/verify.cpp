#include "edgecodes/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "edgecodes/formulas.hpp"
#include "edgecodes/ideals.hpp"
#include "edgecodes/instance.hpp"

namespace edgecodes {

namespace {

using formulas::BigInt;

std::string str(const BigInt& v) { return v.str(); }
template <typename T>
std::string str(T v) {
  return std::to_string(v);
}

std::string range(unsigned a, unsigned b) { return a == b ? std::to_string(a) : std::to_string(a) + ".." + std::to_string(b); }

class Timer {
 public:
  Timer(std::ostream* log, std::string name) : log_(log), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!log_) return;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    *log_ << "[time] " << name_ << ": " << dt.count() << " s\n";
  }

 private:
  std::ostream* log_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

bool union_of_even_cycles(const Graph& g) {
  return std::all_of(g.degrees().begin(), g.degrees().end(), [](std::size_t d) { return d == 2; });
}

bool complete_bipartite_balanced(const Graph& g, const GraphInfo& info) {
  if (info.components != 1 || !info.bipartition) return false;
  const std::size_t a = info.bipartition->u.size();
  return a == info.bipartition->w.size() && g.s() == a * a;
}

class Harness {
 public:
  Harness(const Graph& graph, const gf::FieldPtr& field, const VerifyConfig& config)
      : graph_(graph), field_(field), config_(config), q_(field->q()) {}

  Report run() {
    const GraphInfo info = analyze(graph_);
    if (enabled("length")) length(info);
    const auto obstruction = bipartite_obstruction(graph_);
    if (obstruction) {
      for (const auto& group : kCheckGroups)
        if (group != "length" && enabled(group)) report_.skip(group, *obstruction);
      return report_;
    }
    instance_.emplace(make_instance(graph_, field_));
    const bool needs_reg = enabled("regularity") || !config_.d_max;
    if (needs_reg && !regularity()) {
      for (const auto& group : kCheckGroups)
        if (group != "length" && group != "regularity" && enabled(group))
          report_.skip(group, "regularity index not reached");
      return report_;
    }
    if (enabled("hilbert")) hilbert();
    if (enabled("distance")) distance();
    if (enabled("ci")) {
      Timer t(config_.log, "ci");
      report_.append(ideals::verify_complete_intersection(instance_->blocks, field_));
    }
    if (enabled("generation") || enabled("theta") || enabled("decomposition")) ideal_checks();
    return std::move(report_);
  }

 private:
  bool enabled(const std::string& group) const { return config_.checks.empty() || config_.checks.count(group); }

  void length(const GraphInfo& info) {
    Timer t(config_.log, "length");
    const PointSet x = build_x(graph_, field_);
    if (info.bipartition) {
      const auto expected = formulas::length_formula(graph_.n(), info.components, q_);
      report_.compare("length", std::nullopt, str(expected), str(x.size()),
                      "n=" + str(graph_.n()) + ", m=" + str(info.components) + ", |X|=" + str(x.size()));
    } else {
      CheckResult r{"length", std::nullopt, "enumerated", str(x.size()), std::nullopt, Status::Pass,
                    "closed form applies to bipartite graphs only", 0.0};
      report_.add(std::move(r));
    }
  }

  bool regularity() {
    Timer t(config_.log, "regularity");
    const auto& shape = instance_->shape;
    const auto bounds = formulas::edge_bounds(shape, q_, 0);
    const auto cap = static_cast<unsigned>(bounds.reg_upper) + 1;
    try {
      sweep_ = codes::regularity_index(instance_->x, cap);
    } catch (const std::runtime_error& e) {
      report_.fail("regularity_bounds", std::nullopt, "[" + str(bounds.reg_lower) + "," + str(bounds.reg_upper) + "]",
                   "> " + str(cap), e.what());
      return false;
    }
    if (!enabled("regularity")) return true;
    const unsigned reg = sweep_->reg;
    const std::string interval = "[" + str(bounds.reg_lower) + "," + str(bounds.reg_upper) + "]";
    if (bounds.reg_lower <= reg && reg <= bounds.reg_upper)
      report_.pass("regularity_bounds", std::nullopt, interval, str(reg));
    else
      report_.fail("regularity_bounds", std::nullopt, interval, str(reg), "reg=" + str(reg));

    const long long torus_reg = bounds.reg_torus_lower;
    if (static_cast<long long>(reg) >= torus_reg)
      report_.pass("regularity_tight_lower", std::nullopt, ">=" + str(torus_reg), str(reg));
    else
      report_.fail("regularity_tight_lower", std::nullopt, ">=" + str(torus_reg), str(reg), "reg=" + str(reg));

    // reg of I_Y/I_X: the degree from which H_X - H_T stays at |X| - |T_{k-1}|.
    const auto size = instance_->x.size();
    const unsigned top = std::max<unsigned>(reg, static_cast<unsigned>(torus_reg));
    auto h_x = [&](unsigned d) -> BigInt { return d <= reg ? BigInt(sweep_->hilbert[d]) : BigInt(size); };
    const BigInt final_psi = BigInt(size) - formulas::ipow(q_ - 1, shape.k - 1);
    unsigned reg_psi = top;
    for (unsigned d = top + 1; d-- > 0;) {
      if (h_x(d) - formulas::torus_hilbert(shape.k, d, q_) != final_psi) break;
      reg_psi = d;
    }
    const auto split = std::max<long long>(torus_reg, reg_psi);
    report_.compare("regularity_max_split", std::nullopt, str(reg), str(split),
                    "reg(R/I_T)=" + str(torus_reg) + ", reg(I_Y/I_X)=" + str(reg_psi));

    const GraphInfo& info = instance_->info;
    if (union_of_even_cycles(instance_->graph) || complete_bipartite_balanced(instance_->graph, info))
      report_.compare("regularity_tight_equality", std::nullopt, str(torus_reg), str(reg), "reg=" + str(reg));
    return true;
  }

  std::pair<unsigned, unsigned> degrees(unsigned default_lo, unsigned default_hi) const {
    const unsigned lo = config_.d_min.value_or(default_lo);
    const unsigned hi = config_.d_max.value_or(std::max(lo, default_hi));
    return {lo, hi};
  }

  std::size_t hx(unsigned d) {
    if (sweep_ && d < sweep_->hilbert.size()) return sweep_->hilbert[d];
    return codes::hilbert_value(instance_->x, d);
  }

  void hilbert() {
    Timer t(config_.log, "hilbert");
    const auto [lo, hi] = degrees(0, sweep_ ? sweep_->reg + 1 : 0);
    const PointSet y = build_y(instance_->blocks, field_);
    const long long k = instance_->shape.k;
    std::optional<std::size_t> previous_psi;
    std::optional<std::string> decreasing;
    for (unsigned d = lo; d <= hi; ++d) {
      const std::size_t h_x = hx(d);
      const std::size_t h_y = codes::hilbert_value(y, d, codes::HilbertMethod::Rank);
      const BigInt h_t = formulas::torus_hilbert(k, d, q_);
      const std::string triple = "H_X=" + str(h_x) + ", H_Y=" + str(h_y) + ", H_T=" + str(h_t);
      report_.compare("hilbert_decomposition", d, str(h_x), str(BigInt(h_x) - h_y + h_t), triple);
      report_.compare("hy_equals_torus", d, str(h_t), str(h_y), triple);
      const auto bounds = formulas::edge_bounds(instance_->shape, q_, d, BigInt(h_x));
      if (BigInt(h_x) >= bounds.dim_lower)
        report_.pass("dimension_lower_bound", d, ">=" + str(bounds.dim_lower), str(h_x));
      else
        report_.fail("dimension_lower_bound", d, ">=" + str(bounds.dim_lower), str(h_x), triple);
      const std::size_t psi = h_x - h_y;
      if (previous_psi && psi < *previous_psi && !decreasing)
        decreasing = "H_psi(" + str(d - 1) + ")=" + str(*previous_psi) + " > H_psi(" + str(d) + ")=" + str(psi);
      previous_psi = psi;
    }
    if (decreasing)
      report_.fail("h_psi_nondecreasing", std::nullopt, "non-decreasing on " + range(lo, hi), "decreasing", *decreasing);
    else
      report_.pass("h_psi_nondecreasing", std::nullopt, "non-decreasing on " + range(lo, hi), "non-decreasing");
  }

  void distance() {
    Timer t(config_.log, "distance");
    const unsigned reg = sweep_ ? sweep_->reg : 0;
    const auto [lo, hi] = degrees(1, std::max(1u, reg));
    const PointSet& x = instance_->x;
    for (unsigned d = std::max(1u, lo); d <= hi; ++d) {
      const auto h = codes::hilbert(x, d);
      const auto bounds = formulas::edge_bounds(instance_->shape, q_, d, BigInt(h.value));
      const BigInt upper = std::min(bounds.u_d, bounds.b_d);
      const std::string limits = "l_d=" + str(bounds.l_d) + ", u_d=" + str(bounds.u_d) + ", B_d=" + str(bounds.b_d);

      if (std::uint64_t(h.value) * x.size() > (std::uint64_t(1) << 26)) {
        // Generator matrix too large to reduce; only the bounds themselves.
        const bool ok = bounds.l_d <= bounds.u_d && bounds.l_d <= bounds.b_d && bounds.l_d >= 1;
        if (ok)
          report_.pass("distance_bounds_consistency", d, "1<=l_d<=min(u_d,B_d)", limits);
        else
          report_.fail("distance_bounds_consistency", d, "1<=l_d<=min(u_d,B_d)", limits, limits);
        continue;
      }
      const auto dist = codes::min_distance(codes::generator_matrix(x, h.basis_monomials), config_.budget,
                                            static_cast<std::uint64_t>(bounds.l_d));
      const std::string got = dist.exact ? str(dist.lo) : "[" + str(dist.lo) + "," + str(dist.hi) + "]";
      const std::string expected = "[" + str(bounds.l_d) + "," + str(upper) + "]";
      // Exact: l_d <= delta <= min(u_d, B_d). Interval: the two ranges meet.
      const bool sandwich = dist.exact ? (bounds.l_d <= dist.lo && BigInt(dist.hi) <= upper)
                                       : (bounds.l_d <= dist.hi && BigInt(dist.lo) <= upper);
      if (sandwich)
        report_.pass("distance_sandwich", d, expected, got);
      else
        report_.fail("distance_sandwich", d, expected, got, limits + ", delta=" + got);
      if (BigInt(dist.lo) <= bounds.b_d)
        report_.pass("singleton", d, "<=" + str(bounds.b_d), got);
      else
        report_.fail("singleton", d, "<=" + str(bounds.b_d), got, limits);
      if (sweep_ && d >= reg)
        report_.compare("distance_beyond_regularity", d, "1", got, "reg=" + str(reg));
    }
  }

  void ideal_checks() {
    const std::size_t s = instance_->x.dim();
    unsigned lo = config_.d_min.value_or(0);
    unsigned hi = 0;
    std::optional<std::string> capped;
    if (config_.d_max) {
      hi = *config_.d_max;
    } else {
      const unsigned wanted = sweep_->reg + 1;
      const unsigned cap = ideal_degree_cap(instance_->x.size(), s);
      hi = std::min(wanted, cap);
      if (cap < wanted)
        capped = (cap + 1 == wanted ? "degree " : "degrees ") + range(cap + 1, wanted) +
                 " above the dense-matrix cap (pass --d to force)";
    }
    if (hi < lo) return;
    auto run = [&](const std::string& group, auto&& fn) {
      if (!enabled(group)) return;
      Timer t(config_.log, group);
      Report r = fn();
      for (const auto& c : r.results())
        if (c.degree && *c.degree >= lo) report_.add(c);
      if (capped) report_.skip(group, *capped);
    };
    run("generation", [&] { return ideals::verify_iy_generation(instance_->blocks, field_, hi); });
    run("theta", [&] {
      Report r;
      for (unsigned d = lo; d <= hi; ++d) {
        const auto profile = codes::evaluation_profile(instance_->x, d, true);
        r.append(ideals::check_theta_image(*instance_, d, *profile.kernel));
      }
      return r;
    });
    run("decomposition", [&] { return ideals::verify_iy_decomposition(*instance_, hi); });
  }

  const Graph& graph_;
  gf::FieldPtr field_;
  const VerifyConfig& config_;
  unsigned q_;
  Report report_;
  std::optional<BipartiteInstance> instance_;
  std::optional<codes::RegularitySweep> sweep_;
};

}  // namespace

unsigned ideal_degree_cap(std::size_t points, std::size_t variables) {
  unsigned d = 0;
  for (; d < 64; ++d) {
    const auto n = formulas::monomial_count(static_cast<long long>(variables), d + 1);
    if (n > 12000 || n * points > (std::uint64_t(1) << 24)) break;
  }
  return d;
}

Report verify_graph(const Graph& graph, const gf::FieldPtr& field, const VerifyConfig& config) {
  return Harness(graph, field, config).run();
}

}  // namespace edgecodes
