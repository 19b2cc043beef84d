#include "edgecodes/formulas.hpp"

#include <stdexcept>

namespace edgecodes::formulas {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("ceil_div by a non-positive number");
  BigInt q = a / b;
  if (q * b < a) ++q;
  return q;
}

BigInt ipow(long long base, long long exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent");
  BigInt result = 1;
  for (long long i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt length_formula(long long n, long long m, long long q) {
  if (n < 2 || m < 1 || 2 * m > n) throw std::invalid_argument("length formula needs n >= 2 and 1 <= m <= n/2");
  return ipow(q - 1, n - m - 1);
}

BigInt torus_hilbert(long long k, long long d, long long q) {
  if (k < 1 || d < 0 || q < 2) throw std::invalid_argument("torus Hilbert function needs k >= 1, d >= 0, q >= 2");
  BigInt sum = 0;
  for (long long j = 0; j <= d / (q - 1); ++j) {
    BigInt term = binomial(k - 1, j) * binomial(k - 1 + d - j * (q - 1), k - 1);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

long long torus_reg(long long k, long long q) {
  if (k < 1 || q < 2) throw std::invalid_argument("torus regularity needs k >= 1, q >= 2");
  return (q - 2) * (k - 1);
}

BigInt torus_min_distance(long long s, long long q, long long d) {
  if (s < 1 || q < 2 || d < 0) throw std::invalid_argument("torus minimum distance needs s >= 1, q >= 2, d >= 0");
  if (d == 0) return ipow(q - 1, s - 1);
  if (d >= (q - 2) * (s - 1)) return 1;
  // d = a(q-2) + b with 1 <= b <= q-2.
  const long long a = (d - 1) / (q - 2);
  const long long b = d - a * (q - 2);
  return ipow(q - 1, s - 2 - a) * (q - 1 - b);
}

BigInt monomial_count(long long s, long long d) {
  if (s < 1 || d < 0) throw std::invalid_argument("monomial count needs s >= 1, d >= 0");
  return binomial(s - 1 + d, s - 1);
}

GraphShape bipartite_shape(const Graph& graph) {
  const GraphInfo info = analyze(graph);
  if (!info.bipartition) throw GraphError("graph is not bipartite (gamma=" + std::to_string(info.non_bipartite) + ")");
  if (!perfect_matching(graph, info)) throw GraphError("graph has no perfect matching");
  const long long n = static_cast<long long>(graph.n());
  return GraphShape{n, static_cast<long long>(info.components), n / 2, static_cast<long long>(graph.s())};
}

BoundsReport edge_bounds(const GraphShape& shape, long long q, long long d, const std::optional<BigInt>& hilbert) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  const auto [n, m, k, s] = shape;
  BoundsReport r;
  r.d = d;
  r.length = length_formula(n, m, q);
  r.l_d = ceil_div(torus_min_distance(n, q, 2 * d), ipow(q - 1, m));
  r.u_d = ipow(q - 1, k - m) * torus_min_distance(k, q, d);
  r.dim_lower = torus_hilbert(k, d, q);
  r.b_d = r.length - (hilbert ? *hilbert : r.dim_lower) + 1;
  r.reg_lower = ceil_div(BigInt((q - 2) * (n - 1)), 2 * ipow(q - 1, m));
  r.reg_upper = BigInt((q - 2) * (k - 1)) + ipow(q - 1, k - m) - 1;
  r.reg_torus_lower = torus_reg(k, q);
  return r;
}

BoundsReport edge_bounds(const Graph& graph, long long q, long long d, const std::optional<BigInt>& hilbert) {
  return edge_bounds(bipartite_shape(graph), q, d, hilbert);
}

}  // namespace edgecodes::formulas
