#pragma once

// Closed forms for torus codes and the bounds for codes parameterized by the
// edges of a bipartite graph with a perfect matching.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "edgecodes/graph.hpp"

namespace edgecodes::formulas {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);
/// Exact ceiling of a / b for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt ipow(long long base, long long exponent);

/// |X| = (q-1)^{n-m-1}.
BigInt length_formula(long long n, long long m, long long q);

/// Hilbert function of the projective torus T_{k-1} (k coordinates).
BigInt torus_hilbert(long long k, long long d, long long q);

/// Regularity index (q-2)(k-1) of the torus with k coordinates.
long long torus_reg(long long k, long long q);

/// Minimum distance of the degree-d code on the torus with s coordinates.
BigInt torus_min_distance(long long s, long long q, long long d);

/// Number of degree-d monomials in s variables.
BigInt monomial_count(long long s, long long d);

struct GraphShape {
  long long n;  // vertices
  long long m;  // connected components
  long long k;  // n / 2
  long long s;  // edges
};

/// Shape of a bipartite graph with a perfect matching; throws GraphError otherwise.
GraphShape bipartite_shape(const Graph& graph);

struct BoundsReport {
  long long d = 0;
  BigInt length;
  BigInt l_d;          // distance lower bound ceil(delta_{T_{n-1}}(2d) / (q-1)^m)
  BigInt u_d;          // distance upper bound (q-1)^{k-m} delta_{T_{k-1}}(d)
  BigInt b_d;          // Singleton bound |X| - dim + 1
  BigInt dim_lower;    // torus Hilbert function in k coordinates
  BigInt reg_lower;    // ceil((q-2)(n-1) / (2 (q-1)^m))
  BigInt reg_upper;    // (q-2)(k-1) + (q-1)^{k-m} - 1
  long long reg_torus_lower = 0;  // (q-2)(k-1)
};

/// `hilbert` is H_X(d) when it has been computed; otherwise the Singleton
/// bound uses dim_lower.
BoundsReport edge_bounds(const GraphShape& shape, long long q, long long d,
                             const std::optional<BigInt>& hilbert = std::nullopt);
BoundsReport edge_bounds(const Graph& graph, long long q, long long d,
                             const std::optional<BigInt>& hilbert = std::nullopt);

}  // namespace edgecodes::formulas
