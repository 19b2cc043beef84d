#pragma once

// Projective point sets: the toric set X of a graph, the block set Y, and the
// projective torus. Every set here is the image of a monomial map
// (K*)^r -> P^{s-1}; the map is kept alongside the points.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgecodes/gf.hpp"
#include "edgecodes/graph.hpp"

namespace edgecodes {

using Coords = std::vector<gf::Code>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t(1) << 24;

/// Scales a nonzero vector so its first nonzero coordinate is 1.
Coords normalize(const Coords& point, const gf::Field& field);

/// Coordinate i of a point is prod_j t_j^{exponents[i][j]} for t in (K*)^r.
struct MonomialMap {
  std::size_t parameters = 0;
  std::vector<std::vector<unsigned>> exponents;  // one row per coordinate
};

enum class Provenance { ToricSet, BlockSet, Torus, Imported };

class PointSet {
 public:
  PointSet(gf::FieldPtr field, std::size_t dim, std::vector<Coords> points, Provenance provenance,
           std::optional<MonomialMap> parameterization = std::nullopt);

  const gf::FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Coords>& points() const { return points_; }
  const Coords& operator[](std::size_t i) const { return points_[i]; }
  Provenance provenance() const { return provenance_; }
  const std::optional<MonomialMap>& parameterization() const { return param_; }

  bool contains(const Coords& normalized) const;

 private:
  gf::FieldPtr field_;
  std::size_t dim_;
  std::vector<Coords> points_;  // normalized, sorted, unique
  Provenance provenance_;
  std::optional<MonomialMap> param_;
};

/// Sweeps all of (K*)^r, normalizes and deduplicates the images.
PointSet build_from_map(const MonomialMap& map, const gf::FieldPtr& field, Provenance provenance,
                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Toric set parameterized by the edges, coordinates in the graph's edge order.
PointSet build_x(const Graph& graph, const gf::FieldPtr& field, std::uint64_t budget = kDefaultEnumerationBudget);

/// Points [t_1,..,t_1, t_3,..,t_3, ...] where block i has the given length.
PointSet build_y(const std::vector<std::size_t>& block_degrees, const gf::FieldPtr& field,
                 std::uint64_t budget = kDefaultEnumerationBudget);

/// Projective torus T_{s-1}.
PointSet build_torus(std::size_t s, const gf::FieldPtr& field, std::uint64_t budget = kDefaultEnumerationBudget);

/// Throws std::invalid_argument on differing dimension or field.
bool is_subset(const PointSet& a, const PointSet& b);

/// One normalized point per row, coordinates as integer codes.
void write_csv(std::ostream& out, const PointSet& points);
PointSet read_csv(std::istream& in, const gf::FieldPtr& field);

}  // namespace edgecodes
