#include "edgecodes/points.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace edgecodes {

namespace {

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (gf::Code x : c) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Coords normalize(const Coords& point, const gf::Field& field) {
  auto it = std::find_if(point.begin(), point.end(), [](gf::Code c) { return c != 0; });
  if (it == point.end()) throw std::invalid_argument("zero vector is not a projective point");
  const gf::Code scale = field.inv(*it);
  Coords out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) out[i] = field.mul(point[i], scale);
  return out;
}

PointSet::PointSet(gf::FieldPtr field, std::size_t dim, std::vector<Coords> points, Provenance provenance,
                   std::optional<MonomialMap> parameterization)
    : field_(std::move(field)), dim_(dim), provenance_(provenance), param_(std::move(parameterization)) {
  if (dim_ == 0) throw std::invalid_argument("point set of dimension 0");
  for (auto& p : points) {
    if (p.size() != dim_) throw std::invalid_argument("point has wrong number of coordinates");
    p = normalize(p, *field_);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw std::invalid_argument("empty point set");
  points_ = std::move(points);
}

bool PointSet::contains(const Coords& normalized) const {
  return std::binary_search(points_.begin(), points_.end(), normalized);
}

PointSet build_from_map(const MonomialMap& map, const gf::FieldPtr& field, Provenance provenance,
                        std::uint64_t budget) {
  const std::size_t s = map.exponents.size();
  const std::size_t r = map.parameters;
  if (s == 0) throw std::invalid_argument("monomial map without coordinates");
  const std::uint64_t order = field->q() - 1;

  std::uint64_t tuples = 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (tuples > budget / std::max<std::uint64_t>(order, 1)) {
      throw BudgetExceeded("enumerating (q-1)^" + std::to_string(r) + " parameter tuples exceeds the budget of " +
                           std::to_string(budget));
    }
    tuples *= order;
  }
  if (tuples > budget) throw BudgetExceeded("parameter sweep exceeds the enumeration budget");

  // Work with discrete logs: t_j = g^{a_j}, coordinate i = g^{<exponents_i, a>}.
  // Normalizing by coordinate 0 subtracts its log.
  std::vector<std::uint64_t> logs(s, 0);
  std::vector<std::uint64_t> digits(r, 0);
  std::unordered_set<Coords, CoordsHash> seen;
  Coords point(s);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const std::uint64_t base = logs[0];
    for (std::size_t i = 0; i < s; ++i) point[i] = field->exp(static_cast<long long>(logs[i] + order - base));
    seen.insert(point);

    // Odometer step over the parameter logs.
    for (std::size_t j = 0; j < r; ++j) {
      ++digits[j];
      for (std::size_t i = 0; i < s; ++i) logs[i] = (logs[i] + map.exponents[i][j]) % order;
      if (digits[j] < order) break;
      digits[j] = 0;
    }
  }
  std::vector<Coords> points(seen.begin(), seen.end());
  return PointSet(field, s, std::move(points), provenance, map);
}

PointSet build_x(const Graph& graph, const gf::FieldPtr& field, std::uint64_t budget) {
  MonomialMap map;
  map.parameters = graph.n();
  for (const Edge& e : graph.edges()) {
    std::vector<unsigned> row(graph.n(), 0);
    row[e.u] = 1;
    row[e.v] = 1;
    map.exponents.push_back(std::move(row));
  }
  return build_from_map(map, field, Provenance::ToricSet, budget);
}

PointSet build_y(const std::vector<std::size_t>& block_degrees, const gf::FieldPtr& field, std::uint64_t budget) {
  if (block_degrees.empty()) throw std::invalid_argument("block set needs at least one block");
  MonomialMap map;
  map.parameters = block_degrees.size();
  for (std::size_t b = 0; b < block_degrees.size(); ++b) {
    if (block_degrees[b] == 0) throw std::invalid_argument("block degrees must be positive");
    for (std::size_t i = 0; i < block_degrees[b]; ++i) {
      std::vector<unsigned> row(block_degrees.size(), 0);
      row[b] = 1;
      map.exponents.push_back(std::move(row));
    }
  }
  return build_from_map(map, field, Provenance::BlockSet, budget);
}

PointSet build_torus(std::size_t s, const gf::FieldPtr& field, std::uint64_t budget) {
  if (s == 0) throw std::invalid_argument("torus needs at least one coordinate");
  MonomialMap map;
  map.parameters = s;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<unsigned> row(s, 0);
    row[i] = 1;
    map.exponents.push_back(std::move(row));
  }
  return build_from_map(map, field, Provenance::Torus, budget);
}

bool is_subset(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point sets live in different projective spaces");
  gf::require_same(*a.field(), *b.field());
  return std::all_of(a.points().begin(), a.points().end(), [&](const Coords& p) { return b.contains(p); });
}

void write_csv(std::ostream& out, const PointSet& points) {
  for (const Coords& p : points.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << unsigned(p[i]);
    out << '\n';
  }
}

PointSet read_csv(std::istream& in, const gf::FieldPtr& field) {
  std::vector<Coords> points;
  std::string line;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Coords c;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      const unsigned long v = std::stoul(cell);
      if (v >= field->q()) throw std::invalid_argument("line " + std::to_string(line_no) + ": coordinate out of range");
      c.push_back(gf::Code(v));
    }
    if (dim == 0) dim = c.size();
    if (c.size() != dim) throw std::invalid_argument("line " + std::to_string(line_no) + ": ragged row");
    points.push_back(std::move(c));
  }
  return PointSet(field, dim, std::move(points), Provenance::Imported);
}

}  // namespace edgecodes
