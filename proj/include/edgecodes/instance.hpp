#pragma once

// A bipartite graph with a perfect matching, relabelled into canonical block
// order, together with its toric set over a chosen field.

#include <optional>
#include <string>
#include <vector>

#include "edgecodes/formulas.hpp"
#include "edgecodes/gf.hpp"
#include "edgecodes/graph.hpp"
#include "edgecodes/points.hpp"

namespace edgecodes {

struct BipartiteInstance {
  Graph graph;                    // canonical labels and edge order
  GraphInfo info;                 // of `graph`
  Matching matching;              // {v_{2i-1}, v_{2i}} in 1-based labels
  std::vector<std::size_t> blocks;  // n_1, n_3, ..., n_{2k-1}
  formulas::GraphShape shape;
  gf::FieldPtr field;
  PointSet x;

  std::size_t k() const { return blocks.size(); }
};

/// Why the graph is outside the bipartite-with-perfect-matching family, or
/// nullopt when it is inside.
std::optional<std::string> bipartite_obstruction(const Graph& graph);

/// Throws GraphError (with the obstruction as message) or BudgetExceeded.
BipartiteInstance make_instance(const Graph& graph, const gf::FieldPtr& field,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace edgecodes
