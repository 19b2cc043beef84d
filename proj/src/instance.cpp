#include "edgecodes/instance.hpp"

namespace edgecodes {

std::optional<std::string> bipartite_obstruction(const Graph& graph) {
  const GraphInfo info = analyze(graph);
  if (!info.bipartition) return "non-bipartite (gamma=" + std::to_string(info.non_bipartite) + ")";
  if (graph.n() % 2 != 0) return "no perfect matching (n=" + std::to_string(graph.n()) + " is odd)";
  if (!perfect_matching(graph, info)) return "no perfect matching";
  return std::nullopt;
}

BipartiteInstance make_instance(const Graph& graph, const gf::FieldPtr& field, std::uint64_t budget) {
  if (auto reason = bipartite_obstruction(graph)) throw GraphError(*reason);
  const GraphInfo info = analyze(graph);
  const Matching matching = *perfect_matching(graph, info);
  const CanonicalOrdering ordering = canonical_order(graph, info, matching);
  Graph canonical = apply_ordering(graph, ordering);

  Matching relabelled;
  for (std::size_t i = 0; i < ordering.block_sizes.size(); ++i) relabelled.push_back(Edge{2 * i, 2 * i + 1});

  GraphInfo canonical_info = analyze(canonical);
  formulas::GraphShape shape{static_cast<long long>(canonical.n()), static_cast<long long>(canonical_info.components),
                             static_cast<long long>(canonical.n() / 2), static_cast<long long>(canonical.s())};
  PointSet x = build_x(canonical, field, budget);
  return BipartiteInstance{std::move(canonical), std::move(canonical_info), std::move(relabelled),
                           ordering.block_sizes, shape, field, std::move(x)};
}

}  // namespace edgecodes
