#pragma once

// Simple undirected graphs, bipartition and perfect matchings, and the
// block ordering of edges that groups them by their U-endpoint.
//
// Vertices are 0-based internally. Text I/O (edge lists, printed labels) is
// 1-based.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edgecodes {

struct Edge {
  std::size_t u;
  std::size_t v;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  /// Validates a simple graph without isolated vertices. Endpoints of each
  /// edge are stored with u < v; edge order is preserved.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t s() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t degree(std::size_t v) const { return degrees_.at(v); }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<std::size_t>> adjacency_;  // sorted neighbour lists
};

struct Bipartition {
  std::vector<std::size_t> u;  // sorted
  std::vector<std::size_t> w;  // sorted
  std::vector<bool> in_u;
};

struct GraphInfo {
  std::size_t components = 0;            // m
  std::size_t non_bipartite = 0;         // gamma
  std::vector<std::size_t> component;    // component id per vertex
  std::optional<Bipartition> bipartition;  // present iff gamma == 0
};

/// Components, odd-cycle components, and a 2-colouring when one exists. The
/// smallest vertex of every component is placed in U.
GraphInfo analyze(const Graph& graph);

using Matching = std::vector<Edge>;

/// Maximum matching of a bipartite graph by augmenting paths, visiting
/// vertices and neighbours in increasing order. Throws GraphError on
/// non-bipartite input.
Matching maximum_matching(const Graph& graph, const GraphInfo& info);

/// The lexicographically first perfect matching (by sorted edge list), or
/// nullopt when none exists. Throws GraphError on non-bipartite input.
std::optional<Matching> perfect_matching(const Graph& graph, const GraphInfo& info);

bool is_perfect_matching(const Graph& graph, const Matching& matching);

/// Relabelling that turns matching edge i into {v_{2i}, v_{2i+1}} (0-based)
/// with the U-endpoint first, and a permutation of edges into blocks, one
/// per U-vertex, each led by its matching edge.
struct CanonicalOrdering {
  std::vector<std::size_t> vertex_label;  // old vertex -> new vertex
  std::vector<std::size_t> edge_order;    // new position -> old edge index
  std::vector<std::size_t> block_sizes;   // degrees n_1, n_3, ..., n_{2k-1}
};

CanonicalOrdering canonical_order(const Graph& graph, const GraphInfo& info, const Matching& matching);

/// The relabelled graph with edges listed in canonical order.
Graph apply_ordering(const Graph& graph, const CanonicalOrdering& ordering);

/// Block index of every edge of a canonically ordered graph.
std::vector<std::size_t> block_of_edges(const CanonicalOrdering& ordering);

Graph make_cycle(std::size_t length);
/// Cycle with an even number of vertices, at least 4.
Graph make_even_cycle(std::size_t length);
Graph make_path(std::size_t vertices);
/// K_{a,b}; vertices 1..a on one side, a+1..a+b on the other.
Graph make_complete_bipartite(std::size_t a, std::size_t b);
/// Disjoint union; vertices of later graphs are shifted past earlier ones.
Graph make_disjoint_union(std::span<const Graph> graphs);

/// One `u v` pair per line, 1-based, `#` starts a comment. The vertex count
/// is the largest label seen. Errors carry the line number.
Graph parse_edge_list(std::string_view text);

/// Graph DSL: `cycle:N`, `path:N`, `kmm:M`, `kmn:A,B`, `edges:1-2,2-3`,
/// `union:G+G+...`, `file:PATH`.
Graph parse_graph_spec(std::string_view spec);

std::string to_edge_list(const Graph& graph);

}  // namespace edgecodes
