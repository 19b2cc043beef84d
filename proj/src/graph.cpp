#include "edgecodes/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace edgecodes {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), degrees_(vertex_count, 0), adjacency_(vertex_count) {
  if (n_ == 0) throw GraphError("graph has no vertices");
  std::set<Edge> seen;
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(e).second)
      throw GraphError("parallel edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
    ++degrees_[e.u];
    ++degrees_[e.v];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (degrees_[v] == 0) throw GraphError("isolated vertex " + std::to_string(v + 1));
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
  }
}

GraphInfo analyze(const Graph& graph) {
  const std::size_t n = graph.n();
  GraphInfo info;
  info.component.assign(n, n);
  std::vector<int> colour(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (info.component[start] != n) continue;
    const std::size_t id = info.components++;
    bool odd = false;
    std::queue<std::size_t> queue;
    queue.push(start);
    info.component[start] = id;
    colour[start] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : graph.adjacency()[v]) {
        if (info.component[w] == n) {
          info.component[w] = id;
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          odd = true;
        }
      }
    }
    if (odd) ++info.non_bipartite;
  }
  if (info.non_bipartite == 0) {
    Bipartition part;
    part.in_u.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      part.in_u[v] = colour[v] == 0;
      (part.in_u[v] ? part.u : part.w).push_back(v);
    }
    info.bipartition = std::move(part);
  }
  return info;
}

namespace {

const Bipartition& require_bipartite(const GraphInfo& info) {
  if (!info.bipartition)
    throw GraphError("graph is not bipartite (gamma=" + std::to_string(info.non_bipartite) + ")");
  return *info.bipartition;
}

// Kuhn's augmenting-path matching restricted to the alive vertices.
class Matcher {
 public:
  Matcher(const Graph& graph, const Bipartition& part, const std::vector<bool>& alive)
      : graph_(graph), part_(part), alive_(alive), mate_(graph.n(), kNone) {}

  std::size_t run() {
    std::size_t size = 0;
    for (std::size_t u : part_.u) {
      if (!alive_[u]) continue;
      visited_.assign(graph_.n(), false);
      if (augment(u)) ++size;
    }
    return size;
  }

  Matching matching() const {
    Matching out;
    for (std::size_t u : part_.u)
      if (mate_[u] != kNone) out.push_back(Edge{std::min(u, mate_[u]), std::max(u, mate_[u])});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t u) {
    for (std::size_t w : graph_.adjacency()[u]) {
      if (!alive_[w] || visited_[w]) continue;
      visited_[w] = true;
      if (mate_[w] == kNone || augment(mate_[w])) {
        mate_[w] = u;
        mate_[u] = w;
        return true;
      }
    }
    return false;
  }

  const Graph& graph_;
  const Bipartition& part_;
  const std::vector<bool>& alive_;
  std::vector<std::size_t> mate_;
  std::vector<bool> visited_;
};

}  // namespace

Matching maximum_matching(const Graph& graph, const GraphInfo& info) {
  const auto& part = require_bipartite(info);
  std::vector<bool> alive(graph.n(), true);
  Matcher matcher(graph, part, alive);
  matcher.run();
  return matcher.matching();
}

std::optional<Matching> perfect_matching(const Graph& graph, const GraphInfo& info) {
  const auto& part = require_bipartite(info);
  if (graph.n() % 2 != 0 || part.u.size() != part.w.size()) return std::nullopt;

  std::vector<bool> alive(graph.n(), true);
  auto has_perfect = [&] {
    std::size_t remaining = std::count(alive.begin(), alive.end(), true);
    Matcher matcher(graph, part, alive);
    return 2 * matcher.run() == remaining;
  };
  if (!has_perfect()) return std::nullopt;

  std::vector<Edge> sorted = graph.edges();
  std::sort(sorted.begin(), sorted.end());
  Matching chosen;
  for (const Edge& e : sorted) {
    if (!alive[e.u] || !alive[e.v]) continue;
    alive[e.u] = alive[e.v] = false;
    if (has_perfect()) {
      chosen.push_back(e);
    } else {
      alive[e.u] = alive[e.v] = true;
    }
  }
  return chosen;
}

bool is_perfect_matching(const Graph& graph, const Matching& matching) {
  std::set<Edge> edges(graph.edges().begin(), graph.edges().end());
  std::vector<bool> covered(graph.n(), false);
  for (Edge e : matching) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!edges.count(e)) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

CanonicalOrdering canonical_order(const Graph& graph, const GraphInfo& info, const Matching& matching) {
  const auto& part = require_bipartite(info);
  if (!is_perfect_matching(graph, matching)) throw GraphError("matching is not a perfect matching of the graph");

  // Matching edges as (U-endpoint, W-endpoint), ordered by U-endpoint.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : matching) pairs.emplace_back(part.in_u[e.u] ? e.u : e.v, part.in_u[e.u] ? e.v : e.u);
  std::sort(pairs.begin(), pairs.end());

  CanonicalOrdering ordering;
  ordering.vertex_label.assign(graph.n(), 0);
  std::vector<std::size_t> block_of_u(graph.n(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ordering.vertex_label[pairs[i].first] = 2 * i;
    ordering.vertex_label[pairs[i].second] = 2 * i + 1;
    block_of_u[pairs[i].first] = i;
  }

  std::vector<std::vector<std::size_t>> blocks(pairs.size());
  for (std::size_t idx = 0; idx < graph.s(); ++idx) {
    const Edge& e = graph.edges()[idx];
    const std::size_t u = part.in_u[e.u] ? e.u : e.v;
    blocks[block_of_u[u]].push_back(idx);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& block = blocks[i];
    const std::size_t lead_w = pairs[i].second;
    auto other = [&](std::size_t idx) {
      const Edge& e = graph.edges()[idx];
      return part.in_u[e.u] ? e.v : e.u;
    };
    std::sort(block.begin(), block.end(), [&](std::size_t a, std::size_t b) {
      const bool lead_a = other(a) == lead_w, lead_b = other(b) == lead_w;
      if (lead_a != lead_b) return lead_a;
      return ordering.vertex_label[other(a)] < ordering.vertex_label[other(b)];
    });
    ordering.block_sizes.push_back(block.size());
    ordering.edge_order.insert(ordering.edge_order.end(), block.begin(), block.end());
  }
  return ordering;
}

Graph apply_ordering(const Graph& graph, const CanonicalOrdering& ordering) {
  std::vector<Edge> edges;
  edges.reserve(graph.s());
  for (std::size_t idx : ordering.edge_order) {
    const Edge& e = graph.edges()[idx];
    edges.push_back(Edge{ordering.vertex_label[e.u], ordering.vertex_label[e.v]});
  }
  return Graph(graph.n(), std::move(edges));
}

std::vector<std::size_t> block_of_edges(const CanonicalOrdering& ordering) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ordering.block_sizes.size(); ++i) out.insert(out.end(), ordering.block_sizes[i], i);
  return out;
}

Graph make_cycle(std::size_t length) {
  if (length < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) edges.push_back(Edge{i, (i + 1) % length});
  return Graph(length, std::move(edges));
}

Graph make_even_cycle(std::size_t length) {
  if (length < 4 || length % 2 != 0) throw GraphError("even cycle needs an even length of at least 4");
  return make_cycle(length);
}

Graph make_path(std::size_t vertices) {
  if (vertices < 2) throw GraphError("path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < vertices; ++i) edges.push_back(Edge{i, i + 1});
  return Graph(vertices, std::move(edges));
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw GraphError("complete bipartite graph needs both sides non-empty");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back(Edge{i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph make_disjoint_union(std::span<const Graph> graphs) {
  if (graphs.empty()) throw GraphError("union of no graphs");
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const Graph& g : graphs) {
    for (const Edge& e : g.edges()) edges.push_back(Edge{e.u + offset, e.v + offset});
    offset += g.n();
  }
  return Graph(offset, std::move(edges));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw GraphError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::map<std::pair<long long, long long>, std::size_t> first_line;
  std::size_t max_label = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream in{std::string(line)};
    long long a = 0, b = 0;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra))
      throw GraphError("line " + std::to_string(line_no) + ": expected two vertex labels");
    if (a < 1 || b < 1) throw GraphError("line " + std::to_string(line_no) + ": vertex labels are 1-based");
    edges.push_back(Edge{std::size_t(a - 1), std::size_t(b - 1)});
    max_label = std::max<std::size_t>(max_label, std::size_t(std::max(a, b)));
    if (a == b) throw GraphError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(a));
    auto [it, fresh] = first_line.emplace(std::minmax(a, b), line_no);
    if (!fresh)
      throw GraphError("line " + std::to_string(line_no) + ": edge " + std::to_string(a) + "-" + std::to_string(b) +
                       " repeats line " + std::to_string(it->second));
  }
  if (edges.empty()) throw GraphError("edge list is empty");
  try {
    return Graph(max_label, std::move(edges));
  } catch (const GraphError& e) {
    throw GraphError(std::string("edge list: ") + e.what());
  }
}

Graph parse_graph_spec(std::string_view spec) {
  spec = trim(spec);
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw GraphError("graph spec '" + std::string(spec) + "' has no kind prefix");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "union") {
    std::vector<Graph> parts;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      auto plus = arg.find('+', pos);
      if (plus == std::string_view::npos) plus = arg.size();
      parts.push_back(parse_graph_spec(arg.substr(pos, plus - pos)));
      pos = plus + 1;
    }
    return make_disjoint_union(parts);
  }
  if (kind == "cycle") return make_cycle(parse_count(arg, "cycle length"));
  if (kind == "path") return make_path(parse_count(arg, "path length"));
  if (kind == "kmm") {
    const auto m = parse_count(arg, "K_{m,m} size");
    return make_complete_bipartite(m, m);
  }
  if (kind == "kmn") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw GraphError("kmn expects 'kmn:A,B'");
    return make_complete_bipartite(parse_count(arg.substr(0, comma), "side size"),
                                   parse_count(arg.substr(comma + 1), "side size"));
  }
  if (kind == "edges") {
    std::string text(arg);
    std::replace(text.begin(), text.end(), ',', '\n');
    std::replace(text.begin(), text.end(), '-', ' ');
    return parse_edge_list(text);
  }
  if (kind == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) throw GraphError("cannot open graph file '" + std::string(arg) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
  }
  throw GraphError("unknown graph kind '" + std::string(kind) + "'");
}

std::string to_edge_list(const Graph& graph) {
  std::ostringstream out;
  for (const Edge& e : graph.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace edgecodes
