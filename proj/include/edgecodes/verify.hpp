#pragma once

// Verification harness: runs every structural and numeric check that applies
// to a graph over a field and collects the results in one Report.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edgecodes/codes.hpp"
#include "edgecodes/gf.hpp"
#include "edgecodes/graph.hpp"
#include "edgecodes/report.hpp"

namespace edgecodes {

/// Check groups selectable with --checks.
inline const std::vector<std::string> kCheckGroups = {
    "length", "regularity", "hilbert", "distance", "ci", "generation", "theta", "decomposition",
};

struct VerifyConfig {
  /// Degrees for the per-degree checks; defaults are chosen per group.
  std::optional<unsigned> d_min;
  std::optional<unsigned> d_max;
  std::uint64_t budget = codes::kDefaultDistanceBudget;
  std::set<std::string> checks;  // empty: all groups
  std::ostream* log = nullptr;   // per-group timings
};

/// Largest degree for which the ideal checks stay within dense-matrix limits.
unsigned ideal_degree_cap(std::size_t points, std::size_t variables);

Report verify_graph(const Graph& graph, const gf::FieldPtr& field, const VerifyConfig& config = {});

}  // namespace edgecodes
