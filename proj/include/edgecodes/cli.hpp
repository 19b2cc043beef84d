#pragma once

// Command-line front end. The commands are plain functions so that tests can
// run them in-process.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgecodes/gf.hpp"
#include "edgecodes/graph.hpp"
#include "edgecodes/report.hpp"

namespace edgecodes::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kInputError = 2, kBudget = 3 };

struct DegreeRange {
  unsigned lo = 0;
  unsigned hi = 0;
};

/// "a" or "a..b" with a <= b.
DegreeRange parse_degrees(const std::string& text);

/// "all" (empty set) or a comma list of check groups.
std::vector<std::string> parse_checks(const std::string& text);

inline const char* const kCsvHeader = "graph,q,d,length,dim,delta_lo,delta_hi,exact,l_d,u_d,B_d,reg_lower,reg_upper";

struct ParamsRow {
  std::string graph;
  unsigned q = 0;
  unsigned d = 0;
  std::uint64_t length = 0;
  std::uint64_t dim = 0;
  std::uint64_t delta_lo = 0;
  std::uint64_t delta_hi = 0;
  bool exact = false;
  // Decimal strings; absent outside the bipartite-with-perfect-matching case.
  std::optional<std::string> l_d, u_d, b_d, reg_lower, reg_upper;

  bool operator==(const ParamsRow&) const = default;
};

std::vector<ParamsRow> params_rows(const std::string& graph_id, const Graph& graph, const gf::FieldPtr& field,
                                   DegreeRange degrees, std::uint64_t budget);

void write_csv(std::ostream& out, const std::vector<ParamsRow>& rows);
std::vector<ParamsRow> read_csv(std::istream& in);
nlohmann::json to_json(const std::vector<ParamsRow>& rows);
std::vector<ParamsRow> rows_from_json(const nlohmann::json& j);
void write_table(std::ostream& out, const std::vector<ParamsRow>& rows);

/// Expected values of the two-squares example over GF(5): one row per
/// quantity, indexed by degree 1..8, plus "reg".
using Fixture = std::map<std::string, std::vector<std::string>>;
Fixture parse_fixture(const std::string& text);
Fixture builtin_fixture();

struct Reproduction {
  Fixture computed;
  Report report;  // one entry per cell
};

Reproduction reproduce_two_squares(const Fixture& expected);

/// Full CLI; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgecodes::cli
