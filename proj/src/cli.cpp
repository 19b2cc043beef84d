#include "edgecodes/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "edgecodes/codes.hpp"
#include "edgecodes/fixture.hpp"
#include "edgecodes/formulas.hpp"
#include "edgecodes/instance.hpp"
#include "edgecodes/points.hpp"
#include "edgecodes/verify.hpp"

namespace edgecodes::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad " + what + ": '" + s + "'");
  return std::stoull(s);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One CSV record with RFC 4180 quoting.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV record");
  return out;
}

std::string opt(const std::optional<std::string>& v) { return v.value_or(""); }
std::optional<std::string> unopt(const std::string& v) {
  if (v.empty()) return std::nullopt;
  return v;
}

nlohmann::json number_or_null(const std::optional<std::string>& v) {
  if (!v) return nullptr;
  return nlohmann::json::parse(*v);
}

std::optional<std::string> from_number(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  return v.dump();
}

std::string delta_text(const ParamsRow& r) {
  return r.exact ? std::to_string(r.delta_lo)
                 : "[" + std::to_string(r.delta_lo) + "," + std::to_string(r.delta_hi) + "]";
}

Graph make_two_squares() {
  const std::vector<Graph> parts{make_even_cycle(4), make_even_cycle(4)};
  return make_disjoint_union(parts);
}

void write_report_table(std::ostream& out, const Report& report) {
  for (const auto& r : report.results()) {
    out << std::left << std::setw(8) << to_string(r.status) << std::setw(28) << r.check;
    out << std::setw(6) << (r.degree ? "d=" + std::to_string(*r.degree) : std::string());
    if (r.status == Status::Skipped) {
      out << r.note;
    } else {
      out << "expected " << r.expected << ", got " << r.got;
      if (r.witness) out << "  [witness: " << *r.witness << "]";
      if (!r.note.empty()) out << "  (" << r.note << ")";
    }
    out << '\n';
  }
  out << "summary: " << report.count(Status::Pass) << " pass, " << report.count(Status::Fail) << " fail, "
      << report.count(Status::Skipped) << " skipped\n";
}

nlohmann::json summary_json(const Report& report) {
  return {{"pass", report.count(Status::Pass)},
          {"fail", report.count(Status::Fail)},
          {"skipped", report.count(Status::Skipped)}};
}

}  // namespace

DegreeRange parse_degrees(const std::string& text) {
  const auto dots = text.find("..");
  DegreeRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = static_cast<unsigned>(parse_u64(text, "degree"));
  } else {
    r.lo = static_cast<unsigned>(parse_u64(text.substr(0, dots), "degree"));
    r.hi = static_cast<unsigned>(parse_u64(text.substr(dots + 2), "degree"));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty degree range '" + text + "'");
  return r;
}

std::vector<std::string> parse_checks(const std::string& text) {
  if (text == "all") return {};
  std::vector<std::string> out;
  for (const auto& name : split(text, ',')) {
    if (std::find(kCheckGroups.begin(), kCheckGroups.end(), name) == kCheckGroups.end())
      throw std::invalid_argument("unknown check group '" + name + "'");
    out.push_back(name);
  }
  if (out.empty()) throw std::invalid_argument("empty check list");
  return out;
}

std::vector<ParamsRow> params_rows(const std::string& graph_id, const Graph& graph, const gf::FieldPtr& field,
                                   DegreeRange degrees, std::uint64_t budget) {
  std::optional<BipartiteInstance> instance;
  std::optional<PointSet> x;
  if (!bipartite_obstruction(graph)) {
    instance.emplace(make_instance(graph, field, budget));
  } else {
    x.emplace(build_x(graph, field, budget));
  }
  const PointSet& points = instance ? instance->x : *x;
  const unsigned q = field->q();

  std::vector<ParamsRow> rows;
  for (unsigned d = degrees.lo; d <= degrees.hi; ++d) {
    ParamsRow row;
    row.graph = graph_id;
    row.q = q;
    row.d = d;
    row.length = points.size();
    const auto h = codes::hilbert(points, d);
    row.dim = h.value;
    std::uint64_t lower = 1;
    if (instance) {
      const auto b = formulas::edge_bounds(instance->shape, q, d, formulas::BigInt(h.value));
      if (d >= 1) {
        row.l_d = b.l_d.str();
        row.u_d = b.u_d.str();
        lower = static_cast<std::uint64_t>(b.l_d);
      }
      row.b_d = b.b_d.str();
      row.reg_lower = b.reg_lower.str();
      row.reg_upper = b.reg_upper.str();
    }
    const auto dist = codes::min_distance(codes::generator_matrix(points, h.basis_monomials), budget, lower);
    row.delta_lo = dist.lo;
    row.delta_hi = dist.hi;
    row.exact = dist.exact;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ParamsRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_escape(r.graph) << ',' << r.q << ',' << r.d << ',' << r.length << ',' << r.dim << ',' << r.delta_lo
        << ',' << r.delta_hi << ',' << (r.exact ? "true" : "false") << ',' << opt(r.l_d) << ',' << opt(r.u_d) << ','
        << opt(r.b_d) << ',' << opt(r.reg_lower) << ',' << opt(r.reg_upper) << '\n';
  }
}

std::vector<ParamsRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing or wrong CSV header");
  std::vector<ParamsRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = csv_fields(line);
    if (f.size() != 13) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 13 fields");
    ParamsRow r;
    r.graph = f[0];
    r.q = static_cast<unsigned>(parse_u64(f[1], "q"));
    r.d = static_cast<unsigned>(parse_u64(f[2], "d"));
    r.length = parse_u64(f[3], "length");
    r.dim = parse_u64(f[4], "dim");
    r.delta_lo = parse_u64(f[5], "delta_lo");
    r.delta_hi = parse_u64(f[6], "delta_hi");
    if (f[7] != "true" && f[7] != "false") throw std::invalid_argument("line " + std::to_string(lineno) + ": bad exact flag");
    r.exact = f[7] == "true";
    r.l_d = unopt(f[8]);
    r.u_d = unopt(f[9]);
    r.b_d = unopt(f[10]);
    r.reg_lower = unopt(f[11]);
    r.reg_upper = unopt(f[12]);
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json to_json(const std::vector<ParamsRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"graph", r.graph},
                   {"q", r.q},
                   {"d", r.d},
                   {"length", r.length},
                   {"dim", r.dim},
                   {"delta_lo", r.delta_lo},
                   {"delta_hi", r.delta_hi},
                   {"exact", r.exact},
                   {"l_d", number_or_null(r.l_d)},
                   {"u_d", number_or_null(r.u_d)},
                   {"B_d", number_or_null(r.b_d)},
                   {"reg_lower", number_or_null(r.reg_lower)},
                   {"reg_upper", number_or_null(r.reg_upper)}});
  return arr;
}

std::vector<ParamsRow> rows_from_json(const nlohmann::json& j) {
  std::vector<ParamsRow> rows;
  for (const auto& o : j) {
    ParamsRow r;
    r.graph = o.at("graph").get<std::string>();
    r.q = o.at("q").get<unsigned>();
    r.d = o.at("d").get<unsigned>();
    r.length = o.at("length").get<std::uint64_t>();
    r.dim = o.at("dim").get<std::uint64_t>();
    r.delta_lo = o.at("delta_lo").get<std::uint64_t>();
    r.delta_hi = o.at("delta_hi").get<std::uint64_t>();
    r.exact = o.at("exact").get<bool>();
    r.l_d = from_number(o.at("l_d"));
    r.u_d = from_number(o.at("u_d"));
    r.b_d = from_number(o.at("B_d"));
    r.reg_lower = from_number(o.at("reg_lower"));
    r.reg_upper = from_number(o.at("reg_upper"));
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_table(std::ostream& out, const std::vector<ParamsRow>& rows) {
  if (!rows.empty()) out << "graph " << rows.front().graph << ", q=" << rows.front().q << '\n';
  const char* cols[] = {"d", "length", "dim", "delta", "l_d", "u_d", "B_d"};
  for (const char* c : cols) out << std::setw(10) << c;
  out << '\n';
  for (const auto& r : rows) {
    out << std::setw(10) << r.d << std::setw(10) << r.length << std::setw(10) << r.dim << std::setw(10)
        << delta_text(r) << std::setw(10) << opt(r.l_d) << std::setw(10) << opt(r.u_d) << std::setw(10) << opt(r.b_d)
        << '\n';
  }
  if (!rows.empty() && rows.front().reg_lower)
    out << "reg bounds: " << *rows.front().reg_lower << " <= reg <= " << *rows.front().reg_upper << '\n';
}

Fixture parse_fixture(const std::string& text) {
  Fixture f;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, ',');
    const std::string key = fields.front();
    if (key == "quantity") continue;
    fields.erase(fields.begin());
    f[key] = std::move(fields);
  }
  return f;
}

Fixture builtin_fixture() { return parse_fixture(kTwoSquaresFixture); }

Reproduction reproduce_two_squares(const Fixture& expected) {
  const auto field = gf::Field::make(5);
  const auto instance = make_instance(make_two_squares(), field);
  const PointSet y = build_y(instance.blocks, field);
  const PointSet torus = build_torus(instance.k(), field);

  Reproduction out;
  auto& c = out.computed;
  for (unsigned d = 1; d <= 8; ++d) {
    const auto h_x = codes::hilbert_value(instance.x, d, codes::HilbertMethod::Rank);
    const auto h_y = codes::hilbert_value(y, d, codes::HilbertMethod::Rank);
    const auto h_t = codes::hilbert_value(torus, d, codes::HilbertMethod::Rank);
    const auto b = formulas::edge_bounds(instance.shape, 5, d, formulas::BigInt(h_x));
    c["H_T"].push_back(std::to_string(h_t));
    c["H_psi"].push_back(std::to_string(h_x - h_y));
    c["H_X"].push_back(std::to_string(h_x));
    c["l_d"].push_back(b.l_d.str());
    c["u_d"].push_back(b.u_d.str());
    c["B_d"].push_back(b.b_d.str());
  }
  const auto bounds = formulas::edge_bounds(instance.shape, 5, 0);
  const auto sweep = codes::regularity_index(instance.x, static_cast<unsigned>(bounds.reg_upper) + 1);
  c["reg"].push_back(std::to_string(sweep.reg));

  for (const auto& [key, values] : c) {
    auto it = expected.find(key);
    const std::vector<std::string> none;
    const auto& want = it == expected.end() ? none : it->second;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string e = i < want.size() ? want[i] : "(missing)";
      std::optional<unsigned> degree;
      if (key != "reg") degree = static_cast<unsigned>(i + 1);
      out.report.compare(key, degree, e, values[i], key + " cell " + std::to_string(i + 1));
    }
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation codes parameterized by the edges of a graph"};
  app.require_subcommand(1);

  std::string graph_spec;
  unsigned q = 0;
  std::string degrees_text;
  std::uint64_t budget = codes::kDefaultDistanceBudget;
  std::string format = "table";
  std::string out_path;
  std::string checks_text = "all";
  std::string set_name = "x";

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph) {
      sub->add_option("--graph", graph_spec, "cycle:N, path:N, kmm:M, kmn:A,B, edges:1-2,2-3, union:G+G, file:PATH")
          ->required();
      sub->add_option("--q", q, "field size, a prime power")->required();
      sub->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
    }
    sub->add_option("--out", out_path, "write output to this file");
  };

  auto* params = app.add_subcommand("params", "code parameters per degree");
  add_common(params, true);
  params->add_option("--d", degrees_text, "degree a or range a..b")->required();
  params->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "check formulas, bounds and ideal identities");
  add_common(verify, true);
  verify->add_option("--d", degrees_text, "restrict per-degree checks to a or a..b");
  verify->add_option("--checks", checks_text, "all, or a comma list of check groups");
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* reproduce = app.add_subcommand("reproduce-paper", "two 4-cycles over GF(5) against the stored tables");
  add_common(reproduce, false);
  reproduce->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* points = app.add_subcommand("points", "export a point set as CSV");
  add_common(points, true);
  points->add_option("--set", set_name, "x, y or torus")->check(CLI::IsMember({"x", "y", "torus"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kInputError;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*reproduce) {
      const auto result = reproduce_two_squares(builtin_fixture());
      if (format == "json") {
        nlohmann::json j;
        j["computed"] = result.computed;
        j["results"] = result.report.to_json();
        j["summary"] = summary_json(result.report);
        sink << j.dump(2) << '\n';
      } else {
        sink << "Two disjoint 4-cycles, q=5\n";
        sink << std::left << std::setw(8) << "d" << std::right;
        for (unsigned d = 1; d <= 8; ++d) sink << std::setw(6) << d;
        sink << '\n';
        for (const char* key : {"H_T", "H_psi", "H_X", "", "l_d", "u_d", "B_d"}) {
          if (!*key) {
            sink << '\n';
            continue;
          }
          sink << std::left << std::setw(8) << key << std::right;
          for (const auto& v : result.computed.at(key)) sink << std::setw(6) << v;
          sink << '\n';
        }
        sink << "\nreg = " << result.computed.at("reg").front() << '\n';
        for (const auto& r : result.report.results())
          if (r.status == Status::Fail)
            sink << "MISMATCH " << r.check << " d=" << (r.degree ? std::to_string(*r.degree) : "-") << ": expected "
                 << r.expected << ", got " << r.got << '\n';
        sink << "cells matched: " << result.report.count(Status::Pass) << "/" << result.report.results().size()
             << '\n';
      }
      return result.report.passed() ? kPass : kVerificationFailure;
    }

    const Graph graph = parse_graph_spec(graph_spec);
    const auto field = gf::Field::make(q);

    if (*params) {
      const auto rows = params_rows(graph_spec, graph, field, parse_degrees(degrees_text), budget);
      if (format == "csv")
        write_csv(sink, rows);
      else if (format == "json")
        sink << to_json(rows).dump(2) << '\n';
      else
        write_table(sink, rows);
      return kPass;
    }

    if (*verify) {
      VerifyConfig config;
      config.budget = budget;
      config.log = &err;
      for (const auto& c : parse_checks(checks_text)) config.checks.insert(c);
      if (!degrees_text.empty()) {
        const auto r = parse_degrees(degrees_text);
        config.d_min = r.lo;
        config.d_max = r.hi;
      }
      const Report report = verify_graph(graph, field, config);
      if (format == "json") {
        nlohmann::json j;
        j["graph"] = graph_spec;
        j["q"] = q;
        j["results"] = report.to_json();
        j["summary"] = summary_json(report);
        sink << j.dump(2) << '\n';
      } else {
        sink << "graph " << graph_spec << ", q=" << q << '\n';
        write_report_table(sink, report);
      }
      return report.passed() ? kPass : kVerificationFailure;
    }

    if (*points) {
      if (set_name == "x") {
        edgecodes::write_csv(sink, build_x(graph, field, budget));
      } else {
        const auto instance = make_instance(graph, field, budget);
        if (set_name == "y")
          edgecodes::write_csv(sink, build_y(instance.blocks, field, budget));
        else
          edgecodes::write_csv(sink, build_torus(instance.k(), field, budget));
      }
      return kPass;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::overflow_error& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInputError;
}

}  // namespace edgecodes::cli
