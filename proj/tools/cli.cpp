#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "fullerene/classify.hpp"
#include "fullerene/generators.hpp"
#include "fullerene/io.hpp"
#include "fullerene/pipeline.hpp"
#include "fullerene/search.hpp"
#include "fullerene/validate.hpp"

namespace fullerene::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "nanotube";
  std::vector<int> ks{0};
  std::string format = "planar_code";
  std::string input;
  std::string out;
  std::string csv;
  std::string report = "text";
  std::int64_t budget_nodes = 100'000'000;
  double budget_secs = 60.0;
  std::vector<int> forbid;
  int radius = 2;
  std::uint64_t seed = 0;
  int jobs = 1;
  int threads = 1;
  std::string method = "exact";
  int n_limit = 30;
  bool single_forbidden = false;
  bool inject_fault = false;
};

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << data;
  if (!f) throw InputError("write failed: " + path);
}

std::vector<std::string> graph_ids(const std::string& path, std::size_t count) {
  const std::string stem = std::filesystem::path(path).filename().string();
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < count; ++i) ids.push_back(stem + ":" + std::to_string(i));
  return ids;
}

void check_forbidden(const std::vector<FullereneGraph>& graphs, const std::vector<int>& forbid) {
  for (const FullereneGraph& g : graphs) {
    for (int v : forbid) {
      if (v < 0 || v >= g.n()) {
        throw InputError("forbidden vertex " + std::to_string(v) + " out of range for n = " +
                         std::to_string(g.n()));
      }
    }
  }
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.node_limit = o.budget_nodes;
  b.time_limit = o.budget_secs;
  b.threads = o.threads;
  return b;
}

int cmd_generate(const Options& o, std::ostream& out) {
  std::vector<FullereneGraph> graphs;
  if (o.family == "buckyball") {
    graphs.push_back(generate_buckyball());
  } else {
    for (int k : o.ks) {
      if (k < 0) throw InputError("nanotube k must be >= 0, got " + std::to_string(k));
      graphs.push_back(generate_nanotube(k));
    }
  }
  std::string data;
  if (o.format == "json") {
    data = encode_json_graphs(graphs);
  } else {
    for (const FullereneGraph& g : graphs) {
      if (g.n() > 255) throw InputError("n = " + std::to_string(g.n()) + " needs --format json");
    }
    const std::vector<std::uint8_t> bytes = encode_planar_code(graphs);
    data.assign(bytes.begin(), bytes.end());
  }
  if (o.out.empty()) {
    out << data;
    return kSuccess;
  }
  write_file(o.out, data);
  // Re-read what was written; a graph that does not come back valid is a bug.
  const std::vector<FullereneGraph> back = read_graph_file(o.out);
  if (back.size() != graphs.size()) return kVerificationFailure;
  for (const FullereneGraph& g : back) out << "wrote n=" << g.n() << " f=" << g.num_faces() << "\n";
  return kSuccess;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const std::vector<FullereneGraph> graphs = read_graph_file(o.input, false);
  const std::vector<std::string> ids = graph_ids(o.input, graphs.size());
  bool all = true;
  nlohmann::json doc = nlohmann::json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const ValidationReport report = validate_fullerene(graphs[i]);
    all = all && report.ok();
    nlohmann::json checks = nlohmann::json::object();
    for (const ValidationCheck& c : report.checks) {
      checks[c.name] = {{"ok", c.ok}, {"detail", c.detail}};
    }
    doc.push_back({{"graph_id", ids[i]}, {"n", graphs[i].n()}, {"ok", report.ok()},
                   {"checks", std::move(checks)}});
    if (o.report == "text") {
      out << ids[i] << " n=" << graphs[i].n() << (report.ok() ? " valid" : " INVALID") << "\n";
      for (const ValidationCheck& c : report.checks) {
        if (!c.ok) out << "  " << c.name << ": " << c.detail << "\n";
      }
    }
  }
  if (o.report == "json") out << doc.dump(2) << "\n";
  return all ? kSuccess : kVerificationFailure;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const std::vector<FullereneGraph> graphs = read_graph_file(o.input);
  check_forbidden(graphs, o.forbid);
  const std::vector<std::string> ids = graph_ids(o.input, graphs.size());
  nlohmann::json doc = nlohmann::json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    nlohmann::json row{{"graph_id", ids[i]}, {"n", graphs[i].n()}, {"method", o.method}};
    if (o.method == "heuristic") {
      if (!o.forbid.empty()) throw InputError("--forbid is not supported by the heuristic");
      const CycleState c = heuristic_long_cycle(graphs[i], o.seed, o.radius);
      row["length"] = c.length();
      row["optimal"] = false;
      row["cycle"] = c.order();
    } else {
      const SearchResult r = longest_cycle_exact(graphs[i], o.forbid, budget_of(o));
      row["length"] = r.cycle.length();
      row["optimal"] = r.optimal;
      row["nodes"] = r.nodes;
      row["cycle"] = r.cycle.order();
    }
    doc.push_back(std::move(row));
  }
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
  return kSuccess;
}

void print_text(const RunReport& report, std::ostream& out) {
  for (const InstanceReport& r : report.rows) {
    out << r.graph_id << ": n=" << r.n << " length=" << r.length
        << (r.optimal ? " (optimal)" : " (budget exhausted, not proven)") << " w=" << r.w
        << " max face charge " << format_units(r.max_charge_halfunits)
        << (r.conserved ? "" : " CONSERVATION FAILED") << " bound " << r.bound
        << (r.bound_ok ? " satisfied" : " VIOLATED");
    if (!(r.p3_ok && r.pentagon_ok && r.two_white_ok)) {
      out << " lemma flags:" << (r.p3_ok ? "" : " p3") << (r.pentagon_ok ? "" : " pentagon")
          << (r.two_white_ok ? "" : " two_white");
    }
    out << (r.ok ? "" : "  FAIL") << "\n";
  }
  out << (report.ok() ? "all audited instances verified" : "verification FAILED") << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<FullereneGraph> graphs = read_graph_file(o.input);
  check_forbidden(graphs, o.forbid);
  VerifyOptions vo;
  vo.budget = budget_of(o);
  vo.forbidden = o.forbid;
  vo.radius = o.radius;
  const RunReport report = verify_corpus(graphs, graph_ids(o.input, graphs.size()), vo, o.jobs);
  if (!o.out.empty()) write_file(o.out, report.to_json().dump(2) + "\n");
  if (!o.csv.empty()) write_file(o.csv, report.to_csv());
  if (o.report == "json") {
    out << report.to_json(false).dump(2) << "\n";
  } else if (o.report == "csv") {
    out << report.to_csv();
  } else {
    print_text(report, out);
  }
  return report.ok() ? kSuccess : kVerificationFailure;
}

struct OracleCase {
  std::size_t graph;
  std::vector<Vertex> forbidden;
};

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const std::vector<FullereneGraph> graphs = read_graph_file(o.input);
  check_forbidden(graphs, o.forbid);
  const std::vector<std::string> ids = graph_ids(o.input, graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].n() > o.n_limit) {
      throw InputError(ids[i] + " has n = " + std::to_string(graphs[i].n()) +
                       " above --n-limit " + std::to_string(o.n_limit));
    }
  }
  std::vector<OracleCase> cases;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    cases.push_back({i, o.forbid});
    if (o.single_forbidden) {
      for (Vertex v = 0; v < graphs[i].n(); ++v) cases.push_back({i, {v}});
    }
  }
  std::vector<std::string> diffs(cases.size());
  std::atomic<std::size_t> next{0};
  const SearchBudget budget = budget_of(o);
  auto work = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      const OracleCase& oc = cases[k];
      const FullereneGraph& g = graphs[oc.graph];
      const SearchResult exact = longest_cycle_exact(g, oc.forbidden, budget);
      std::vector<Vertex> got = exact.cycle.order();
      if (o.inject_fault && k == 0 && !got.empty()) got.pop_back();
      const CycleState brute = brute_force_longest_cycle(g, oc.forbidden);
      const std::vector<Vertex>& want = brute.order();
      if (exact.optimal && got == want) continue;
      std::ostringstream d;
      d << ids[oc.graph] << " forbid {";
      for (std::size_t j = 0; j < oc.forbidden.size(); ++j) d << (j ? "," : "") << oc.forbidden[j];
      d << "}: exact length " << got.size() << (exact.optimal ? "" : " (not optimal)")
        << " vs brute force " << want.size() << "\n";
      d << "  - exact: " << nlohmann::json(got).dump() << "\n";
      d << "  + brute: " << nlohmann::json(want).dump() << "\n";
      if (got.size() >= 5) {
        if (auto defect = cycle_defect(g, got)) d << "  exact cycle is invalid: " << *defect << "\n";
      }
      diffs[k] = d.str();
    }
  };
  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(cases.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
  }
  std::size_t bad = 0;
  for (const std::string& d : diffs) {
    if (d.empty()) continue;
    ++bad;
    out << d;
  }
  out << (bad == 0 ? "PASS" : "FAIL") << ": " << cases.size() << " instances, " << bad
      << " discrepancies\n";
  return bad == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"fullerene longest-cycle toolkit"};
  app.require_subcommand(1);

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", o.budget_nodes, "search node limit per instance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-secs", o.budget_secs, "wall-clock limit per instance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "search workers per instance")
        ->check(CLI::Range(1, 256));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "planar_code or JSON graph file")->required();
  };
  auto add_forbid = [&](CLI::App* sub) {
    sub->add_option("--forbid", o.forbid, "vertices the cycle must avoid, e.g. 3,7")
        ->delimiter(',');
  };

  CLI::App* gen = app.add_subcommand("generate", "write nanotube or buckyball graphs");
  gen->add_option("--family", o.family)->check(CLI::IsMember({"nanotube", "buckyball"}));
  gen->add_option("--k", o.ks, "nanotube ring counts, e.g. 0,1,2")->delimiter(',');
  gen->add_option("--format", o.format)->check(CLI::IsMember({"planar_code", "json"}));
  gen->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* val = app.add_subcommand("validate", "check fullerene invariants");
  add_input(val);
  val->add_option("--report", o.report)->check(CLI::IsMember({"text", "json"}));

  CLI::App* solve = app.add_subcommand("solve", "find a longest cycle");
  add_input(solve);
  add_budget(solve);
  add_forbid(solve);
  solve->add_option("--method", o.method)->check(CLI::IsMember({"exact", "heuristic"}));
  solve->add_option("--seed", o.seed, "heuristic seed");
  solve->add_option("--radius", o.radius, "heuristic reroute radius")->check(CLI::Range(0, 3));
  solve->add_option("--out", o.out, "JSON output file (default stdout)");

  CLI::App* ver = app.add_subcommand("verify", "run the full audit pipeline");
  add_input(ver);
  add_budget(ver);
  add_forbid(ver);
  ver->add_option("--radius", o.radius, "reroute radius for witness moves")
      ->check(CLI::Range(0, 3));
  ver->add_option("--jobs", o.jobs, "instances processed in parallel")->check(CLI::Range(1, 256));
  ver->add_option("--out", o.out, "full JSON report file");
  ver->add_option("--csv", o.csv, "CSV report file");
  ver->add_option("--report", o.report, "stdout format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* orc = app.add_subcommand("oracle-check", "compare exact search with brute force");
  add_input(orc);
  add_budget(orc);
  add_forbid(orc);
  orc->add_option("--n-limit", o.n_limit, "refuse graphs above this size")
      ->check(CLI::Range(1, 64));
  orc->add_flag("--single-forbidden", o.single_forbidden, "also run every single-vertex deletion");
  orc->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));
  orc->add_flag("--inject-fault", o.inject_fault, "test mode: corrupt the first exact result");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*gen) return cmd_generate(o, out);
    if (*val) return cmd_validate(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*orc) return cmd_oracle_check(o, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace fullerene::cli
