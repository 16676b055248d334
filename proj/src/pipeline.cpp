#include "fullerene/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "fullerene/classify.hpp"
#include "fullerene/discharge.hpp"
#include "fullerene/reroute.hpp"

namespace fullerene {

namespace {

nlohmann::json check_json(const LemmaCheck& check) {
  nlohmann::json j{{"ok", check.ok}, {"witness", check.witness}};
  if (check.face) j["face"] = *check.face;
  return j;
}

// Improving moves around every flagged face, as evidence that the cycle is
// not longest.
nlohmann::json witness_moves(const FullereneGraph& g, const CycleState& c,
                             std::vector<FaceId> flagged, int radius) {
  std::sort(flagged.begin(), flagged.end());
  flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
  nlohmann::json moves = nlohmann::json::array();
  for (FaceId f : flagged) {
    std::optional<RerouteMove> move = face_segment_swap(g, c, f);
    if (!move) {
      const FaceId region[] = {f};
      move = bounded_local_reroute(g, c, region, radius);
    }
    if (move) moves.push_back(move->to_json(g));
  }
  return moves;
}

}  // namespace

nlohmann::json InstanceReport::row_json() const {
  return {{"graph_id", graph_id},
          {"n", n},
          {"f", f},
          {"pentagons", pentagons},
          {"length", length},
          {"optimal", optimal},
          {"w", w},
          {"p3_ok", p3_ok},
          {"pentagon_ok", pentagon_ok},
          {"two_white_ok", two_white_ok},
          {"max_charge_halfunits", max_charge_halfunits},
          {"conserved", conserved},
          {"bound", bound},
          {"bound_ok", bound_ok},
          {"ms", ms}};
}

InstanceReport verify_instance(const FullereneGraph& g, const std::string& graph_id,
                               const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  InstanceReport row;
  row.graph_id = graph_id;
  row.n = g.n();
  row.f = g.num_faces();
  row.pentagons = g.count_faces_of_size(5);

  const SearchResult solved = longest_cycle_exact(g, options.forbidden, options.budget);
  const CycleState& c = solved.cycle;
  row.length = c.length();
  row.optimal = solved.optimal;
  row.audited = solved.optimal && options.forbidden.empty() && !c.empty();

  nlohmann::json detail;
  detail["search"] = {{"nodes", solved.nodes}, {"seconds", solved.seconds}};
  detail["forbidden"] = options.forbidden;
  detail["cycle"] = c.order();
  row.bound = theorem_bound(g.n());

  if (c.empty()) {
    row.w = g.n();
    row.ok = !(row.optimal && options.forbidden.empty());
    detail["note"] = "no cycle avoids the forbidden vertices";
    row.detail = std::move(detail);
    return row;
  }

  const FaceColoring coloring = color(g, c);
  row.w = coloring.white_count;
  const LemmaCheck p3 = check_no_white_p3(g, coloring);
  const LemmaCheck pent = check_no_white_pentagon(g, coloring);
  const LemmaCheck two = check_max_two_whites_per_face(g, coloring);
  row.p3_ok = p3.ok;
  row.pentagon_ok = pent.ok;
  row.two_white_ok = two.ok;
  detail["checks"] = {{"no_white_p3", check_json(p3)},
                      {"no_white_pentagon", check_json(pent)},
                      {"max_two_whites_per_face", check_json(two)}};

  nlohmann::json patterns = nlohmann::json::array();
  std::vector<FaceId> outside;
  for (const Face& face : g.faces()) {
    const TraversalPattern p = classify_pattern(g, face.id, coloring, c);
    patterns.push_back(p.canonical_id);
    if (!p.lemma_consistent) outside.push_back(face.id);
  }
  detail["patterns"] = {{"canonical_ids", std::move(patterns)}, {"lemma_inconsistent", outside}};

  const ChargeLedger initial = initial_charges(g, c, coloring);
  const ChargeLedger ledger = apply_rules(g, c, coloring, initial);
  const AuditReport audit = audit_final(g, c, coloring, ledger, row.audited);
  row.conserved = audit.conserved;
  row.max_charge_halfunits = audit.max_charge;
  detail["audit"] = audit.to_json();

  if (row.audited && audit.passed()) {
    const BoundReport bound = derive_bound(g, audit);
    row.bound = bound.bound;
    detail["bound"] = bound.to_json();
  }
  row.bound_ok = row.length >= row.bound;

  std::vector<FaceId> flagged = outside;
  if (!p3.ok || !two.ok || !pent.ok) {
    for (const LemmaCheck* check : {&p3, &pent, &two}) {
      if (check->face) flagged.push_back(*check->face);
    }
  }
  for (const AuditViolation& v : audit.violations) flagged.push_back(v.face);
  if (!flagged.empty()) detail["moves"] = witness_moves(g, c, flagged, options.radius);

  if (row.audited) {
    row.ok = p3.ok && pent.ok && two.ok && audit.passed() && outside.empty() && row.bound_ok;
  } else if (row.optimal) {
    row.ok = audit.passed();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  row.ms = std::round(ms * 1000.0) / 1000.0;
  row.detail = std::move(detail);
  return row;
}

bool RunReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const InstanceReport& r) { return r.ok; });
}

nlohmann::json RunReport::to_json(bool with_detail) const {
  nlohmann::json out = nlohmann::json::array();
  for (const InstanceReport& r : rows) {
    nlohmann::json j = r.row_json();
    j["audited"] = r.audited;
    j["instance_ok"] = r.ok;
    if (with_detail) j["detail"] = r.detail;
    out.push_back(std::move(j));
  }
  return {{"rows", std::move(out)}, {"ok", ok()}};
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const InstanceReport& r : rows) {
    const nlohmann::json j = r.row_json();
    bool first = true;
    for (const char* key : {"graph_id", "n", "f", "pentagons", "length", "optimal", "w", "p3_ok",
                            "pentagon_ok", "two_white_ok", "max_charge_halfunits", "conserved",
                            "bound", "bound_ok", "ms"}) {
      if (!first) out << ",";
      first = false;
      const auto& value = j.at(key);
      out << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << "\n";
  }
  return out.str();
}

RunReport verify_corpus(const std::vector<FullereneGraph>& graphs,
                        const std::vector<std::string>& ids, const VerifyOptions& options,
                        int jobs) {
  RunReport report;
  report.rows.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      report.rows[i] = verify_instance(graphs[i], ids[i], options);
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
  }
  return report;
}

std::string format_units(int halfunits) {
  if (halfunits % 2 == 0) return std::to_string(halfunits / 2);
  return std::to_string(halfunits) + "/2";
}

}  // namespace fullerene
