#include "fullerene/discharge.hpp"

#include <algorithm>
#include <numeric>

namespace fullerene {

int ChargeLedger::total() const {
  return std::accumulate(face_charge.begin(), face_charge.end(), 0);
}

ChargeLedger initial_charges(const FullereneGraph& g, const CycleState&,
                             const FaceColoring& coloring) {
  ChargeLedger ledger;
  ledger.face_charge.assign(g.num_faces(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!coloring.is_white(v)) continue;
    for (FaceId f : g.faces_at(v)) ledger.face_charge[f] += kHalfUnitsPerUnit;
  }
  ledger.total_initial = 3 * kHalfUnitsPerUnit * coloring.white_count;
  return ledger;
}

ChargeLedger apply_rules(const FullereneGraph& g, const CycleState& c,
                         const FaceColoring& coloring, const ChargeLedger& ledger) {
  std::vector<Transfer> transfers;
  for (const Face& receiver : g.faces()) {
    if (receiver.size() != 6 || coloring.face_class[receiver.id] != FaceClass::black) continue;
    for (int i = 0; i < 6; ++i) {
      const FaceId donor = receiver.across(i);
      if (coloring.face_class[donor] != FaceClass::white) continue;
      const bool before = c.contains_edge(receiver.edge(i - 1));
      const bool here = c.contains_edge(receiver.edge(i));
      const bool after = c.contains_edge(receiver.edge(i + 1));
      if (before && here && after) {
        transfers.push_back({Rule::A, donor, receiver.id, i, 1});
      } else if (here && !before && !after) {
        transfers.push_back({Rule::B, donor, receiver.id, i, 2});
      }
    }
  }
  ChargeLedger out = ledger;
  for (const Transfer& t : transfers) {
    const Face& receiver = g.face(t.receiver);
    if (receiver.size() != 6 || coloring.face_class[t.receiver] != FaceClass::black) {
      throw DischargeError("rule matched a receiver that is not a black hexagon");
    }
    out.face_charge[t.donor] -= t.amount;
    out.face_charge[t.receiver] += t.amount;
    out.rule_log.push_back(t);
  }
  return out;
}

bool AuditReport::passed() const {
  return conserved && pentagons_untouched && (!longest_claim || violations.empty());
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json charges = nlohmann::json::object();
  for (FaceId f = 0; f < static_cast<FaceId>(final_charge.size()); ++f) {
    charges[std::to_string(f)] = final_charge[f];
  }
  nlohmann::json log = nlohmann::json::array();
  for (const Transfer& t : rule_log) {
    log.push_back({{"rule", t.rule == Rule::A ? "A" : "B"},
                   {"donor", t.donor},
                   {"receiver", t.receiver},
                   {"edge_index", t.edge_index},
                   {"amount_halfunits", t.amount}});
  }
  nlohmann::json violation_list = nlohmann::json::array();
  for (const AuditViolation& v : violations) {
    violation_list.push_back(
        {{"face", v.face}, {"kind", v.kind}, {"charge_halfunits", v.charge}, {"region", v.region}});
  }
  return {{"longest_claim", longest_claim},
          {"white_count", white_count},
          {"expected_total_halfunits", expected_total},
          {"final_total_halfunits", final_total},
          {"conserved", conserved},
          {"pentagons_untouched", pentagons_untouched},
          {"max_charge_halfunits", max_charge},
          {"faces_over_one_unit", over_one_unit},
          {"face_charge_halfunits", std::move(charges)},
          {"rule_log", std::move(log)},
          {"violations", std::move(violation_list)},
          {"passed", passed()}};
}

AuditReport audit_final(const FullereneGraph& g, const CycleState& c,
                        const FaceColoring& coloring, const ChargeLedger& ledger,
                        bool longest_claim) {
  AuditReport report;
  report.longest_claim = longest_claim;
  report.white_count = coloring.white_count;
  report.cycle_length = c.length();
  report.expected_total = 3 * kHalfUnitsPerUnit * coloring.white_count;
  report.final_total = ledger.total();
  report.conserved =
      report.final_total == report.expected_total && ledger.total_initial == report.expected_total;
  report.final_charge = ledger.face_charge;
  report.rule_log = ledger.rule_log;
  for (const Transfer& t : ledger.rule_log) {
    if (g.face(t.receiver).size() == 5) report.pentagons_untouched = false;
  }
  report.max_charge = report.final_charge.empty()
                          ? 0
                          : *std::max_element(report.final_charge.begin(), report.final_charge.end());

  auto region_of = [&](FaceId f) {
    std::vector<FaceId> region{f};
    for (FaceId other : g.face(f).neighbors) {
      if (std::find(region.begin(), region.end(), other) == region.end()) region.push_back(other);
    }
    return region;
  };
  for (const Face& face : g.faces()) {
    const int charge = report.final_charge[face.id];
    if (charge > kHalfUnitsPerUnit) report.over_one_unit.push_back(face.id);
    if (!longest_claim) continue;
    if (coloring.face_class[face.id] == FaceClass::white && charge != kHalfUnitsPerUnit) {
      report.violations.push_back({face.id, "white_face_not_one_unit", charge, region_of(face.id)});
    } else if (charge > kHalfUnitsPerUnit) {
      report.violations.push_back({face.id, "face_over_one_unit", charge, region_of(face.id)});
    }
  }
  return report;
}

int theorem_bound(int n) { return n - (n + 4) / 6; }

nlohmann::json BoundReport::to_json() const {
  return {{"n", n},
          {"faces", faces},
          {"white_count", white_count},
          {"final_total_halfunits", final_total},
          {"capacity_halfunits", capacity},
          {"max_white", max_white},
          {"bound", bound},
          {"cycle_length", cycle_length},
          {"satisfied", satisfied}};
}

BoundReport derive_bound(const FullereneGraph& g, const AuditReport& audit) {
  if (!audit.longest_claim) throw BoundRefused("bound needs an audit made under a longest-cycle claim");
  if (!audit.passed()) throw BoundRefused("bound refused: the charge audit failed");
  BoundReport report;
  report.n = g.n();
  report.faces = g.num_faces();
  report.white_count = audit.white_count;
  report.final_total = audit.final_total;
  report.capacity = kHalfUnitsPerUnit * report.faces;
  if (report.final_total > report.capacity) {
    throw BoundRefused("audit passed but total charge exceeds one unit per face");
  }
  // 6w <= 2f  =>  w <= floor(f / 3).
  report.max_white = report.capacity / (3 * kHalfUnitsPerUnit);
  report.bound = report.n - report.max_white;
  report.cycle_length = audit.cycle_length;
  report.satisfied = report.cycle_length >= report.bound;
  return report;
}

}  // namespace fullerene
