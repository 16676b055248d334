#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fullerene/classify.hpp"
#include "fullerene/cycle.hpp"
#include "fullerene/graph.hpp"

namespace fullerene {

/// Charges are integers in half-units: 2 half-units make one unit.
inline constexpr int kHalfUnitsPerUnit = 2;

enum class Rule { A, B };

/// One rule application: `receiver` (a black hexagon) takes `amount`
/// half-units from `donor` across the receiver's boundary edge `edge_index`.
struct Transfer {
  Rule rule;
  FaceId donor;
  FaceId receiver;
  int edge_index;
  int amount;
};

struct ChargeLedger {
  std::vector<int> face_charge;
  std::vector<Transfer> rule_log;
  int total_initial = 0;  // 6 * white vertices

  int total() const;
};

class DischargeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every white vertex carries 3 units and hands one to each incident face.
ChargeLedger initial_charges(const FullereneGraph& g, const CycleState& c,
                             const FaceColoring& coloring);

/// Rule A: a black hexagon v1..v6 takes 1/2 unit from the face across
/// v_i v_{i+1} when the path v_{i-1} v_i v_{i+1} v_{i+2} is on the cycle and
/// that face is white. Rule B: it takes 1 unit when v_i v_{i+1} is on the
/// cycle, neither flanking boundary edge is, and the face across is white.
/// Premises read only the cycle and the coloring, so all transfers are
/// computed from the incoming ledger in one pass.
ChargeLedger apply_rules(const FullereneGraph& g, const CycleState& c,
                         const FaceColoring& coloring, const ChargeLedger& ledger);

struct AuditViolation {
  FaceId face;
  std::string kind;  // "white_face_not_one_unit" or "face_over_one_unit"
  int charge;
  /// The face and its neighbors: where an improving reroute should exist.
  std::vector<FaceId> region;
};

struct AuditReport {
  bool longest_claim = false;
  int white_count = 0;
  int cycle_length = 0;
  int expected_total = 0;
  int final_total = 0;
  bool conserved = false;
  bool pentagons_untouched = true;
  std::vector<int> final_charge;
  std::vector<FaceId> over_one_unit;
  int max_charge = 0;
  std::vector<AuditViolation> violations;
  std::vector<Transfer> rule_log;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// With longest_claim the charge lemmas are asserted: white faces end with
/// exactly one unit and no face ends above one unit. Without it the same
/// facts are reported but only conservation decides `passed`.
AuditReport audit_final(const FullereneGraph& g, const CycleState& c,
                        const FaceColoring& coloring, const ChargeLedger& ledger,
                        bool longest_claim);

/// Smallest cycle length any longest cycle can have: ceil(5n/6 - 2/3),
/// computed as n - floor((n + 4) / 6).
int theorem_bound(int n);

struct BoundReport {
  int n = 0;
  int faces = 0;
  int white_count = 0;
  int final_total = 0;      // 6w, half-units
  int capacity = 0;         // 2f, half-units: at most one unit per face
  int max_white = 0;        // floor(f / 3)
  int bound = 0;            // n - floor(f / 3)
  int cycle_length = 0;
  bool satisfied = false;

  nlohmann::json to_json() const;
};

class BoundRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chains 6w = sum of final charges <= 2f, so w <= floor(f/3), with
/// f = n/2 + 2. Throws BoundRefused unless the audit passed under a
/// longest-cycle claim.
BoundReport derive_bound(const FullereneGraph& g, const AuditReport& audit);

}  // namespace fullerene
