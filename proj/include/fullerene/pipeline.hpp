#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fullerene/graph.hpp"
#include "fullerene/search.hpp"

namespace fullerene {

struct VerifyOptions {
  SearchBudget budget;
  std::vector<Vertex> forbidden;
  int radius = 2;
};

/// One row of a verification run. `audited` marks rows whose cycle is a
/// proven longest cycle of the whole graph; only those are held to the
/// charge lemmas and the bound.
struct InstanceReport {
  std::string graph_id;
  int n = 0;
  int f = 0;
  int pentagons = 0;
  int length = 0;
  bool optimal = false;
  int w = 0;
  bool p3_ok = false;
  bool pentagon_ok = false;
  bool two_white_ok = false;
  int max_charge_halfunits = 0;
  bool conserved = false;
  int bound = 0;
  bool bound_ok = false;
  double ms = 0.0;

  bool audited = false;
  bool ok = true;
  nlohmann::json detail;

  nlohmann::json row_json() const;
};

/// solve -> color -> lemma checks -> discharge -> audit -> bound.
InstanceReport verify_instance(const FullereneGraph& g, const std::string& graph_id,
                               const VerifyOptions& options);

struct RunReport {
  std::vector<InstanceReport> rows;

  bool ok() const;
  nlohmann::json to_json(bool with_detail = true) const;
  std::string to_csv() const;
};

inline constexpr const char* kCsvHeader =
    "graph_id,n,f,pentagons,length,optimal,w,p3_ok,pentagon_ok,two_white_ok,"
    "max_charge_halfunits,conserved,bound,bound_ok,ms";

/// Runs verify_instance over the corpus on `jobs` workers; rows keep input
/// order.
RunReport verify_corpus(const std::vector<FullereneGraph>& graphs,
                        const std::vector<std::string>& ids, const VerifyOptions& options,
                        int jobs = 1);

/// Renders half-units as units: 4 -> "2", 3 -> "3/2", -1 -> "-1/2".
std::string format_units(int halfunits);

}  // namespace fullerene
