#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "critlab/audits.hpp"
#include "critlab/claims.hpp"
#include "critlab/discharging.hpp"
#include "critlab/edge_coloring.hpp"
#include "critlab/graph.hpp"
#include "critlab/mis.hpp"
#include "critlab/params.hpp"

namespace critlab {

/// Where a graph came from: its 0-based record index, source line and text.
struct GraphId {
  std::size_t index = 0;
  std::size_t line = 0;
  std::string graph6;
};

nlohmann::json to_json(const GraphId& id);
nlohmann::json params_json(const Params& p);
nlohmann::json to_json(const ClaimVerdict& v, const Params& p);
nlohmann::json to_json(const BoundReport& r);
/// [[u, v, color], ...] in edge-id order; uncolored edges carry 0.
nlohmann::json coloring_json(const EdgeColoring& c);
nlohmann::json to_json(const ChargeLedger& ledger, bool with_rows);

/// Constants the lemma auditors share.
struct AuditSettings {
  Surd epsilon;
  Rational lambda;
  AuditContext context;
};

nlohmann::json chi_report(const GraphId& id, const Graph& g, std::uint64_t budget);
nlohmann::json mis_report(const GraphId& id, const Graph& g);

/// Every edge xy in both orientations against a Delta-coloring of G - xy.
/// `detailed` keeps each report; otherwise only per-lemma counts and the
/// first counterexample.
nlohmann::json lemma_audits(const Graph& g, const AuditSettings& s, std::uint64_t budget, bool detailed);

struct GraphReportOptions {
  std::uint64_t budget = 1000000;
  int d = 3;
  ParamOptions param_options;
  AuditSettings audit;
};

/// Class, criticality, alpha and bounds, the adjacency audit, lemma audit
/// summaries (when criticality is established or assumed) and a digest of the
/// discharging ledger over a maximum independent set.
nlohmann::json graph_report(const GraphId& id, const Graph& g, const GraphReportOptions& options);

}  // namespace critlab
