#include "critlab/report.hpp"

#include <map>
#include <memory>

#include "critlab/errors.hpp"
#include "critlab/palette.hpp"

namespace critlab {

using nlohmann::json;

json to_json(const GraphId& id) { return {{"index", id.index}, {"line", id.line}, {"graph6", id.graph6}}; }

json params_json(const Params& p) {
  json out = {{"d", p.d},
              {"delta", to_string(p.delta)},
              {"omega", p.omega_description},
              {"epsilon", p.epsilon.to_string()},
              {"lambda", to_string(p.lambda)},
              {"q", p.q.to_string()},
              {"c0", to_string(p.c0)},
              {"D0_term", p.d0_term},
              {"D0_ceiling", to_string(p.d0_ceiling)}};
  if (p.outside_default_range) out["watermark"] = "outside paper's parameter range";
  return out;
}

json to_json(const ClaimVerdict& v, const Params& p) {
  json out = {{"claim", v.claim},
              {"status", to_string(v.status)},
              {"interval", json::array({v.interval.lo_string(), v.interval.hi_string()})},
              {"precision_bits", v.precision_bits},
              {"params", params_json(p)}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const BoundReport& r) {
  json checks = json::array();
  for (const BoundCheck& c : r.checks) {
    json j = {{"name", c.name}, {"relation", c.relation}, {"bound", c.bound}, {"applicable", c.applicable}};
    if (c.applicable) j["holds"] = c.holds;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return {{"n", r.n}, {"alpha", r.alpha}, {"min_degree", r.min_degree}, {"checks", checks}};
}

json coloring_json(const EdgeColoring& c) {
  json out = json::array();
  const auto& edges = c.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out.push_back({edges[i].u, edges[i].v, c.color(static_cast<int>(i))});
  return out;
}

json to_json(const ChargeLedger& L, bool with_rows) {
  std::map<std::string, int> roles;
  for (const std::string& r : L.role) ++roles[r];
  json out = {{"roles", roles},
              {"total_M0", L.total_M0.to_string()},
              {"total_M0*", L.total_M0s.to_string()},
              {"total_M1", L.total_M1.to_string()},
              {"total_M1*", L.total_M1s.to_string()},
              {"total_M2*", L.total_M2s.to_string()},
              {"step0_conserved", L.step0_conserved},
              {"steps12_conserved", L.steps12_conserved},
              {"x_identity", L.x_identity},
              {"y_floor", L.y_floor},
              {"y_independent", L.y_independent},
              {"satisfied", L.satisfied},
              {"unsatisfied", L.unsatisfied}};
  if (with_rows) {
    json rows = json::array();
    for (std::size_t v = 0; v < L.role.size(); ++v) {
      rows.push_back({{"vertex", v},
                      {"role", L.role[v]},
                      {"M0", L.M0[v].to_string()},
                      {"M0*", L.M0s[v].to_string()},
                      {"M1", L.M1[v].to_string()},
                      {"M1*", L.M1s[v].to_string()},
                      {"M2*", L.M2s[v].to_string()},
                      {"M2", L.M2[v].to_string()}});
    }
    out["rows"] = std::move(rows);
  }
  return out;
}

json chi_report(const GraphId& id, const Graph& g, std::uint64_t budget) {
  const ClassResult r = chromatic_index(g, budget);
  json out = {{"id", to_json(id)},
              {"n", g.order()},
              {"m", g.size()},
              {"delta", g.max_degree()},
              {"class", to_string(r.verdict)},
              {"budget_spent", r.budget_spent}};
  out["chromatic_index"] = r.chromatic_index ? json(*r.chromatic_index) : json(nullptr);
  if (r.witness) out["witness"] = coloring_json(*r.witness);
  return out;
}

json mis_report(const GraphId& id, const Graph& g) {
  const IndependentSetResult r = max_independent_set(g);
  return {{"id", to_json(id)},
          {"n", g.order()},
          {"alpha", r.alpha},
          {"witness", r.witness},
          {"nodes_explored", r.nodes_explored},
          {"bounds", to_json(bound_report(g, r.alpha))}};
}

json lemma_audits(const Graph& g, const AuditSettings& s, std::uint64_t budget, bool detailed) {
  auto shared = std::make_shared<const Graph>(g);
  std::map<std::string, std::map<std::string, int>> counts;
  std::map<std::string, json> first_counterexample;
  json edges = json::array();
  int uncolorable = 0;

  auto record = [&](json& bucket, const AuditReport& r, int x, int y) {
    ++counts[r.lemma][to_string(r.status)];
    if (r.status == AuditStatus::Counterexample && !first_counterexample.count(r.lemma)) {
      first_counterexample[r.lemma] = {{"x", x}, {"y", y}, {"report", to_json(r)}};
    }
    if (detailed) bucket.push_back(to_json(r));
  };

  for (const Edge& e : g.edges()) {
    const DeltaColoringResult dc = delta_coloring_without(shared, e.u, e.v, budget);
    json entry = {{"x", e.u}, {"y", e.v}, {"method", dc.method}};
    if (!dc.coloring) {
      ++uncolorable;
      entry["audits"] = nullptr;
      if (detailed) edges.push_back(std::move(entry));
      continue;
    }
    const EdgeColoring& phi = *dc.coloring;
    json reports = json::array();
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      record(reports, audit_smalldegree(phi, x, y, s.epsilon, s.context), x, y);
      record(reports, audit_largedegree(phi, x, y, s.epsilon, s.lambda, s.context), x, y);
      record(reports, audit_degree3(phi, x, y, s.epsilon, s.context), x, y);
      record(reports, audit_p1(phi, x, y, s.epsilon, s.context), x, y);
      record(reports, audit_bbcolor2(phi, x, y, s.epsilon, s.context), x, y);
      const PaletteAnalysis a = analyze(phi, x, y, lemma_threshold(g, s.epsilon));
      for (int w : a.NxB) record(reports, audit_bbcolor(phi, x, y, w, s.epsilon, s.context), x, y);
    }
    if (detailed) {
      entry["coloring"] = coloring_json(phi);
      entry["audits"] = std::move(reports);
      edges.push_back(std::move(entry));
    }
  }

  json out = {{"counts", counts}, {"edges_without_coloring", uncolorable}};
  if (!first_counterexample.empty()) out["first_counterexample"] = first_counterexample;
  if (detailed) out["edges"] = std::move(edges);
  return out;
}

json graph_report(const GraphId& id, const Graph& g, const GraphReportOptions& o) {
  const DegreeProfile prof = degree_profile(g);
  json out = {{"id", to_json(id)},
              {"n", g.order()},
              {"m", g.size()},
              {"degree_profile", {{"min", prof.min_degree}, {"max", prof.max_degree}, {"sequence", prof.degree_sequence}}}};

  const ClassResult cls = chromatic_index(g, o.budget);
  out["class"] = {{"verdict", to_string(cls.verdict)}, {"budget_spent", cls.budget_spent}};
  out["class"]["chromatic_index"] = cls.chromatic_index ? json(*cls.chromatic_index) : json(nullptr);

  const CriticalityResult crit = is_delta_critical(g, o.budget);
  out["critical"] = {{"verdict", to_string(crit.verdict)}, {"reason", crit.reason}, {"budget_spent", crit.budget_spent}};
  if (crit.failing_edge) out["critical"]["failing_edge"] = {crit.failing_edge->u, crit.failing_edge->v};

  const IndependentSetResult mis = max_independent_set(g);
  out["alpha"] = {{"value", mis.alpha}, {"witness", mis.witness}};
  out["bounds"] = to_json(bound_report(g, mis.alpha));

  AuditContext ctx = o.audit.context;
  ctx.critical = crit.verdict;
  out["val"] = to_json(audit_val(g, ctx));

  if (g.size() == 0) {
    out["lemma_audits"] = {{"skipped", "no edges"}};
  } else if (crit.verdict == Tri::True || ctx.assume_hypotheses) {
    AuditSettings s = o.audit;
    s.context = ctx;
    out["lemma_audits"] = lemma_audits(g, s, o.budget, false);
  } else {
    out["lemma_audits"] = {{"skipped", "criticality " + to_string(crit.verdict)}};
  }

  if (g.order() == 0 || g.size() == 0) {
    out["ledger"] = {{"skipped", "empty graph"}};
  } else if (prof.min_degree < o.d) {
    out["ledger"] = {{"skipped", "minimum degree below d=" + std::to_string(o.d)}};
  } else {
    try {
      const Params p = make_params(o.d, BigInt(g.max_degree()), o.param_options);
      json digest = to_json(run_discharging(g, mis.witness, p), false);
      digest["X"] = "maximum independent set";
      out["ledger"] = std::move(digest);
    } catch (const DomainError& e) {
      out["ledger"] = {{"skipped", e.what()}};
    }
  }
  return out;
}

}  // namespace critlab
