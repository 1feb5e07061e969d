#include "critlab/audits.hpp"

#include <algorithm>

#include "critlab/errors.hpp"
#include "critlab/params.hpp"

namespace critlab {

using nlohmann::json;

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Verified: return "Verified";
    case AuditStatus::Counterexample: return "Counterexample";
    case AuditStatus::NotApplicable: break;
  }
  return "NotApplicable";
}

json to_json(const AuditReport& r) {
  json hyps = json::array();
  for (const Hypothesis& h : r.hypotheses) {
    hyps.push_back({{"name", h.name}, {"held", to_string(h.held)}, {"detail", h.detail}});
  }
  json out = {{"lemma", r.lemma}, {"status", to_string(r.status)}, {"hypotheses", hyps}, {"witness", r.witness}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

DegreeThreshold lemma_threshold(const Graph& g, const Surd& eps) {
  return DegreeThreshold((Surd(1) - eps) * Surd(g.max_degree()));
}

namespace {

Tri tri(bool b) { return b ? Tri::True : Tri::False; }

json colors_json(const ColorSet& s) { return json(s.items()); }

class Audit {
 public:
  Audit(std::string lemma, const AuditContext& ctx) : ctx_(ctx) {
    report_.lemma = std::move(lemma);
    require("G is Delta-critical", ctx.critical, "");
  }

  void require(std::string name, Tri held, std::string detail) {
    if (held != Tri::True) blocked_ = true;
    report_.hypotheses.push_back({std::move(name), held, std::move(detail)});
  }

  /// True when the conclusion should be scanned.
  bool open() {
    if (!blocked_) return true;
    if (ctx_.assume_hypotheses) {
      report_.note = "hypotheses assumed; result is descriptive";
      return true;
    }
    report_.status = AuditStatus::NotApplicable;
    for (const Hypothesis& h : report_.hypotheses) {
      if (h.held != Tri::True) {
        report_.note = "hypothesis not met: " + h.name;
        break;
      }
    }
    return false;
  }

  AuditReport verified(json witness = json::object(), std::string note = "") {
    report_.status = AuditStatus::Verified;
    report_.witness = std::move(witness);
    append_note(std::move(note));
    return report_;
  }

  AuditReport counterexample(json witness, std::string note = "") {
    report_.status = AuditStatus::Counterexample;
    report_.witness = std::move(witness);
    append_note(std::move(note));
    return report_;
  }

  const AuditReport& report() const { return report_; }

 private:
  void append_note(std::string note) {
    if (note.empty()) return;
    report_.note = report_.note.empty() ? note : report_.note + "; " + note;
  }

  const AuditContext& ctx_;
  AuditReport report_;
  bool blocked_ = false;
};

void gate_small_degree(Audit& audit, const Graph& g, int x, const Surd& eps) {
  const DegreeThreshold small(eps * Surd(g.max_degree()));
  audit.require("d(x) < eps*Delta", tri(small.low(g.degree(x))),
                "d(x)=" + std::to_string(g.degree(x)) + ", eps*Delta=" + small.to_string());
}

}  // namespace

AuditReport audit_val(const Graph& g, const AuditContext& ctx) {
  // The property is scanned whatever the criticality status; the log says
  // whether a violation would contradict the lemma or just the property.
  Audit audit("vizing-adjacency", ctx);
  const std::string note = ctx.critical == Tri::True ? "" : "G not known to be Delta-critical";
  const int delta = g.max_degree();
  for (const Edge& e : g.edges()) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const int need = delta - g.degree(x) + 1;
      int found = 0;
      for (int z : g.neighbors(y))
        if (z != x && g.degree(z) == delta) ++found;
      if (found < need) return audit.counterexample({{"x", x}, {"y", y}, {"required", need}, {"found", found}}, note);
    }
  }
  return audit.verified({{"edges_checked", g.size()}}, note);
}

AuditReport audit_smalldegree(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx) {
  const Graph& g = phi.graph();
  const DegreeThreshold q = lemma_threshold(g, eps);
  const PaletteAnalysis a = analyze(phi, x, y, q);
  Audit audit("smalldegree", ctx);
  gate_small_degree(audit, g, x, eps);
  if (!audit.open()) return audit.report();

  std::vector<ColorSet> pb;
  for (int z : a.NxM) {
    ColorSet s = phi_b(phi, z, q);
    ColorSet rest = s;
    rest.erase(phi.color(x, z));
    if (!rest.subset_of(a.B)) {
      return audit.counterexample({{"conclusion", "inclusion"},
                                   {"z", z},
                                   {"phi_b_minus_xz", colors_json(rest)},
                                   {"B", colors_json(a.B)}});
    }
    pb.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < a.NxM.size(); ++i) {
    for (std::size_t j = i + 1; j < a.NxM.size(); ++j) {
      const ColorSet both = pb[i] & pb[j];
      if (!both.empty()) {
        return audit.counterexample(
            {{"conclusion", "disjointness"}, {"z1", a.NxM[i]}, {"z2", a.NxM[j]}, {"common", colors_json(both)}});
      }
    }
  }
  return audit.verified({{"NxM", a.NxM}}, a.NxM.size() <= 1 ? "disjointness vacuous" : "");
}

AuditReport audit_largedegree(const EdgeColoring& phi, int x, int y, const Surd& eps, const Rational& lambda,
                              const AuditContext& ctx) {
  const Graph& g = phi.graph();
  const DegreeThreshold q = lemma_threshold(g, eps);
  const PaletteAnalysis a = analyze(phi, x, y, q);
  const LemmaConstants k = lemma_constants(eps, lambda);
  Audit audit("largedegree", ctx);
  audit.require("d(x) < q", tri(q.low(g.degree(x))),
                "d(x)=" + std::to_string(g.degree(x)) + ", q=" + q.to_string());
  audit.require("Delta >= D0", tri(k.d0_ceiling <= g.max_degree()),
                "Delta=" + std::to_string(g.max_degree()) + ", D0=" + k.D0.to_string() + " (ceil " +
                    to_string(k.d0_ceiling) + ")");
  if (!audit.open()) return audit.report();

  // |phi_b(z) - {phi(xz)}| < lambda*Delta, compared exactly.
  const Rational bound = lambda * g.max_degree();
  json violators = json::array();
  for (int z : a.NxM) {
    ColorSet rest = phi_b(phi, z, q);
    rest.erase(phi.color(x, z));
    if (Rational(static_cast<long>(rest.size())) >= bound) violators.push_back({{"z", z}, {"size", rest.size()}});
  }
  json w = {{"violations", violators.size()},
            {"allowed", to_string(k.N)},
            {"lambda_delta", to_string(bound)},
            {"violators", violators}};
  if (Rational(static_cast<long>(violators.size())) <= k.N) return audit.verified(std::move(w));
  return audit.counterexample(std::move(w));
}

AuditReport audit_degree3(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx) {
  const Graph& g = phi.graph();
  const DegreeThreshold q = lemma_threshold(g, eps);
  const PaletteAnalysis a = analyze(phi, x, y, q);
  Audit audit("degree3", ctx);
  gate_small_degree(audit, g, x, eps);
  if (!audit.open()) return audit.report();

  int premises = 0;
  for (int z : a.NxM) {
    const ColorSet pb = phi_b(phi, z, q);
    for (int beta : a.B) {
      if (!pb.contains(beta)) continue;
      ++premises;
      const int zp = phi.via(x, beta);
      for (int alpha : a.M) {
        const int u = phi.via(zp, alpha);
        if (u < 0 || q.low(g.degree(u))) {
          return audit.counterexample({{"z", z}, {"beta", beta}, {"alpha", alpha}, {"z_prime", zp}, {"u", u}},
                                      u < 0 ? "alpha missing at z'" : "d(u) < q");
        }
      }
    }
  }
  return audit.verified({{"premises", premises}}, premises == 0 ? "vacuous: no beta in B meets phi_b(z)" : "");
}

AuditReport audit_p1(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx) {
  const Graph& g = phi.graph();
  const DegreeThreshold q = lemma_threshold(g, eps);
  const PaletteAnalysis a = analyze(phi, x, y, q);
  Audit audit("p1", ctx);
  gate_small_degree(audit, g, x, eps);
  audit.require("|B| = 1", tri(a.B.size() == 1), "|B|=" + std::to_string(a.B.size()));
  int meet = -1;
  for (int z : a.NxM) {
    if (!(phi_b(phi, z, q) & a.B).empty()) {
      meet = z;
      break;
    }
  }
  audit.require("some z in N(x,M) has phi_b(z) meeting B", tri(meet >= 0), meet >= 0 ? "z=" + std::to_string(meet) : "");
  if (!audit.open()) return audit.report();

  for (int zp : a.NxB) {
    for (int u : g.neighbors(zp)) {
      if (u == x) continue;
      if (q.low(g.degree(u))) return audit.counterexample({{"z_prime", zp}, {"u", u}, {"degree_u", g.degree(u)}});
    }
  }
  return audit.verified({{"NxB", a.NxB}});
}

AuditReport audit_bbcolor(const EdgeColoring& phi, int x, int y, int w, const Surd& eps, const AuditContext& ctx) {
  const Graph& g = phi.graph();
  const DegreeThreshold q = lemma_threshold(g, eps);
  const PaletteAnalysis a = analyze(phi, x, y, q);
  if (!std::binary_search(a.NxB.begin(), a.NxB.end(), w)) {
    throw DomainError("w=" + std::to_string(w) + " is not in N(x, B)");
  }
  const int beta = phi.color(x, w);
  Audit audit("bbcolor", ctx);
  gate_small_degree(audit, g, x, eps);
  int z0 = -1;
  for (int z : a.NxM) {
    if (phi_b(phi, z, q).contains(beta)) {
      z0 = z;
      break;
    }
  }
  audit.require("some z in N(x,M) has phi(xw) in phi_b(z)", tri(z0 >= 0), z0 >= 0 ? "z=" + std::to_string(z0) : "");
  if (!audit.open()) return audit.report();

  const ColorSet bw = b_w(phi, a, w);
  for (int bp : bw) {
    const int zp = phi.via(x, bp);
    const int u = phi.via(zp, beta);
    if (u < 0 || q.low(g.degree(u))) {
      return audit.counterexample({{"beta", beta}, {"beta_prime", bp}, {"z_prime", zp}, {"u", u}, {"B_w", colors_json(bw)}},
                                  u < 0 ? "beta missing at z'" : "d(u) < q");
    }
  }
  return audit.verified({{"beta", beta}, {"B_w", colors_json(bw)}}, bw.empty() ? "vacuous: B_w is empty" : "");
}

AuditReport audit_bbcolor2(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx) {
  const Graph& g = phi.graph();
  const DegreeThreshold q = lemma_threshold(g, eps);
  const PaletteAnalysis a = analyze(phi, x, y, q);
  Audit audit("bbcolor2", ctx);
  gate_small_degree(audit, g, x, eps);
  ColorSet covered;
  for (int z : a.NxM) covered = covered | phi_b(phi, z, q);
  audit.require("|B| = 2", tri(a.B.size() == 2), "|B|=" + std::to_string(a.B.size()));
  audit.require("phi_b over N(x,M) covers B", tri(a.B.subset_of(covered)), "");
  if (!audit.open()) return audit.report();

  json failures = json::array();
  for (int zp : a.NxB) {
    int low = -1;
    for (int u : g.neighbors(zp)) {
      if (u != x && q.low(g.degree(u))) {
        low = u;
        break;
      }
    }
    if (low < 0) return audit.verified({{"z_prime", zp}});
    failures.push_back({{"z_prime", zp}, {"low_neighbor", low}});
  }
  return audit.counterexample({{"candidates", failures}}, "every z' in N(x,B) has a low-degree neighbor besides x");
}

}  // namespace critlab
