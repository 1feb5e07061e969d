#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "critlab/edge_coloring.hpp"
#include "critlab/numeric.hpp"
#include "critlab/palette.hpp"
#include "critlab/surd.hpp"

namespace critlab {

enum class AuditStatus { Verified, Counterexample, NotApplicable };
std::string to_string(AuditStatus s);

struct Hypothesis {
  std::string name;
  Tri held = Tri::Unknown;
  std::string detail;
};

/// Outcome of checking one lemma on one concrete instance. A Counterexample
/// always carries a witness that an independent scan can re-check;
/// NotApplicable names the hypothesis that failed.
struct AuditReport {
  std::string lemma;
  AuditStatus status = AuditStatus::NotApplicable;
  std::vector<Hypothesis> hypotheses;
  nlohmann::json witness = nlohmann::json::object();
  std::string note;
};

nlohmann::json to_json(const AuditReport& r);

struct AuditContext {
  /// Whether G is known to be Delta-critical. The lemmas assume it.
  Tri critical = Tri::Unknown;
  /// Skip hypothesis gates and report what the scan finds.
  bool assume_hypotheses = false;
};

/// Every edge in both orientations: y has at least Delta - d(x) + 1
/// neighbors of degree Delta other than x.
AuditReport audit_val(const Graph& g, const AuditContext& ctx = {});

/// Inclusions and pairwise disjointness of phi_b over N(x, M), for
/// q = (1-eps)*Delta and d(x) < eps*Delta.
AuditReport audit_smalldegree(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx = {});

/// Counts z in N(x, M) with |phi_b(z) - {phi(xz)}| >= lambda*Delta and
/// compares with N. Gated on d(x) < q and Delta >= D0.
AuditReport audit_largedegree(const EdgeColoring& phi, int x, int y, const Surd& eps, const Rational& lambda,
                              const AuditContext& ctx = {});

AuditReport audit_degree3(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx = {});
AuditReport audit_p1(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx = {});
/// DomainError when w is not in N(x, B).
AuditReport audit_bbcolor(const EdgeColoring& phi, int x, int y, int w, const Surd& eps, const AuditContext& ctx = {});
AuditReport audit_bbcolor2(const EdgeColoring& phi, int x, int y, const Surd& eps, const AuditContext& ctx = {});

/// (1 - eps) * Delta(G).
DegreeThreshold lemma_threshold(const Graph& g, const Surd& eps);

}  // namespace critlab
