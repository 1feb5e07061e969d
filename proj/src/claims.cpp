#include "critlab/claims.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "critlab/discharging.hpp"
#include "critlab/errors.hpp"
#include "critlab/parallel.hpp"

namespace critlab {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Certified: return "Certified";
    case ClaimStatus::Refuted: return "Refuted";
    case ClaimStatus::Indeterminate: return "Indeterminate";
    case ClaimStatus::Skipped: return "Skipped";
  }
  return "?";
}

namespace {

bool holds(int sign, Relation rel) { return rel == Relation::Positive ? sign > 0 : sign >= 0; }

void append(std::string& note, const std::string& text) {
  if (text.empty()) return;
  if (!note.empty()) note += "; ";
  note += text;
}

/// Worst status wins: Refuted, then Indeterminate, then Skipped, then Certified.
ClaimStatus combine(ClaimStatus a, ClaimStatus b) {
  auto rank = [](ClaimStatus s) {
    switch (s) {
      case ClaimStatus::Refuted: return 3;
      case ClaimStatus::Indeterminate: return 2;
      case ClaimStatus::Skipped: return 1;
      case ClaimStatus::Certified: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

template <class Eval>
ClaimVerdict escalate(const std::string& id, Eval eval, mpfr_prec_t cap) {
  ClaimVerdict v;
  v.claim = id;
  if (cap < 2) throw DomainError("precision cap must be at least 2 bits");
  mpfr_prec_t bits = std::min<mpfr_prec_t>(64, cap);
  for (;;) {
    PrecisionScope scope(bits);
    v.interval = eval();
    v.precision_bits = bits;
    if (v.interval.positive()) return v.status = ClaimStatus::Certified, v;
    if (v.interval.negative()) return v.status = ClaimStatus::Refuted, v;
    if (bits >= cap) break;
    bits = std::min(2 * bits, cap);
  }
  v.status = ClaimStatus::Indeterminate;
  v.note = "sign not decided at the " + std::to_string(cap) + "-bit cap";
  return v;
}

ClaimVerdict exact_rational(const std::string& id, const Rational& r, Relation rel) {
  ClaimVerdict v;
  v.claim = id;
  v.interval = Interval(r);
  v.precision_bits = 0;
  const int s = sgn(r);
  v.status = holds(s, rel) ? ClaimStatus::Certified : ClaimStatus::Refuted;
  if (s == 0) v.note = "exact equality";
  return v;
}

}  // namespace

ClaimVerdict certify(const std::string& id, const Surd& value, Relation rel, mpfr_prec_t cap) {
  if (value.is_rational()) return exact_rational(id, value.rational(), rel);
  // An irrational element of Q(omega) is nonzero, so the strict and weak
  // relations coincide and a sign-definite enclosure decides both.
  return escalate(id, [&] { return value.enclose(); }, cap);
}

ClaimVerdict certify(const std::string& id, const std::function<Interval()>& eval, Relation rel, mpfr_prec_t cap) {
  ClaimVerdict v = escalate(id, eval, cap);
  (void)rel;  // an enclosure can only certify strict signs
  return v;
}

ClaimVerdict certify_for_all_delta(const std::string& id, const AffineInDelta& diff, const BigInt& delta, Relation rel) {
  ClaimVerdict v = exact_rational(id, diff.at(Rational(delta)), rel);
  v.note.clear();
  const bool now = v.status == ClaimStatus::Certified;
  if (now && diff.slope() < 0) {
    v.status = ClaimStatus::Refuted;
    const Rational root = -diff.constant() / diff.slope();
    append(v.note, "holds at Delta = " + to_string(delta) + " but fails for Delta > " + to_string(root));
  }
  append(v.note, "difference " + diff.to_string());
  return v;
}

// ---- Claim 1 -------------------------------------------------------------------

Claim1Grid claim1_grid(const Params& params, long points) {
  if (points < 0) throw DomainError("grid size must be nonnegative");
  Claim1Grid grid;
  grid.q = params.q;
  grid.delta = params.delta;
  const long double qd = params.q.approx();
  const long double dd = params.delta.get_d();
  const long double ratio = dd / qd;
  const Surd delta(params.delta);
  std::optional<Rational> last;
  for (long i = 1; i <= points; ++i) {
    const long double t = static_cast<long double>(i) / static_cast<long double>(points + 1);
    const double kd = static_cast<double>(qd * std::pow(ratio, t));
    if (!std::isfinite(kd)) continue;
    Rational k(kd);
    if (last && k <= *last) continue;
    const Surd sk(k);
    if (sk <= params.q || sk >= delta) continue;
    grid.interior.push_back(k);
    last = k;
  }
  return grid;
}

Claim1Result verify_claim1(const Params& params, const GridSpec& spec) {
  Claim1Result out;
  out.grid.claim = "claim1.grid";
  out.monotone.claim = "claim1.monotone";
  if (params.q <= Surd(1)) {
    for (ClaimVerdict* v : {&out.grid, &out.monotone}) {
      v->status = ClaimStatus::Skipped;
      v->note = "q <= 1, g2 undefined at q";
    }
    return out;
  }
  const Claim1Grid grid = claim1_grid(params, spec.points);
  const Symbols<Surd> s = exact_symbols(params);
  const std::size_t n = grid.interior.size() + 2;

  auto point = [&](std::size_t i) -> Surd {
    if (i == 0) return grid.q;
    if (i + 1 == n) return Surd(grid.delta);
    return Surd(grid.interior[i - 1]);
  };
  // g2(k) - g1(k); at k = q the closed form for g1(q) is used.
  auto g = [&](std::size_t i) -> Surd {
    const Surd k = point(i);
    return g2_of(s, k) - (i == 0 ? s.g1q : g1_of(s, k));
  };
  const std::vector<Surd> values = ordered_map(n, g, spec.jobs, spec.serial);

  auto summarize = [&](ClaimVerdict& agg, const std::vector<ClaimVerdict>& parts, std::size_t offset) {
    agg.status = ClaimStatus::Certified;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      agg.status = combine(agg.status, parts[i].status);
      agg.precision_bits = std::max(agg.precision_bits, parts[i].precision_bits);
      if (parts[i].interval.lo_rational() < parts[worst].interval.lo_rational()) worst = i;
    }
    if (parts.empty()) return;
    agg.interval = parts[worst].interval;
    std::size_t refuted = 0, open = 0;
    for (const ClaimVerdict& p : parts) {
      refuted += p.status == ClaimStatus::Refuted;
      open += p.status == ClaimStatus::Indeterminate;
    }
    std::ostringstream note;
    note << parts.size() << " checks; smallest at grid index " << worst + offset;
    if (refuted) note << "; " << refuted << " refuted";
    if (open) note << "; " << open << " indeterminate";
    agg.note = note.str();
  };

  const mpfr_prec_t cap = spec.precision_cap;
  const auto point_verdicts = ordered_map(
      n, [&](std::size_t i) { return certify("claim1.grid", values[i], Relation::NonNegative, cap); }, spec.jobs,
      spec.serial);
  summarize(out.grid, point_verdicts, 0);
  append(out.grid.note, "g2(k) - g1(k) on q, " + std::to_string(grid.interior.size()) + " interior points, Delta");
  if (g1_of(s, grid.q) != s.g1q) append(out.grid.note, "g1(q) differs from its closed form");

  const auto step_verdicts = ordered_map(
      n - 1,
      [&](std::size_t i) { return certify("claim1.monotone", values[i + 1] - values[i], Relation::NonNegative, cap); },
      spec.jobs, spec.serial);
  summarize(out.monotone, step_verdicts, 0);
  append(out.monotone.note, "finite differences of g2 - g1 along the grid");
  return out;
}

// ---- Claim 8 table ---------------------------------------------------------------

std::vector<std::vector<long>> integer_profiles(long length, long p) {
  std::vector<std::vector<long>> out;
  if (length < 0 || p < 0) return out;
  std::vector<long> cur;
  // Nonincreasing sequences, so each multiset appears once.
  auto rec = [&](auto&& self, long left, long cap) -> void {
    if (static_cast<long>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (long b = std::min(left, cap); b >= 0; --b) {
      cur.push_back(b);
      self(self, left - b, b);
      cur.pop_back();
    }
  };
  rec(rec, p, p);
  return out;
}

namespace {

using Affine = AffineInDelta;

std::vector<Rational> as_rationals(const std::vector<long>& b) {
  std::vector<Rational> out;
  for (long v : b) out.emplace_back(v);
  return out;
}

bool is_special(int d, long k, long p) {
  if (d != 4) return false;
  return (k == 4 && p == 1) || (k == 5 && p == 2) || (k == 6 && p == 3) || (k == 7 && p == 3);
}

Affine target_of(const Symbols<Affine>& s, long k) { return s.d2 * (s.delta - Affine(k)); }

/// Minimum of the profile sums at `delta`, and whether every profile meets
/// `floor` for all larger Delta.
struct ProfileScan {
  std::vector<long> argmin;
  Affine minimum;
  bool all_hold = true;
  std::vector<long> first_failure;
};

ProfileScan scan_profiles(const Symbols<Affine>& s, long k, long p, const Affine& floor, const BigInt& delta,
                          Relation rel) {
  ProfileScan scan;
  bool first = true;
  const Rational D(delta);
  for (const auto& b : integer_profiles(k - p - 1, p)) {
    const Affine m = m_x2_of(s, k, p, as_rationals(b));
    if (first || m.at(D) < scan.minimum.at(D)) {
      scan.minimum = m;
      scan.argmin = b;
      first = false;
    }
    const Affine diff = m - floor;
    const Rational now = diff.at(D);
    const bool ok = holds(sgn(now), rel) && diff.slope() >= 0;
    if (!ok && scan.all_hold) {
      scan.all_hold = false;
      scan.first_failure = b;
    }
  }
  return scan;
}

std::string profile_string(const std::vector<long>& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out + ")";
}

}  // namespace

std::vector<Claim8Row> claim8_table(const Params& params) {
  if (params.d != 3 && params.d != 4) throw DomainError("the small-degree table needs d in {3,4}");
  const Symbols<Affine> s = symbolic_symbols(params);
  std::vector<Claim8Row> rows;
  for (long k = params.d; k < 3 * params.d - 3; ++k) {
    for (long p = 0; p <= k - 2; ++p) {
      Claim8Row row;
      row.k = k;
      row.p = p;
      row.kind = is_special(params.d, k, p) ? "special" : p == k - 2 ? "large" : "generic";
      row.target = target_of(s, k);
      const ProfileScan scan = scan_profiles(s, k, p, row.target, params.delta, Relation::NonNegative);
      row.profile = scan.argmin;
      row.minimum = scan.minimum;
      row.all_profiles_hold = scan.all_hold;
      row.relaxed_floor = m_x2_floor_of(s, k, p);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

/// Folds per-k affine checks into one verdict; the reported interval is the
/// smallest margin at the given Delta.
struct Aggregate {
  ClaimVerdict v;
  bool empty = true;

  explicit Aggregate(std::string id) {
    v.claim = std::move(id);
    v.status = ClaimStatus::Certified;
  }
  void add(const ClaimVerdict& part, const std::string& label) {
    v.status = combine(v.status, part.status);
    if (empty || part.interval.lo_rational() < v.interval.lo_rational()) v.interval = part.interval;
    empty = false;
    if (part.status != ClaimStatus::Certified) append(v.note, label + ": " + to_string(part.status) + " (" + part.note + ")");
  }
  void flag(const std::string& text) { append(v.note, text); }
};

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::vector<ClaimVerdict> claim8_verdicts(const Params& params) {
  std::vector<ClaimVerdict> out;
  const Symbols<Affine> s = symbolic_symbols(params);
  const int d = params.d;
  const BigInt& delta = params.delta;
  const long k_lo = d;
  const long k_hi = 3 * d - 4;
  const Affine wD = s.omega * s.delta;
  const Affine& g = s.g1q;

  // Integer-profile minima over the rows the generic argument covers.
  {
    Aggregate agg("claim8.integer_profiles");
    std::string relaxed_short;
    for (const Claim8Row& row : claim8_table(params)) {
      const std::string label = "(" + std::to_string(row.k) + "," + std::to_string(row.p) + ")";
      const Affine floor_diff = row.relaxed_floor - row.target;
      if (floor_diff.at(Rational(delta)) < 0 || floor_diff.slope() < 0) relaxed_short += (relaxed_short.empty() ? "" : " ") + label;
      if (row.kind == "special") continue;
      ClaimVerdict part = certify_for_all_delta("", row.minimum - row.target, delta, Relation::NonNegative);
      if (!row.all_profiles_hold) part.status = ClaimStatus::Refuted;
      agg.add(part, label + " min at b=" + profile_string(row.profile));
    }
    agg.flag("M(k,p) >= (d+2)(Delta-k) over every integer profile with sum b <= p, special rows excluded");
    if (!relaxed_short.empty()) agg.flag("relaxed real-profile floor alone falls short at " + relaxed_short);
    out.push_back(agg.v);
  }

  // p = k-2 via Claim 5 directly.
  {
    Aggregate agg("claim8.large");
    for (long k : range(k_lo, k_hi)) {
      const long p = k - 2;
      const Affine bound = Affine(p + 2) * (wD - Affine(p) * g);
      if (!(bound == Affine(k) * h_of(s, Affine(k), Affine(p)))) agg.flag("k=" + std::to_string(k) + ": k*h(k,k-2) differs");
      const Affine expanded = Affine(k + 2) * s.delta + Affine(k - 2) * (s.delta - Affine(k) * g);
      if (!(bound == expanded)) agg.flag("k=" + std::to_string(k) + ": expanded form differs (" + bound.to_string() + " vs " + expanded.to_string() + ")");
      agg.add(certify_for_all_delta("", bound - target_of(s, k), delta, Relation::Positive), "k=" + std::to_string(k));
    }
    out.push_back(agg.v);
  }

  // p = 0.
  {
    Aggregate agg("claim8.smallp");
    for (long k : range(k_lo, k_hi)) {
      const Affine display = Affine(k - 1) * (wD - Affine(k - 2) * g) + wD / Affine(k - 1);
      const Affine exact = m_x2_of(s, k, 0, std::vector<Rational>(k - 1, Rational(0)));
      if (!(display == exact)) agg.flag("k=" + std::to_string(k) + ": display " + display.to_string() + " vs substitution " + exact.to_string());
      agg.add(certify_for_all_delta("", display - target_of(s, k), delta, Relation::Positive), "k=" + std::to_string(k));
    }
    out.push_back(agg.v);
  }

  // Lower bounds for p = 1, 2, k-3: each display must sit below every integer
  // profile and above the target.
  auto lower_family = [&](const std::string& id, const std::vector<long>& ks, auto p_of, auto display_of) {
    Aggregate agg(id);
    for (long k : ks) {
      const long p = p_of(k);
      const Affine display = display_of(k);
      const ProfileScan scan = scan_profiles(s, k, p, display, delta, Relation::NonNegative);
      if (!scan.all_hold) {
        ClaimVerdict bad;
        bad.status = ClaimStatus::Refuted;
        bad.interval = Interval(Rational(0));
        bad.note = "profile " + profile_string(scan.first_failure) + " falls below the display";
        agg.add(bad, "k=" + std::to_string(k));
      }
      agg.add(certify_for_all_delta("", display - target_of(s, k), delta, Relation::Positive), "k=" + std::to_string(k));
    }
    out.push_back(agg.v);
  };
  const std::vector<long> ks_p1 = d == 3 ? std::vector<long>{4, 5} : range(5, 8);
  const std::vector<long> ks_p2 = d == 3 ? std::vector<long>{5} : range(6, 8);
  lower_family("claim8.smallp2", ks_p1, [](long) { return 1L; }, [&](long k) {
    return (Affine(k - 3) + Affine(Rational(1, 2))) * (wD - Affine(k - 1) * g) + Affine(Rational(2) / (k - 2)) * (wD - g);
  });
  lower_family("claim8.smallp3", ks_p2, [](long) { return 2L; }, [&](long k) {
    return Affine(k - 4) * (wD - Affine(k - 1) * g) + Affine(Rational(3) / (k - 3)) * (wD - Affine(2) * g);
  });
  if (d == 4) {
    lower_family("claim8.smallp4", {7, 8}, [](long k) { return k - 3; }, [&](long k) {
      return Affine(Rational(4) / (k - 1)) * (wD - Affine(k - 1) * g) +
             Affine(Rational(k - 2) / 2) * (wD - Affine(k - 3) * g);
    });

    // The two rows left over for d = 4.
    const Affine stated83 = Affine(-Rational(99, 2)) + Affine(7) * s.delta;
    const Affine stated84 = Affine(Rational(-46)) + Affine(Rational(20, 3)) * s.delta;
    for (const auto& [k, p, stated, id] : {std::tuple{8L, 3L, stated83, std::string("claim8.m8_3")},
                                          std::tuple{8L, 4L, stated84, std::string("claim8.m8_4")}}) {
      const ProfileScan scan = scan_profiles(s, k, p, stated, delta, Relation::NonNegative);
      ClaimVerdict v = certify_for_all_delta(id, scan.minimum - stated, delta, Relation::NonNegative);
      if (!scan.all_hold) v.status = ClaimStatus::Refuted;
      append(v.note, "integer-profile minimum " + scan.minimum.to_string() + " at b=" + profile_string(scan.argmin) +
                         " against stated " + stated.to_string());
      out.push_back(v);
      ClaimVerdict t = certify_for_all_delta(id + ".target", scan.minimum - target_of(s, k), delta, Relation::Positive);
      append(t.note, "integer-profile minimum against 6(Delta-8)");
      out.push_back(t);
    }

    // Special rows, each from its own structural argument.
    struct Special {
      long k, p;
      std::vector<long> profile;
      Affine display;
      Affine stated;
    };
    const std::vector<Special> specials = {
        {4, 1, {0, 0}, Affine(2) * (wD - Affine(2) * g) + Affine(2) * ((wD - g) / Affine(2)), Affine(-18) + Affine(6) * s.delta},
        {5, 2, {1, 0}, (wD - Affine(3) * g) + Affine(4) * ((wD - Affine(2) * g) / Affine(2)), Affine(-21) + Affine(6) * s.delta},
        {6, 3, {1, 1}, (wD - Affine(5) * g) + Affine(2) * g + Affine(2) * (wD - Affine(3) * g), Affine(-27) + Affine(6) * s.delta},
        {7, 3, {1, 1, 0}, Affine(2) * (wD - Affine(6) * g) + Affine(3) * g + Affine(Rational(4, 3)) * (wD - Affine(3) * g),
         Affine(-39) + Affine(Rational(20, 3)) * s.delta},
    };
    for (const Special& sp : specials) {
      const std::string id = "claim8.special." + std::to_string(sp.k) + "_" + std::to_string(sp.p);
      const Affine computed = m_x2_of(s, sp.k, sp.p, as_rationals(sp.profile));
      const Affine target = target_of(s, sp.k);
      ClaimVerdict v = certify_for_all_delta(id, computed - target, delta, Relation::Positive);
      std::string note = "computed " + computed.to_string() + " at b=" + profile_string(sp.profile);
      if (!(computed == sp.display)) note += "; display evaluates to " + sp.display.to_string();
      if (computed == sp.stated) {
        note += "; matches stated value";
      } else {
        note += "; FLAG: stated value " + sp.stated.to_string() + " differs";
        const Rational slack_stated = (sp.stated - target).at(Rational(delta));
        note += std::string("; stated value ") + (slack_stated > 0 ? "also exceeds" : "does not exceed") + " the target";
      }
      const Affine printed = Affine(6) * (s.delta - Affine(sp.k == 7 ? 7 : 6));
      note += "; target " + target.to_string() + ", printed comparator " + printed.to_string();
      append(v.note, note);
      out.push_back(v);
      ClaimVerdict pv = certify_for_all_delta(id + ".printed", computed - printed, delta, Relation::Positive);
      append(pv.note, "computed " + computed.to_string() + " against " + printed.to_string());
      out.push_back(pv);
    }
  }
  return out;
}

}  // namespace

// ---- assembly ----------------------------------------------------------------

ClaimVerdict d0_bound_check(int d, mpfr_prec_t cap) {
  const Params p = make_params(d, BigInt(1));
  ClaimVerdict v = certify("d0.bound", Surd(pow(BigInt(d + 2), static_cast<unsigned>(5 * d + 10))) - p.D0,
                           Relation::NonNegative, cap);
  append(v.note, "D0 = " + p.d0_term + " ~ " + std::to_string(p.D0.approx()) + ", c0 = " + to_string(p.c0));
  return v;
}

bool any_refuted(const std::vector<ClaimVerdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const ClaimVerdict& v) { return v.status == ClaimStatus::Refuted; });
}

std::vector<ClaimVerdict> verify_claims(const Params& params, const GridSpec& spec) {
  const mpfr_prec_t cap = spec.precision_cap;
  const int d = params.d;
  const bool at_scale = Surd(params.delta) >= params.D0;
  const Symbols<Surd> s = exact_symbols(params);

  std::vector<ClaimVerdict> out;
  const Claim1Result c1 = verify_claim1(params, spec);
  out.push_back(c1.grid);
  out.push_back(c1.monotone);

  std::vector<std::function<std::vector<ClaimVerdict>()>> tasks;
  auto one = [&](auto f) { tasks.push_back([f] { return std::vector<ClaimVerdict>{f()}; }); };

  one([&] {
    ClaimVerdict v = certify("claim1.endpoint_q", g2_of(s, params.q) - s.g1q, Relation::Positive, cap);
    append(v.note, "g2(q) - g1(q) with g1(q) = " + s.g1q.to_string());
    return v;
  });
  one([&] {
    // h(k,0) = g2(k) for k = 2..64, symbolically when omega is rational.
    ClaimVerdict v;
    v.claim = "claim1.h_link";
    v.status = ClaimStatus::Certified;
    v.interval = Interval(Rational(0));
    const bool symbolic = params.omega.is_rational() && params.g1_at_q().is_rational();
    for (long k = 2; k <= 64; ++k) {
      bool same;
      if (symbolic) {
        const Symbols<Affine> a = symbolic_symbols(params);
        same = h_of(a, Affine(k), Affine(0)) == g2_of(a, Affine(k));
      } else {
        same = h_of(s, Surd(k), Surd(0)) == g2_of(s, Surd(k));
      }
      if (!same) {
        v.status = ClaimStatus::Refuted;
        append(v.note, "differs at k=" + std::to_string(k));
      }
    }
    append(v.note, symbolic ? "identity in Delta for k = 2..64" : "exact at the given Delta for k = 2..64");
    return v;
  });

  one([&] {
    if (!at_scale) {
      ClaimVerdict v;
      v.claim = "claim6.f_eps_delta";
      v.status = ClaimStatus::Skipped;
      v.note = "needs Delta >= D0 ~ " + std::to_string(params.D0.approx());
      return v;
    }
    ClaimVerdict v = certify("claim6.f_eps_delta", [&] { return f_claim6_at_eps_delta(params); }, Relation::Positive, cap);
    append(v.note, "f(eps*Delta)");
    return v;
  });
  one([&] {
    const Surd floor = Surd(Rational(3, 2)) * Surd(d + 2) / params.omega - Surd(3);
    ClaimVerdict v = certify("claim6.stated_floor", floor, Relation::Positive, cap);
    append(v.note, "1.5(d+2)/omega - 3");
    return v;
  });

  const long k0 = (d == 3 || d == 4) ? 3 * d - 3 : d;
  if (k0 >= 2) {
    one([&, k0] {
      ClaimVerdict v = certify("claim7.f1", [&] { return f1(Rational(k0), params); }, Relation::Positive, cap);
      append(v.note, "f1(" + std::to_string(k0) + ")");
      return v;
    });
  }
  if (default_supports(d)) {
    tasks.push_back([&, k0] {
      std::vector<ClaimVerdict> vs;
      if (d == 3 || d == 4) {
        const Rational c = d == 3 ? Rational(3649, 1000) : ratio(408, 100);
        const Rational kk(k0);
        ClaimVerdict root = certify(
            "claim7.stated_floor.root",
            [&] { return Interval(3L) * cbrt(Interval(kk * kk / (4 * (kk - 1)))) - Interval(c); }, Relation::Positive, cap);
        append(root.note, "3*cbrt(k0^2/(4(k0-1))) - " + to_string(c));
        vs.push_back(root);
        ClaimVerdict rest = certify("claim7.stated_floor.constant", Surd(c) - Surd(1) - Surd(d + 2) / params.omega,
                                    Relation::Positive, cap);
        append(rest.note, to_string(c) + " - 1 - (d+2)/omega");
        vs.push_back(rest);
      } else {
        const Rational c(188, 100);
        ClaimVerdict root = certify(
            "claim7.stated_floor.root", [&] { return Interval(3L) * cbrt(Interval(Rational(1, 4))) - Interval(c); },
            Relation::Positive, cap);
        append(root.note, "3*cbrt(1/4) - 1.88");
        vs.push_back(root);
        ClaimVerdict rest = certify("claim7.stated_floor.constant", Surd(c) * Surd(d) - Surd(d + 2) - params.omega,
                                    Relation::Positive, cap);
        append(rest.note, "1.88d - (d+2+omega)");
        vs.push_back(rest);
      }
      return vs;
    });
  }

  if (d == 3 || d == 4) {
    tasks.push_back([&] {
      if (!params.omega.is_rational() || !params.g1_at_q().is_rational()) {
        ClaimVerdict v;
        v.claim = "claim8";
        v.status = ClaimStatus::Skipped;
        v.note = "symbolic checks need a rational omega";
        return std::vector<ClaimVerdict>{v};
      }
      return claim8_verdicts(params);
    });
  }

  if (d >= 19 && default_supports(d) && !params.outside_default_range) {
    one([&] {
      ClaimVerdict v = certify("theorem.below_4_7", Surd(Rational(4, 7)) - theorem_coefficient(d), Relation::Positive, cap);
      append(v.note, "4/7 - (d+2+omega)/(2d+4+omega), coefficient ~ " + std::to_string(theorem_coefficient(d).approx()));
      return v;
    });
  }
  one([&] {
    ClaimVerdict v = certify("d0.bound", Surd(pow(BigInt(d + 2), static_cast<unsigned>(5 * d + 10))) - params.D0,
                             Relation::NonNegative, cap);
    append(v.note, "(d+2)^(5d+10) - D0 with D0 = " + params.d0_term + " ~ " + std::to_string(params.D0.approx()));
    return v;
  });

  const auto groups = ordered_map(tasks.size(), [&](std::size_t i) { return tasks[i](); }, spec.jobs, spec.serial);
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  if (params.outside_default_range) {
    for (ClaimVerdict& v : out) append(v.note, "outside paper's parameter range");
  }
  return out;
}

}  // namespace critlab
