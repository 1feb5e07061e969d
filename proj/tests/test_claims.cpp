#include "doctest.h"

#include <algorithm>

#include "critlab/claims.hpp"
#include "critlab/discharging.hpp"
#include "critlab/errors.hpp"

using namespace critlab;

namespace {

const ClaimVerdict& find(const std::vector<ClaimVerdict>& vs, const std::string& id) {
  auto it = std::find_if(vs.begin(), vs.end(), [&](const ClaimVerdict& v) { return v.claim == id; });
  REQUIRE_MESSAGE(it != vs.end(), id);
  return *it;
}

AffineInDelta m_symbolic(const Params& p, long k, long pp, std::vector<Rational> b) {
  return m_x2_of(symbolic_symbols(p), k, pp, b);
}

// Reference values: 40-digit mpmath evaluations.
const Rational kF1d3k6 = parse_rational("0.149321197344040");
const Rational kF1d4k9 = parse_rational("0.088521333872314");
const Rational kF1d19k19 = parse_rational("1.131752250554766");
const Rational kCoeff19 = parse_rational("0.571369006216743");
const Rational kUlp = parse_rational("0.000000000000001");

}  // namespace

TEST_CASE("symbolic charge minima for d = 4") {
  const Params p = make_params(4, BigInt(1000000));
  CHECK(m_symbolic(p, 4, 1, {0, 0}).to_string() == "6*D - 15");
  CHECK(m_symbolic(p, 5, 2, {1, 0}).to_string() == "6*D - 21");
  CHECK(m_symbolic(p, 6, 3, {1, 1}).to_string() == "6*D - 27");
  CHECK(m_symbolic(p, 7, 3, {1, 1, 0}).to_string() == "20/3*D - 39");
  CHECK(m_symbolic(p, 8, 4, {2, 1, 1}).to_string() == "6*D - 39");
  CHECK(m_symbolic(p, 8, 4, {2, 2, 0}).to_string() == "20/3*D - 46");
}

TEST_CASE("integer profiles") {
  const auto ps = integer_profiles(3, 2);
  // (0,0,0) (1,0,0) (1,1,0) (2,0,0)
  CHECK(ps.size() == 4);
  for (const auto& b : ps) {
    CHECK(b.size() == 3);
    CHECK(std::is_sorted(b.rbegin(), b.rend()));
  }
  CHECK(integer_profiles(2, 0).size() == 1);
}

TEST_CASE("claim 8 table for d = 4") {
  const auto rows = claim8_table(make_params(4, BigInt(1000000)));
  auto row = [&](long k, long p) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Claim8Row& r) { return r.k == k && r.p == p; });
    REQUIRE(it != rows.end());
    return *it;
  };
  // k in [4, 8], p in [0, k-2].
  CHECK(rows.size() == 3 + 4 + 5 + 6 + 7);
  CHECK(row(8, 3).minimum.to_string() == "7*D - 99/2");
  CHECK(row(8, 4).minimum.to_string() == "6*D - 39");
  CHECK(row(8, 4).profile == std::vector<long>{2, 1, 1});
  CHECK(row(4, 1).kind == "special");
  CHECK(row(4, 0).target.to_string() == "6*D - 24");
  CHECK_THROWS_AS(claim8_table(make_params(19, BigInt(1000000))), DomainError);
}

TEST_CASE("f1 enclosures") {
  PrecisionScope scope(256);
  const Interval a = f1(Rational(6), make_params(3, BigInt(1000000)));
  CHECK(a.lo_rational() > kF1d3k6);
  CHECK(a.hi_rational() < kF1d3k6 + kUlp);
  const Interval b = f1(Rational(9), make_params(4, BigInt(1000000)));
  CHECK(b.lo_rational() > kF1d4k9);
  CHECK(b.hi_rational() < kF1d4k9 + kUlp);
  const Interval c = f1(Rational(19), make_params(19, BigInt(1000000)));
  CHECK(c.lo_rational() > kF1d19k19);
  CHECK(c.hi_rational() < kF1d19k19 + kUlp);
  const Interval t = theorem_coefficient(19).enclose();
  CHECK(t.lo_rational() > kCoeff19);
  CHECK(t.hi_rational() < kCoeff19 + kUlp);
  CHECK(theorem_bound(3, 12) == Surd(7));
}

TEST_CASE("certification primitives") {
  CHECK(certify("x", Surd(0), Relation::NonNegative, 256).status == ClaimStatus::Certified);
  CHECK(certify("x", Surd(0), Relation::NonNegative, 256).note == "exact equality");
  CHECK(certify("x", Surd(0), Relation::Positive, 256).status == ClaimStatus::Refuted);
  CHECK(certify("x", Surd(-1), Relation::NonNegative, 256).status == ClaimStatus::Refuted);
  // A zero only known through enclosures stays undecided.
  const ClaimVerdict z = certify("z", [] { return Interval(1L) / Interval(3L) - Interval(1L) / Interval(3L); },
                                 Relation::Positive, 128);
  CHECK(z.status == ClaimStatus::Indeterminate);
  const AffineInDelta D = AffineInDelta::delta();
  CHECK(certify_for_all_delta("s", D - AffineInDelta(10), BigInt(10), Relation::NonNegative).status ==
        ClaimStatus::Certified);
  CHECK(certify_for_all_delta("s", D - AffineInDelta(10), BigInt(9), Relation::NonNegative).status ==
        ClaimStatus::Refuted);
  const ClaimVerdict neg = certify_for_all_delta("s", AffineInDelta(100) - D, BigInt(10), Relation::Positive);
  CHECK(neg.status == ClaimStatus::Refuted);
  CHECK(neg.note.find("fails for Delta >") != std::string::npos);
}

TEST_CASE("claim 1 grid") {
  const Params p = make_params(3, BigInt(1000000));
  const Claim1Grid grid = claim1_grid(p, 50);
  CHECK(grid.interior.size() == 50);
  CHECK(grid.q == Surd(600000));
  CHECK(Surd(grid.interior.front()) > grid.q);
  CHECK(grid.interior.back() < 1000000);
  CHECK(std::is_sorted(grid.interior.begin(), grid.interior.end()));

  GridSpec spec;
  spec.points = 200;
  const Claim1Result par = verify_claim1(p, spec);
  spec.serial = true;
  const Claim1Result ser = verify_claim1(p, spec);
  CHECK(par.grid.status == ClaimStatus::Certified);
  CHECK(par.monotone.status == ClaimStatus::Certified);
  CHECK(par.grid.note == ser.grid.note);
}

TEST_CASE("verify_claims for d = 3") {
  GridSpec spec;
  spec.points = 100;
  const auto vs = verify_claims(make_params(3, BigInt(1000000)), spec);
  CHECK_FALSE(any_refuted(vs));
  CHECK(find(vs, "claim7.f1").status == ClaimStatus::Certified);
  CHECK(find(vs, "claim6.f_eps_delta").status == ClaimStatus::Skipped);
  for (const ClaimVerdict& v : vs) CHECK_MESSAGE(v.status != ClaimStatus::Indeterminate, v.claim);
}

TEST_CASE("verify_claims for d = 4 surfaces the table discrepancies") {
  GridSpec spec;
  spec.points = 100;
  const auto vs = verify_claims(make_params(4, BigInt(1000000)), spec);
  const ClaimVerdict& s41 = find(vs, "claim8.special.4_1");
  CHECK(s41.status == ClaimStatus::Certified);
  CHECK(s41.note.find("computed 6*D - 15") != std::string::npos);
  CHECK(s41.note.find("FLAG: stated value 6*D - 18 differs") != std::string::npos);
  CHECK(find(vs, "claim8.special.5_2").note.find("matches stated value") != std::string::npos);
  CHECK(find(vs, "claim8.m8_3").status == ClaimStatus::Certified);
  CHECK(find(vs, "claim8.m8_4").status == ClaimStatus::Refuted);
  CHECK(find(vs, "claim8.m8_4.target").status == ClaimStatus::Certified);
  CHECK(any_refuted(vs));
}

TEST_CASE("D0 against (d+2)^(5d+10)") {
  for (int d : {3, 4, 19, 25, 30}) {
    const ClaimVerdict v = d0_bound_check(d);
    CHECK_MESSAGE(v.status == ClaimStatus::Certified, d);
  }
}

TEST_CASE("claim 6 at Delta = D0") {
  for (int d : {3, 4, 19}) {
    const Params base = make_params(d, BigInt(1000));
    const Params p = with_delta(base, base.d0_ceiling);
    const ClaimVerdict v =
        certify("f", [&] { return f_claim6_at_eps_delta(p); }, Relation::Positive, 4096);
    CHECK_MESSAGE(v.status == ClaimStatus::Certified, d);
  }
}
