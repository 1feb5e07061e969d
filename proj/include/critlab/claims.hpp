#pragma once

#include <functional>
#include <string>
#include <vector>

#include "critlab/affine.hpp"
#include "critlab/numeric.hpp"
#include "critlab/params.hpp"
#include "critlab/surd.hpp"

namespace critlab {

/// Skipped marks a check whose hypothesis (Delta >= D0) fails at the given Delta.
enum class ClaimStatus { Certified, Refuted, Indeterminate, Skipped };
std::string to_string(ClaimStatus s);

struct ClaimVerdict {
  std::string claim;
  ClaimStatus status = ClaimStatus::Indeterminate;
  Interval interval;               // enclosure of the checked quantity
  mpfr_prec_t precision_bits = 0;  // 0 when evaluated exactly
  std::string note;
};

struct GridSpec {
  long points = 10000;              // interior points; both endpoints are added
  mpfr_prec_t precision_cap = 4096;
  int jobs = 0;
  bool serial = false;              // use the serial reference kernel
};

enum class Relation { Positive, NonNegative };

/// Sign certification of an exact value: decided exactly when rational,
/// otherwise by enclosures at 64, 128, ... bits up to `cap`.
ClaimVerdict certify(const std::string& id, const Surd& value, Relation rel, mpfr_prec_t cap);
/// Same for a quantity only available as an enclosure at the working precision.
ClaimVerdict certify(const std::string& id, const std::function<Interval()>& eval, Relation rel, mpfr_prec_t cap);
/// `diff` must satisfy rel for every Delta >= delta.
ClaimVerdict certify_for_all_delta(const std::string& id, const AffineInDelta& diff, const BigInt& delta, Relation rel);

/// q, then `points` geometric interior points, then Delta. Interior points are
/// rationals strictly between the endpoints.
struct Claim1Grid {
  Surd q;
  std::vector<Rational> interior;
  BigInt delta;
};
Claim1Grid claim1_grid(const Params& params, long points);

struct Claim1Result {
  ClaimVerdict grid;      // g2(k) - g1(k) >= 0 at every grid point
  ClaimVerdict monotone;  // consecutive differences of g2 - g1 are >= 0
};
Claim1Result verify_claim1(const Params& params, const GridSpec& spec);

/// One row of the small-degree table: k in [d, 3d-4], 0 <= p <= k-2.
struct Claim8Row {
  long k = 0;
  long p = 0;
  std::string kind;             // "special", "large" or "generic"
  std::vector<long> profile;    // minimizing integer b at the given Delta
  AffineInDelta minimum;        // m_lower_x2 at that profile
  AffineInDelta relaxed_floor;  // Cauchy-Schwarz floor over real profiles
  AffineInDelta target;         // (d+2)(Delta - k)
  bool all_profiles_hold = false;  // every integer profile reaches target for Delta >= params.delta
};
/// Requires d in {3,4} and rational omega.
std::vector<Claim8Row> claim8_table(const Params& params);

/// Every nonincreasing profile of `length` nonnegative integers with sum <= p.
std::vector<std::vector<long>> integer_profiles(long length, long p);

std::vector<ClaimVerdict> verify_claims(const Params& params, const GridSpec& spec);

/// D0 <= (d+2)^(5d+10) at the default constants for d.
ClaimVerdict d0_bound_check(int d, mpfr_prec_t cap = 4096);

/// True when any verdict is Refuted.
bool any_refuted(const std::vector<ClaimVerdict>& verdicts);

}  // namespace critlab
