#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "gck/canonical.hpp"

namespace gck {

enum class NullCapacityVerdict {
  null_by_antidegradability,
  null_by_dd_bound,
  null_by_cc_bound,
  unknown,
};

const char* to_string(NullCapacityVerdict v);

// N0 threshold above which a class-C channel is a composition of two
// phase-conjugating (class D) channels, hence of null quantum capacity:
//   (1/2) ((kappa^2 + 1)/|kappa^2 - 1| - 1).
// Throws Error(SingularAtUnity) at kappa = 1.
double dd_bound(double kappa);

// Tighter threshold from factoring through an anti-degradable attenuator:
//   (1/2) (kappa^2/|kappa^2 - 1| - 1).
// Strictly below dd_bound for every kappa != 1.
double cc_bound(double kappa);

struct CapacityVerdict {
  double kappa = 0.0;
  double n0 = 0.0;
  NullCapacityVerdict verdict = NullCapacityVerdict::unknown;
  double bound_dd = 0.0;
  double bound_cc = 0.0;
};

// Verdict for the class-C channel (kappa, n0): anti-degradable for
// kappa^2 <= 1/2; otherwise null capacity whenever n0 >= cc_bound (the
// dd_bound route is kept as a cross-check but never fires first); else
// unknown -- never upgraded to positive capacity.
CapacityVerdict verdict(double kappa, double n0);

// Explicit witness (first, second), both of class C, with second ∘ first
// classifying back to C(kappa, n0) and the second factor anti-degradable.
// Deterministic split kappa_2 = sqrt(1/2), kappa_1 = kappa/kappa_2, solving
// the composite-N0 relation for N1 with N2 = 0 (falling back to N1 = 0,
// N2 > 0). Throws Error(NotInRegion) when n0 < cc_bound(kappa).
std::pair<CanonicalForm, CanonicalForm> factorize_cc(double kappa, double n0);

struct RegionScan {
  std::vector<CapacityVerdict> points;  // kappa-major, n0-minor grid order
  std::size_t kappa_steps = 0;
  std::size_t n0_steps = 0;
};

// Rectangular verdict grid with `steps` points per axis. Kappa values within
// 1e-6 of 1 are stepped over (both bounds diverge there).
RegionScan region_scan(double kappa_min, double kappa_max, double n0_min,
                       double n0_max, std::size_t steps);

// Columns: kappa, kappa_sq, N0, verdict, bound_DD, bound_CC.
void write_region_csv(const RegionScan& scan, std::ostream& os);

}  // namespace gck
