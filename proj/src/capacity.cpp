#include "gck/capacity.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "gck/error.hpp"
#include "gck/tolerance.hpp"

namespace gck {

const char* to_string(NullCapacityVerdict v) {
  switch (v) {
    case NullCapacityVerdict::null_by_antidegradability:
      return "null_by_antidegradability";
    case NullCapacityVerdict::null_by_dd_bound: return "null_by_DD_bound";
    case NullCapacityVerdict::null_by_cc_bound: return "null_by_CC_bound";
    case NullCapacityVerdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

void check_kappa(double kappa) {
  if (!(kappa > 0.0)) {
    throw Error(Errc::InvalidParameters, "kappa must be positive");
  }
  if (kappa == 1.0) {
    throw Error(Errc::SingularAtUnity, "bound diverges at kappa = 1");
  }
}

}  // namespace

double dd_bound(double kappa) {
  check_kappa(kappa);
  const double k2 = kappa * kappa;
  return 0.5 * ((k2 + 1.0) / std::abs(k2 - 1.0) - 1.0);
}

double cc_bound(double kappa) {
  check_kappa(kappa);
  const double k2 = kappa * kappa;
  return 0.5 * (k2 / std::abs(k2 - 1.0) - 1.0);
}

CapacityVerdict verdict(double kappa, double n0) {
  if (!(kappa > 0.0) || !(n0 >= 0.0)) {
    throw Error(Errc::InvalidParameters, "need kappa > 0 and n0 >= 0");
  }
  CapacityVerdict out;
  out.kappa = kappa;
  out.n0 = n0;

  const double k2 = kappa * kappa;
  if (k2 <= 0.5 + tolerance()) {
    out.verdict = NullCapacityVerdict::null_by_antidegradability;
    out.bound_dd = dd_bound(kappa);
    out.bound_cc = cc_bound(kappa);
    return out;
  }

  out.bound_dd = dd_bound(kappa);  // throws SingularAtUnity for kappa = 1
  out.bound_cc = cc_bound(kappa);
  if (n0 >= out.bound_cc) {
    out.verdict = NullCapacityVerdict::null_by_cc_bound;
  } else if (n0 >= out.bound_dd) {
    // Unreachable while bound_cc < bound_dd; kept as a cross-check.
    out.verdict = NullCapacityVerdict::null_by_dd_bound;
  } else {
    out.verdict = NullCapacityVerdict::unknown;
  }
  return out;
}

std::pair<CanonicalForm, CanonicalForm> factorize_cc(double kappa, double n0) {
  if (!(kappa > 0.0) || !(n0 >= 0.0)) {
    throw Error(Errc::InvalidParameters, "need kappa > 0 and n0 >= 0");
  }
  if (kappa == 1.0) {
    throw Error(Errc::SingularAtUnity, "no class-C channel at kappa = 1");
  }
  const double bound = cc_bound(kappa);
  if (n0 < bound - tolerance()) {
    std::ostringstream os;
    os << "N0 = " << n0 << " below the factorization threshold " << bound
       << " at kappa = " << kappa;
    throw Error(Errc::NotInRegion, os.str(), bound - n0);
  }

  double k2 = std::sqrt(0.5);
  double k1 = kappa / k2;
  if (std::abs(k1 - 1.0) <= 1e-9) {
    // kappa == sqrt(1/2): the default split would need kappa_1 = 1, which is
    // not a class-C channel. Shrink the attenuator slightly; the N1 solve
    // below absorbs the change.
    k2 *= 1.0 - 1e-3;
    k1 = kappa / k2;
  }

  const double dk = std::abs(kappa * kappa - 1.0);
  const double a1 = k2 * k2 * std::abs(k1 * k1 - 1.0);
  const double a2 = std::abs(k2 * k2 - 1.0);
  // Composite noise parameter: n0 = (a2 n2 + a1 n1)/dk + c0.
  const double c0 = 0.5 * ((a1 + a2) / dk - 1.0);

  double n1 = (n0 - c0) * dk / a1;
  double n2 = 0.0;
  if (n1 < 0.0 && n1 > -tolerance()) n1 = 0.0;
  if (n1 < 0.0) {
    n1 = 0.0;
    n2 = (n0 - c0) * dk / a2;
    if (n2 < 0.0 && n2 > -tolerance()) n2 = 0.0;
  }
  if (n2 < 0.0) {
    throw Error(Errc::NotInRegion,
                "no nonnegative noise split exists for this point");
  }
  return {CanonicalForm::c(k1, n1), CanonicalForm::c(k2, n2)};
}

RegionScan region_scan(double kappa_min, double kappa_max, double n0_min,
                       double n0_max, std::size_t steps) {
  if (!(kappa_min > 0.0) || !(kappa_max >= kappa_min) || !(n0_min >= 0.0) ||
      !(n0_max >= n0_min) || steps < 2) {
    throw Error(Errc::InvalidParameters, "bad region grid");
  }
  RegionScan scan;
  scan.n0_steps = steps;
  for (std::size_t i = 0; i < steps; ++i) {
    const double kappa =
        kappa_min + (kappa_max - kappa_min) * static_cast<double>(i) /
                        static_cast<double>(steps - 1);
    if (std::abs(kappa - 1.0) < 1e-6) continue;  // stepped over
    ++scan.kappa_steps;
    for (std::size_t j = 0; j < steps; ++j) {
      const double n0 = n0_min + (n0_max - n0_min) * static_cast<double>(j) /
                                     static_cast<double>(steps - 1);
      scan.points.push_back(verdict(kappa, n0));
    }
  }
  return scan;
}

void write_region_csv(const RegionScan& scan, std::ostream& os) {
  os << "kappa,kappa_sq,N0,verdict,bound_DD,bound_CC\n";
  char buf[160];
  for (const CapacityVerdict& p : scan.points) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%s,%.12g,%.12g\n",
                  p.kappa, p.kappa * p.kappa, p.n0, to_string(p.verdict),
                  p.bound_dd, p.bound_cc);
    os << buf;
  }
}

}  // namespace gck
