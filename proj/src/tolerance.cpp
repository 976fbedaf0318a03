#include "gck/tolerance.hpp"

#include <cmath>
#include <cstdlib>

namespace gck {

namespace {

double initial_tolerance() {
  if (const char* env = std::getenv("GCK_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v > 0.0) return v;
  }
  return 1e-9;
}

double& slot() {
  static double eps = initial_tolerance();
  return eps;
}

}  // namespace

double tolerance() { return slot(); }

void set_tolerance(double eps) { slot() = eps; }

double tol_for(double scale) { return tolerance() * (scale > 1.0 ? scale : 1.0); }

}  // namespace gck
