#pragma once

namespace gck {

// Global absolute tolerance used by the symmetry/PSD/CP checks and the
// classification bands; checks scale it by max(1, matrix max-norm).
// Defaults to 1e-9. The environment variable GCK_TOLERANCE overrides the
// default at first use. set_tolerance is not synchronized: configure before
// spawning workers.
double tolerance();
void set_tolerance(double eps);

// tolerance() * max(1, scale)
double tol_for(double scale);

}  // namespace gck
