#include "gck/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gck/error.hpp"
#include "gck/tolerance.hpp"

namespace gck {

GaussianChannel validate_channel(const Mat2& K, const Mat2& alpha,
                                 const Vec2& m) {
  const double tol_a = tol_for(max_abs(alpha));

  const double asym = std::abs(alpha(0, 1) - alpha(1, 0));
  if (asym > tol_a) {
    std::ostringstream os;
    os << "alpha is not symmetric: |a01 - a10| = " << asym;
    throw Error(Errc::NotSymmetric, os.str(), asym);
  }

  const Mat2 sym = symmetrize(alpha);
  const double lambda_min = sym_eigenvalues(sym)[0];
  if (lambda_min < -tol_a) {
    std::ostringstream os;
    os << "alpha is not positive semidefinite: min eigenvalue = " << lambda_min;
    throw Error(Errc::NotPositiveSemidefinite, os.str(), -lambda_min);
  }

  const double half_gap = 0.5 * (det(K) - 1.0);
  const double cp_gap = det(sym) - half_gap * half_gap;
  const double tol_cp = tol_for(std::max(max_abs(sym), max_abs(K)));
  if (cp_gap < -tol_cp) {
    std::ostringstream os;
    os << "complete positivity violated: det(alpha) - ((det K - 1)/2)^2 = "
       << cp_gap;
    throw Error(Errc::CPViolated, os.str(), -cp_gap);
  }

  return GaussianChannel(K, sym, m);
}

GaussianState GaussianState::vacuum() { return thermal(0.0); }

GaussianState GaussianState::thermal(double photon_number) {
  if (!(photon_number >= 0.0)) {
    throw Error(Errc::InvalidParameters, "thermal photon number must be >= 0");
  }
  return make_state(Vec2(), (photon_number + 0.5) * Mat2::identity());
}

GaussianState make_state(const Vec2& mean, const Mat2& gamma) {
  const double tol_g = tol_for(max_abs(gamma));

  const double asym = std::abs(gamma(0, 1) - gamma(1, 0));
  if (asym > tol_g) {
    throw Error(Errc::NotSymmetric, "covariance is not symmetric", asym);
  }

  const Mat2 sym = symmetrize(gamma);
  const double lambda_min = sym_eigenvalues(sym)[0];
  if (lambda_min < -tol_g) {
    throw Error(Errc::NotPositiveSemidefinite,
                "covariance is not positive definite", -lambda_min);
  }

  const double gap = det(sym) - 0.25;
  if (gap < -tol_g) {
    std::ostringstream os;
    os << "uncertainty relation violated: det(gamma) = " << det(sym)
       << " < 1/4";
    throw Error(Errc::UncertaintyViolated, os.str(), -gap);
  }

  return GaussianState(mean, sym);
}

GaussianState apply(const GaussianChannel& ch, const GaussianState& s) {
  const Mat2 kt = transpose(ch.K());
  const Mat2 gamma_out = kt * s.gamma() * ch.K() + ch.alpha();
  const Vec2 mean_out = kt * s.mean() + ch.m();
  return make_state(mean_out, gamma_out);
}

GaussianChannel compose(const GaussianChannel& first,
                        const GaussianChannel& second) {
  const Mat2 k2t = transpose(second.K());
  const Mat2 k = first.K() * second.K();
  const Mat2 alpha = k2t * first.alpha() * second.K() + second.alpha();
  const Vec2 m = k2t * first.m() + second.m();
  try {
    return validate_channel(k, alpha, m);
  } catch (const Error& e) {
    throw std::logic_error(
        std::string("composition of valid channels failed validation: ") +
        e.what());
  }
}

double channel_distance(const GaussianChannel& a, const GaussianChannel& b) {
  return std::max({max_abs_diff(a.K(), b.K()),
                   max_abs_diff(a.alpha(), b.alpha()),
                   max_abs_diff(a.m(), b.m())});
}

}  // namespace gck
