#pragma once

#include "gck/mat.hpp"

namespace gck {

// One-mode Gaussian channel acting on characteristic functions as
//
//   phi(z)  ->  phi(K z) * exp(-(1/2) z^T alpha z + i m^T z).
//
// Instances are always valid: alpha symmetric positive semidefinite and
// det(alpha) >= ((det K - 1)/2)^2 (complete positivity). Construct through
// validate_channel(). Values are immutable and safe to share.
class GaussianChannel {
 public:
  const Mat2& K() const { return k_; }
  const Mat2& alpha() const { return alpha_; }
  const Vec2& m() const { return m_; }

 private:
  GaussianChannel(const Mat2& k, const Mat2& alpha, const Vec2& m)
      : k_(k), alpha_(alpha), m_(m) {}
  friend GaussianChannel validate_channel(const Mat2&, const Mat2&, const Vec2&);

  Mat2 k_;
  Mat2 alpha_;
  Vec2 m_;
};

// Checks, in order: alpha symmetric within tolerance, alpha PSD (eigenvalues
// of the symmetrized matrix), complete positivity. Throws Error with code
// NotSymmetric, NotPositiveSemidefinite or CPViolated (residual = size of the
// violation). The stored alpha is the symmetrized input.
GaussianChannel validate_channel(const Mat2& K, const Mat2& alpha,
                                 const Vec2& m = Vec2());

// Gaussian state of one bosonic mode: quadrature means plus 2x2 covariance.
// Convention: the thermal state of mean photon number N has
// gamma = (N + 1/2) I, so the vacuum is gamma = I/2 and physical states have
// det(gamma) >= 1/4.
class GaussianState {
 public:
  const Vec2& mean() const { return mean_; }
  const Mat2& gamma() const { return gamma_; }

  static GaussianState vacuum();
  static GaussianState thermal(double photon_number);

 private:
  GaussianState(const Vec2& mean, const Mat2& gamma)
      : mean_(mean), gamma_(gamma) {}
  friend GaussianState make_state(const Vec2&, const Mat2&);

  Vec2 mean_;
  Mat2 gamma_;
};

// Validates symmetry, positive definiteness and det(gamma) >= 1/4; stores the
// symmetrized covariance. Throws Error(NotSymmetric / NotPositiveSemidefinite
// / UncertaintyViolated).
GaussianState make_state(const Vec2& mean, const Mat2& gamma);

// mean' = K^T mean + m,  gamma' = K^T gamma K + alpha.
GaussianState apply(const GaussianChannel& ch, const GaussianState& s);

// second ∘ first (first acts first):
//   K = K' K'',  alpha = K''^T alpha' K'' + alpha'',  m = K''^T m' + m''.
// Complete positivity is closed under composition; a validation failure here
// is an internal bug and throws std::logic_error.
GaussianChannel compose(const GaussianChannel& first,
                        const GaussianChannel& second);

// Max entrywise deviation over (K, alpha, m).
double channel_distance(const GaussianChannel& a, const GaussianChannel& b);

}  // namespace gck
