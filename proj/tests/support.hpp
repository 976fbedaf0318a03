#pragma once

#include <cmath>
#include <random>

#include "gck/gck.hpp"

namespace testsupport {

// Deterministic draw helpers for the property tests.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }

  std::mt19937_64 eng;
};

inline gck::Mat2 rotation(double theta) {
  return gck::Mat2(std::cos(theta), -std::sin(theta), std::sin(theta),
                   std::cos(theta));
}

// Arbitrary valid channel: random K, then a PSD alpha whose determinant
// clears the complete-positivity floor with margin.
inline gck::GaussianChannel random_channel(Rng& rng) {
  const gck::Mat2 k(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                    rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
  const double floor = std::abs(gck::det(k) - 1.0) / 2.0;
  const gck::Mat2 rot = rotation(rng.uniform(0.0, 2.0 * M_PI));
  const gck::Mat2 diag = gck::Mat2::diag(floor + rng.uniform(0.05, 1.5),
                                         floor + rng.uniform(0.05, 1.5));
  const gck::Mat2 alpha = rot * diag * gck::transpose(rot);
  const gck::Vec2 m(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return gck::validate_channel(k, alpha, m);
}

inline gck::GaussianState random_state(Rng& rng) {
  const gck::Mat2 rot = rotation(rng.uniform(0.0, 2.0 * M_PI));
  const gck::Mat2 diag =
      gck::Mat2::diag(rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0));
  return gck::make_state(gck::Vec2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)),
                         rot * diag * gck::transpose(rot));
}

// det = 1 up to roundoff: rotation * squeeze * rotation.
inline gck::Mat2 random_symplectic(Rng& rng) {
  const double s = rng.uniform(0.5, 2.0);
  return rotation(rng.uniform(0.0, 2.0 * M_PI)) * gck::Mat2::diag(s, 1.0 / s) *
         rotation(rng.uniform(0.0, 2.0 * M_PI));
}

// Unit channel (K symplectic, alpha = 0): composing with it must not change
// any classification invariant.
inline gck::GaussianChannel random_unit_channel(Rng& rng) {
  return gck::validate_channel(random_symplectic(rng), gck::Mat2::zero());
}

// Random canonical form of the given class. kappa avoids the excluded
// neighborhood of 1 for class C.
inline gck::CanonicalForm random_form(gck::ChannelClass cls, Rng& rng) {
  const double n0 = rng.uniform(0.0, 3.0);
  double kappa = rng.uniform(0.1, 2.5);
  switch (cls) {
    case gck::ChannelClass::A1: return gck::CanonicalForm::a1(n0);
    case gck::ChannelClass::A2: return gck::CanonicalForm::a2(n0);
    case gck::ChannelClass::B1: return gck::CanonicalForm::b1();
    case gck::ChannelClass::B2: return gck::CanonicalForm::b2(n0);
    case gck::ChannelClass::C:
      while (std::abs(kappa - 1.0) < 0.05) kappa = rng.uniform(0.1, 2.5);
      return gck::CanonicalForm::c(kappa, n0);
    case gck::ChannelClass::D: return gck::CanonicalForm::d(kappa, n0);
  }
  return gck::CanonicalForm::b2(n0);
}

inline double state_distance(const gck::GaussianState& a,
                             const gck::GaussianState& b) {
  return std::max(gck::max_abs_diff(a.gamma(), b.gamma()),
                  gck::max_abs_diff(a.mean(), b.mean()));
}

inline double form_distance(const gck::CanonicalForm& a,
                            const gck::CanonicalForm& b) {
  if (a.cls() != b.cls()) return 1.0;
  double d = 0.0;
  if (a.has_kappa()) d = std::max(d, std::abs(a.kappa() - b.kappa()));
  if (a.has_n0()) d = std::max(d, std::abs(a.n0() - b.n0()));
  return d;
}

constexpr gck::ChannelClass kAllClasses[] = {
    gck::ChannelClass::A1, gck::ChannelClass::A2, gck::ChannelClass::B1,
    gck::ChannelClass::B2, gck::ChannelClass::C,  gck::ChannelClass::D};

// The classification grid used across the verification suites.
constexpr double kKappaGrid[] = {0.1, 0.25, 0.5, 0.7071067811865476,
                                 0.9, 1.5,  2.0, 3.0};
constexpr double kN0Grid[] = {0.0, 0.5, 1.0, 2.0, 5.0};

// Forms on the grid for one class (a single B1, since it has no parameters).
inline std::vector<gck::CanonicalForm> grid_forms(gck::ChannelClass cls) {
  std::vector<gck::CanonicalForm> out;
  switch (cls) {
    case gck::ChannelClass::A1:
      for (double n0 : kN0Grid) out.push_back(gck::CanonicalForm::a1(n0));
      break;
    case gck::ChannelClass::A2:
      for (double n0 : kN0Grid) out.push_back(gck::CanonicalForm::a2(n0));
      break;
    case gck::ChannelClass::B1:
      out.push_back(gck::CanonicalForm::b1());
      break;
    case gck::ChannelClass::B2:
      for (double n0 : kN0Grid) out.push_back(gck::CanonicalForm::b2(n0));
      break;
    case gck::ChannelClass::C:
      for (double kappa : kKappaGrid)
        for (double n0 : kN0Grid)
          out.push_back(gck::CanonicalForm::c(kappa, n0));
      break;
    case gck::ChannelClass::D:
      for (double kappa : kKappaGrid)
        for (double n0 : kN0Grid)
          out.push_back(gck::CanonicalForm::d(kappa, n0));
      break;
  }
  return out;
}

}  // namespace testsupport
