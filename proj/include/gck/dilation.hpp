#pragma once

#include <cstdint>
#include <utility>

#include "gck/canonical.hpp"

namespace gck {

// Single-environment-mode physical representation of a canonical channel: a
// 4x4 symplectic coupling M between system mode A and a thermal environment
// mode B with mean photon number N.
//
// Block layout. Careful: the off-diagonal names are swapped relative to the
// usual row/column reading -- m12 is the LOWER-left quadrant:
//
//              A-cols   B-cols
//            +--------+--------+
//    A-rows  |  m11   |  m21   |
//     M =    +--------+--------+
//    B-rows  |  m12   |  m22   |
//            +--------+--------+
//
// Columns of M list the transformed quadratures, so the system output is the
// channel K = m11, alpha = (N + 1/2) m12^T m12, and the environment output is
// the weakly complementary channel K = m21, alpha = (N + 1/2) m22^T m22.
class SymplecticDilation {
 public:
  const Mat4& M() const { return m_; }
  double photon_number() const { return photon_number_; }
  // True iff the environment starts in the vacuum; only then does the weakly
  // complementary channel coincide with the complementary channel.
  bool env_pure() const { return photon_number_ == 0.0; }

  Mat2 m11() const { return m_.quadrant(0, 0); }
  Mat2 m21() const { return m_.quadrant(0, 1); }
  Mat2 m12() const { return m_.quadrant(1, 0); }
  Mat2 m22() const { return m_.quadrant(1, 1); }

 private:
  SymplecticDilation(const Mat4& m, double photon_number)
      : m_(m), photon_number_(photon_number) {}
  friend SymplecticDilation build_dilation(const CanonicalForm&);

  Mat4 m_;
  double photon_number_;
};

// Coupling matrix and environment photon number for the class: N = N0 for
// A1, A2, C, D and N = 0 for B1 (any N works there; the vacuum is chosen).
// Class C branches on kappa < 1 (attenuator) vs kappa > 1 (amplifier).
// Throws Error(NoSingleModeDilation) for B2: its coupling would require an
// environment of unbounded temperature.
SymplecticDilation build_dilation(const CanonicalForm& cf);

// Channel into the environment mode, re-read as a one-mode channel on A (the
// A<->B exchange isometry is implicit). Throws for B2.
GaussianChannel weak_complement(const CanonicalForm& cf);

// Evolves state ⊗ thermal(N) through M: Gamma' = M^T Gamma M with
// Gamma = gamma ⊕ (N + 1/2) I. Returns (system output, environment output);
// these match apply() for the channel and its weak complement, which makes
// this the independent cross-check for both.
std::pair<GaussianState, GaussianState> joint_evolve(
    const SymplecticDilation& dil, const GaussianState& s);

// Member of the one-parameter family K = kappa I, alpha = n0 I with
// kappa = 1 + d, d = min(delta, sqrt(1 + 2 n0) - 1). Every member is a valid
// class-C channel with a single-mode representation, alpha matches the
// additive noise channel exactly, and the entrywise distance to it is
// |kappa - 1|. n0 below tolerance returns the identity channel exactly.
GaussianChannel approximate_b2(double n0, double delta);

// Monte-Carlo estimate of the additive classical noise channel: phase-space
// displacements z drawn with density (2 pi n0)^-1 exp(-|z|^2 / (2 n0)), the
// mean shifted by each z, and the mixture moments returned. Expected output
// covariance is gamma + n0 I. Sampler: mt19937_64(seed), uniforms from the
// high 53 bits, one Box-Muller pair per draw scaled by sqrt(n0) -- fully
// reproducible for a given (seed, samples). Requires samples >= 1000; n0
// below tolerance returns the input unchanged.
GaussianState simulate_additive_noise(double n0, const GaussianState& s,
                                      std::size_t samples, std::uint64_t seed);

}  // namespace gck
