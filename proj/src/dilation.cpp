#include "gck/dilation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gck/error.hpp"
#include "gck/tolerance.hpp"

namespace gck {

SymplecticDilation build_dilation(const CanonicalForm& cf) {
  const Mat2 id = Mat2::identity();
  const Mat2 sz = Mat2::pauli_z();
  const Mat2 zero = Mat2::zero();

  Mat2 m11, m21, m12, m22;
  double photons = cf.n0();

  switch (cf.cls()) {
    case ChannelClass::A1:
      // Full swap of system and environment.
      m11 = zero;
      m21 = id;
      m12 = id;
      m22 = zero;
      break;
    case ChannelClass::A2:
      m11 = Mat2::diag(1.0, 0.0);
      m21 = id;
      m12 = id;
      m22 = Mat2::diag(0.0, -1.0);
      break;
    case ChannelClass::B1:
      m11 = id;
      m21 = Mat2::diag(1.0, 0.0);
      m12 = Mat2::diag(0.0, 1.0);
      m22 = -1.0 * id;
      photons = 0.0;  // free choice; vacuum keeps the representation pure
      break;
    case ChannelClass::C: {
      const double k = cf.kappa();
      if (k < 1.0) {  // beamsplitter-type attenuator
        const double s = std::sqrt(1.0 - k * k);
        m11 = k * id;
        m21 = s * id;
        m12 = s * id;
        m22 = -k * id;
      } else {  // two-mode-squeezing amplifier
        const double s = std::sqrt(k * k - 1.0);
        m11 = k * id;
        m21 = s * sz;
        m12 = s * sz;
        m22 = k * id;
      }
      break;
    }
    case ChannelClass::D: {
      const double k = cf.kappa();
      const double s = std::sqrt(k * k + 1.0);
      m11 = k * sz;
      m21 = s * id;
      m12 = s * id;
      m22 = k * sz;
      break;
    }
    case ChannelClass::B2:
      throw Error(Errc::NoSingleModeDilation,
                  "class B2 has no physical representation with a single "
                  "environment mode (det m11 + det m12 = 1 would require an "
                  "infinite-temperature environment)");
  }

  const Mat4 m = Mat4::from_quadrants(m11, m21, m12, m22);

  // Internal consistency: every constructed coupling is symplectic and
  // reproduces the canonical alpha. Failure here is a bug, not bad input.
  if (symplectic_defect(m) > 1e-12 ||
      std::abs(det(m11) + det(m12) - 1.0) > 1e-12) {
    throw std::logic_error("constructed coupling matrix is not symplectic");
  }
  const Mat2 alpha_rec = (photons + 0.5) * (transpose(m12) * m12);
  if (max_abs_diff(alpha_rec, to_channel(cf).alpha()) >
      tol_for(max_abs(alpha_rec))) {
    throw std::logic_error("coupling does not reproduce the channel noise");
  }

  return SymplecticDilation(m, photons);
}

GaussianChannel weak_complement(const CanonicalForm& cf) {
  const SymplecticDilation dil = build_dilation(cf);
  const double nu = dil.photon_number() + 0.5;
  return validate_channel(dil.m21(), nu * (transpose(dil.m22()) * dil.m22()));
}

std::pair<GaussianState, GaussianState> joint_evolve(
    const SymplecticDilation& dil, const GaussianState& s) {
  const double nu = dil.photon_number() + 0.5;
  const Mat4 joint = Mat4::from_quadrants(s.gamma(), Mat2::zero(), Mat2::zero(),
                                          nu * Mat2::identity());
  const Mat4 mt = transpose(dil.M());
  const Mat4 evolved = mt * joint * dil.M();
  const Vec4 mean_in{s.mean().x, s.mean().y, 0.0, 0.0};
  const Vec4 mean_out = mt * mean_in;

  GaussianState out_a =
      make_state(Vec2(mean_out[0], mean_out[1]), evolved.quadrant(0, 0));
  GaussianState out_b =
      make_state(Vec2(mean_out[2], mean_out[3]), evolved.quadrant(1, 1));
  return {out_a, out_b};
}

GaussianChannel approximate_b2(double n0, double delta) {
  if (!(n0 >= 0.0) || !(delta > 0.0)) {
    throw Error(Errc::InvalidParameters,
                "approximate_b2 requires n0 >= 0 and delta > 0");
  }
  const Mat2 id = Mat2::identity();
  if (n0 < tolerance()) {
    // Degenerate target: the channel is the identity; return it exactly.
    return validate_channel(id, Mat2::zero());
  }
  // Largest admissible kappa keeps |kappa^2 - 1| <= 2 n0, i.e. the family
  // member stays a valid channel with nonnegative N0.
  const double d = std::min(delta, std::sqrt(1.0 + 2.0 * n0) - 1.0);
  return validate_channel((1.0 + d) * id, n0 * id);
}

GaussianState simulate_additive_noise(double n0, const GaussianState& s,
                                      std::size_t samples,
                                      std::uint64_t seed) {
  if (!(n0 >= 0.0)) {
    throw Error(Errc::InvalidParameters, "n0 must be nonnegative");
  }
  if (samples < 1000) {
    throw Error(Errc::InvalidParameters,
                "need at least 1000 samples for a stable moment estimate");
  }
  if (n0 < tolerance()) return s;  // point-mass displacement density

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };

  const double sd = std::sqrt(n0);
  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double zx = sd * r * std::cos(2.0 * M_PI * u2);
    const double zy = sd * r * std::sin(2.0 * M_PI * u2);
    sx += zx;
    sy += zy;
    sxx += zx * zx;
    syy += zy * zy;
    sxy += zx * zy;
  }

  const double n = static_cast<double>(samples);
  const double mx = sx / n, my = sy / n;
  const Mat2 displacement_cov(sxx / n - mx * mx, sxy / n - mx * my,
                              sxy / n - mx * my, syy / n - my * my);
  return make_state(s.mean() + Vec2(mx, my), s.gamma() + displacement_cov);
}

}  // namespace gck
