#include "gck/degradability.hpp"

#include <cmath>

#include "gck/error.hpp"
#include "gck/tolerance.hpp"

namespace gck {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::weak: return "weak";
    case Direction::anti: return "anti";
    case Direction::both: return "both";
    case Direction::neither: return "neither";
  }
  return "?";
}

namespace {

double det_k_can(const CanonicalForm& cf) {
  switch (cf.cls()) {
    case ChannelClass::A1:
    case ChannelClass::A2: return 0.0;
    case ChannelClass::B1:
    case ChannelClass::B2: return 1.0;
    case ChannelClass::C: return cf.kappa() * cf.kappa();
    case ChannelClass::D: return -cf.kappa() * cf.kappa();
  }
  return 0.0;
}

// The environment channel of the identity: every input is replaced by the
// untouched vacuum environment (K = 0, alpha = I/2). Serves as the weak
// complement in the degenerate B2 N0 = 0 case.
GaussianChannel vacuum_preparation() {
  return validate_channel(Mat2::zero(), 0.5 * Mat2::identity());
}

GaussianChannel complement_of(const CanonicalForm& cf, bool degenerate) {
  if (degenerate) return vacuum_preparation();
  return weak_complement(cf);
}

GaussianChannel connecting_channel_for(const CanonicalForm& cf,
                                       bool anti_side) {
  const Mat2 id = Mat2::identity();
  const Mat2 sz = Mat2::pauli_z();
  const double half = cf.n0() + 0.5;

  switch (cf.cls()) {
    case ChannelClass::A1:
    case ChannelClass::A2:
      // The channel degrades its own output to the environment output, so
      // the anti-side witness is the channel itself.
      return to_channel(cf);
    case ChannelClass::B1:
      return weak_complement(cf);
    case ChannelClass::B2:
      return vacuum_preparation();  // degenerate identity case only
    case ChannelClass::C: {
      const double k = cf.kappa();
      if (anti_side) {
        const double kp = k / std::sqrt(1.0 - k * k);
        return validate_channel(kp * id, (1.0 - kp * kp) * half * id);
      }
      if (k < 1.0) {
        const double kp = std::sqrt(1.0 - k * k) / k;
        return validate_channel(kp * id, (1.0 - kp * kp) * half * id);
      }
      const double kp = std::sqrt(k * k - 1.0) / k;
      return validate_channel(kp * sz, (kp * kp + 1.0) * half * id);
    }
    case ChannelClass::D: {
      const double k = cf.kappa();
      const double kp = k / std::sqrt(k * k + 1.0);
      return validate_channel(kp * sz, (kp * kp + 1.0) * half * id);
    }
  }
  throw Error(Errc::InvalidParameters, "unknown canonical class");
}

double connection_residual(const CanonicalForm& cf, Direction dir,
                           const GaussianChannel& connecting, bool degenerate) {
  const GaussianChannel phi = to_channel(cf);
  const GaussianChannel phi_tilde = complement_of(cf, degenerate);
  if (dir == Direction::weak) {
    return channel_distance(compose(phi, connecting), phi_tilde);
  }
  // anti or both: the reported witness is the anti-side map.
  return channel_distance(compose(phi_tilde, connecting), phi);
}

}  // namespace

DegradabilityReport analyze(const CanonicalForm& cf) {
  const double eps = tolerance();
  DegradabilityReport rep;
  rep.input_class = cf;

  if (cf.cls() == ChannelClass::B2) {
    if (cf.n0() <= eps) {
      // Identity channel: trivially weakly degradable and degradable.
      rep.degenerate = true;
      rep.weakly_degradable = true;
      rep.degradable = true;
      rep.direction = Direction::weak;
      rep.connecting_channel = vacuum_preparation();
    } else {
      rep.direction = Direction::neither;
    }
  } else {
    const double dk = det_k_can(cf);
    rep.anti_degradable = dk <= 0.5 + eps;
    rep.weakly_degradable = dk >= 0.5 - eps;
    rep.near_boundary = std::abs(dk - 0.5) <= 2.0 * eps;
    rep.direction = rep.anti_degradable
                        ? (rep.weakly_degradable ? Direction::both
                                                 : Direction::anti)
                        : Direction::weak;
    rep.connecting_channel = connecting_channel_for(cf, rep.anti_degradable);
    rep.degradable =
        cf.cls() == ChannelClass::B1 ||
        (cf.cls() == ChannelClass::C && rep.weakly_degradable &&
         cf.n0() <= eps);
  }

  rep.null_capacity_by_antidegradability = rep.anti_degradable;
  if (rep.connecting_channel) {
    rep.verification_residual = connection_residual(
        cf, rep.direction, *rep.connecting_channel, rep.degenerate);
  }
  return rep;
}

double verify_connection(const DegradabilityReport& report) {
  if (!report.connecting_channel) {
    throw Error(Errc::MissingComplement,
                "report carries no connecting channel (class B2 with N0 > 0 "
                "is neither weakly degradable nor anti-degradable)");
  }
  return connection_residual(report.input_class, report.direction,
                             *report.connecting_channel, report.degenerate);
}

}  // namespace gck
