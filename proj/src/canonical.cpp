#include "gck/canonical.hpp"

#include <cmath>
#include <sstream>

#include "gck/error.hpp"
#include "gck/tolerance.hpp"

namespace gck {

const char* to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::A1: return "A1";
    case ChannelClass::A2: return "A2";
    case ChannelClass::B1: return "B1";
    case ChannelClass::B2: return "B2";
    case ChannelClass::C: return "C";
    case ChannelClass::D: return "D";
  }
  return "?";
}

std::optional<ChannelClass> class_from_string(std::string_view s) {
  if (s == "A1") return ChannelClass::A1;
  if (s == "A2") return ChannelClass::A2;
  if (s == "B1") return ChannelClass::B1;
  if (s == "B2") return ChannelClass::B2;
  if (s == "C") return ChannelClass::C;
  if (s == "D") return ChannelClass::D;
  return std::nullopt;
}

namespace {

double checked_n0(double n0, const char* cls) {
  if (n0 < -tolerance()) {
    std::ostringstream os;
    os << "negative N0 = " << n0 << " for class " << cls;
    throw Error(Errc::InvalidParameters, os.str(), -n0);
  }
  return n0 < 0.0 ? 0.0 : n0;
}

double checked_kappa(double kappa, bool forbid_unity, const char* cls) {
  if (!(kappa > 0.0)) {
    std::ostringstream os;
    os << "kappa must be positive for class " << cls;
    throw Error(Errc::InvalidParameters, os.str());
  }
  // 1e-12 guard, below the classification band so recovered parameters
  // always construct.
  if (forbid_unity && std::abs(kappa - 1.0) <= 1e-12) {
    throw Error(Errc::InvalidParameters, "class C requires kappa != 1");
  }
  return kappa;
}

}  // namespace

CanonicalForm CanonicalForm::a1(double n0) {
  return CanonicalForm(ChannelClass::A1, 0.0, checked_n0(n0, "A1"));
}

CanonicalForm CanonicalForm::a2(double n0) {
  return CanonicalForm(ChannelClass::A2, 0.0, checked_n0(n0, "A2"));
}

CanonicalForm CanonicalForm::b1() {
  return CanonicalForm(ChannelClass::B1, 0.0, 0.0);
}

CanonicalForm CanonicalForm::b2(double n0) {
  return CanonicalForm(ChannelClass::B2, 0.0, checked_n0(n0, "B2"));
}

CanonicalForm CanonicalForm::c(double kappa, double n0) {
  return CanonicalForm(ChannelClass::C, checked_kappa(kappa, true, "C"),
                       checked_n0(n0, "C"));
}

CanonicalForm CanonicalForm::d(double kappa, double n0) {
  return CanonicalForm(ChannelClass::D, checked_kappa(kappa, false, "D"),
                       checked_n0(n0, "D"));
}

namespace {

int rank_from_singular_values(const std::array<double, 2>& sv) {
  const double thr = tolerance() * std::max(1.0, sv[0]);
  int rank = 0;
  for (double s : sv)
    if (s > thr) ++rank;
  return rank;
}

}  // namespace

ChannelInvariants invariants(const GaussianChannel& ch) {
  ChannelInvariants inv;
  inv.det_k = det(ch.K());
  inv.rank_k = rank_from_singular_values(singular_values(ch.K()));
  inv.det_alpha = std::max(det(ch.alpha()), 0.0);
  inv.rank_alpha = rank_from_singular_values(singular_values(ch.alpha()));
  if (inv.rank_alpha == 1 && std::abs(inv.det_k - 1.0) > tolerance()) {
    std::ostringstream os;
    os << "rank-one alpha with det K = " << inv.det_k
       << " (only det K = 1 admits rank-one noise)";
    throw Error(Errc::InconsistentInvariants, os.str(),
                std::abs(inv.det_k - 1.0));
  }
  return inv;
}

Classification classify_full(const GaussianChannel& ch) {
  const ChannelInvariants inv = invariants(ch);
  const double eps = tolerance();
  const double sqrt_da = std::sqrt(inv.det_alpha);

  Classification out;
  out.invariants = inv;

  const double d0 = std::abs(inv.det_k);
  const double d1 = std::abs(inv.det_k - 1.0);
  out.near_boundary = (d0 > eps && d0 < 2.0 * eps) || (d1 > eps && d1 < 2.0 * eps);

  if (d0 <= eps) {
    const double n0 = sqrt_da - 0.5;
    out.form = inv.rank_k == 0 ? CanonicalForm::a1(checked_n0(n0, "A1"))
                               : CanonicalForm::a2(checked_n0(n0, "A2"));
  } else if (d1 <= eps) {
    out.form = inv.rank_alpha == 1 ? CanonicalForm::b1()
                                   : CanonicalForm::b2(sqrt_da);
  } else if (inv.det_k < 0.0) {
    const double kappa = std::sqrt(-inv.det_k);
    const double n0 = sqrt_da / (kappa * kappa + 1.0) - 0.5;
    out.form = CanonicalForm::d(kappa, checked_n0(n0, "D"));
  } else {
    const double kappa = std::sqrt(inv.det_k);
    const double n0 = sqrt_da / std::abs(kappa * kappa - 1.0) - 0.5;
    out.form = CanonicalForm::c(kappa, checked_n0(n0, "C"));
  }
  return out;
}

CanonicalForm classify(const GaussianChannel& ch) {
  return classify_full(ch).form;
}

GaussianChannel to_channel(const CanonicalForm& cf) {
  const Mat2 id = Mat2::identity();
  const Mat2 sz = Mat2::pauli_z();
  switch (cf.cls()) {
    case ChannelClass::A1:
      return validate_channel(Mat2::zero(), (cf.n0() + 0.5) * id);
    case ChannelClass::A2:
      return validate_channel(Mat2::diag(1.0, 0.0), (cf.n0() + 0.5) * id);
    case ChannelClass::B1:
      return validate_channel(id, Mat2::diag(0.0, 0.5));
    case ChannelClass::B2:
      return validate_channel(id, cf.n0() * id);
    case ChannelClass::C: {
      const double k = cf.kappa();
      return validate_channel(k * id,
                              std::abs(k * k - 1.0) * (cf.n0() + 0.5) * id);
    }
    case ChannelClass::D: {
      const double k = cf.kappa();
      return validate_channel(k * sz, (k * k + 1.0) * (cf.n0() + 0.5) * id);
    }
  }
  throw Error(Errc::InvalidParameters, "unknown canonical class");
}

std::vector<ChannelClass> class_compose(ChannelClass first,
                                        ChannelClass second) {
  using C = ChannelClass;
  // Row = class applied second, column = class applied first.
  // 0..5 = A1, A2, B1, B2, C, D; pairs list the possible outcomes.
  static const std::vector<ChannelClass> table[6][6] = {
      /* A1 */ {{C::A1}, {C::A1}, {C::A1}, {C::A1}, {C::A1}, {C::A1}},
      /* A2 */ {{C::A1}, {C::A2}, {C::A2}, {C::A2}, {C::A2}, {C::A2}},
      /* B1 */ {{C::A1}, {C::A2}, {C::B1}, {C::B1, C::B2}, {C::C}, {C::D}},
      /* B2 */ {{C::A1}, {C::A2}, {C::B1, C::B2}, {C::B2}, {C::C}, {C::D}},
      /* C  */ {{C::A1}, {C::A2}, {C::C}, {C::C}, {C::B2, C::C}, {C::D}},
      /* D  */ {{C::A1}, {C::A2}, {C::D}, {C::D}, {C::D}, {C::C}},
  };
  return table[static_cast<int>(second)][static_cast<int>(first)];
}

}  // namespace gck
