#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gck/channel.hpp"

namespace gck {

enum class ChannelClass { A1, A2, B1, B2, C, D };

const char* to_string(ChannelClass c);
std::optional<ChannelClass> class_from_string(std::string_view s);

// Canonical representative of a channel's unitary-equivalence class:
//
//   A1:  K = 0               alpha = (N0 + 1/2) I
//   A2:  K = (I + sz)/2      alpha = (N0 + 1/2) I
//   B1:  K = I               alpha = (I - sz)/4
//   B2:  K = I               alpha = N0 I
//   C:   K = kappa I         alpha = |kappa^2 - 1| (N0 + 1/2) I   (kappa != 1)
//   D:   K = kappa sz        alpha = (kappa^2 + 1) (N0 + 1/2) I
//
// with sz = diag(1, -1). B1 carries no free parameter: the scale of its
// rank-one noise block is pinned to 1/2 and not exposed.
class CanonicalForm {
 public:
  // Identity channel (B2 with N0 = 0).
  CanonicalForm() : cls_(ChannelClass::B2) {}

  static CanonicalForm a1(double n0);
  static CanonicalForm a2(double n0);
  static CanonicalForm b1();
  static CanonicalForm b2(double n0);
  static CanonicalForm c(double kappa, double n0);
  static CanonicalForm d(double kappa, double n0);

  ChannelClass cls() const { return cls_; }
  double kappa() const { return kappa_; }  // meaningful for C, D
  double n0() const { return n0_; }        // meaningful for all but B1
  bool has_kappa() const {
    return cls_ == ChannelClass::C || cls_ == ChannelClass::D;
  }
  bool has_n0() const { return cls_ != ChannelClass::B1; }

 private:
  CanonicalForm(ChannelClass cls, double kappa, double n0)
      : cls_(cls), kappa_(kappa), n0_(n0) {}

  ChannelClass cls_;
  double kappa_ = 0.0;
  double n0_ = 0.0;
};

struct ChannelInvariants {
  double det_k = 0.0;
  int rank_k = 0;
  double det_alpha = 0.0;  // clamped to >= 0
  int rank_alpha = 0;
};

struct Classification {
  CanonicalForm form;
  ChannelInvariants invariants;
  // det K within (eps, 2 eps) of one of the class boundaries 0 or 1.
  bool near_boundary = false;
};

// Determinants in closed form; ranks from singular values with the
// scale-aware threshold sigma > eps * max(1, sigma_max). Throws
// Error(InconsistentInvariants) if rank(alpha) = 1 while det K is not 1
// within tolerance (rank-one alpha is only compatible with det K = 1).
ChannelInvariants invariants(const GaussianChannel& ch);

// Class from (det K, rank K, rank alpha) with tolerance bands |det K| <= eps
// and |det K - 1| <= eps treated as exactly 0 and 1; parameters recovered
// from the determinants. Recovered N0 within eps of zero is clamped to zero;
// N0 below -eps throws Error(InvalidParameters).
Classification classify_full(const GaussianChannel& ch);
CanonicalForm classify(const GaussianChannel& ch);

// Exact canonical matrices for the form (m = 0).
GaussianChannel to_channel(const CanonicalForm& cf);

// Possible classes of second ∘ first given only the operand classes.
// Singleton except for the B1/B2 mixtures {B1, B2} and C∘C = {B2, C}.
std::vector<ChannelClass> class_compose(ChannelClass first, ChannelClass second);

}  // namespace gck
