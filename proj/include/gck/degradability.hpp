#pragma once

#include <optional>

#include "gck/dilation.hpp"

namespace gck {

enum class Direction { weak, anti, both, neither };

const char* to_string(Direction d);

// Verdicts for one canonical form together with the explicit connecting
// channel witnessing them. With Phi~ the weak complement, the two defining
// identities are
//
//   weak:  Psi  ∘ Phi  = Phi~          anti:  Psi~ ∘ Phi~ = Phi .
//
// Anti-degradability holds iff det K_can <= 1/2 (class B2 excluded); weak
// degradability iff det K_can >= 1/2. At the shared boundary det K = 1/2 both
// hold: direction is `both` and the anti-side witness is reported.
struct DegradabilityReport {
  CanonicalForm input_class;
  bool anti_degradable = false;
  bool weakly_degradable = false;
  // Degradable in the strict (pure-environment) sense: B1 always, class C
  // with N0 = 0 on the weakly degradable side, and the identity channel.
  bool degradable = false;
  std::optional<GaussianChannel> connecting_channel;
  Direction direction = Direction::neither;
  double verification_residual = 0.0;
  // Mirrors anti_degradable: anti-degradable maps cannot carry quantum
  // information. The composition-based extension lives in the capacity
  // module.
  bool null_capacity_by_antidegradability = false;
  bool near_boundary = false;  // det K_can within 2 eps of 1/2
  bool degenerate = false;     // identity channel (B2 with N0 = 0)
};

DegradabilityReport analyze(const CanonicalForm& cf);

// Recomputes the defining identity for the report's direction and returns the
// max entrywise deviation over (K, alpha, m). Throws Error(MissingComplement)
// if the report carries no connecting channel.
double verify_connection(const DegradabilityReport& report);

}  // namespace gck
