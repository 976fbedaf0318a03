#pragma once

#include <stdexcept>
#include <string>

namespace gck {

// Failure categories carried by Error so callers can branch (and the CLI can
// map them to exit codes) without parsing messages.
enum class Errc {
  NotSymmetric,
  NotPositiveSemidefinite,
  CPViolated,
  UncertaintyViolated,
  InconsistentInvariants,
  InvalidParameters,
  NoSingleModeDilation,
  SingularAtUnity,
  NotInRegion,
  MissingComplement,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, double residual = 0.0)
      : std::runtime_error(what), code_(code), residual_(residual) {}

  Errc code() const noexcept { return code_; }
  // Magnitude of the violated condition, when meaningful (e.g. the CP gap).
  double residual() const noexcept { return residual_; }

 private:
  Errc code_;
  double residual_;
};

}  // namespace gck
