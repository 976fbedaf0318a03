#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gck/gck.hpp"

namespace gck::cli {

// Malformed file or schema violation; mapped to exit code 2.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A channel spec is a JSON object in exactly one of two shapes:
//
//   {"K": [[..,..],[..,..]], "alpha": [[..,..],[..,..]], "m": [..,..]}
//     (row-major matrices; "m" optional, default zero)
//
//   {"canonical": {"class": "C", "kappa": 2.0, "N0": 1.0}}
//     (kappa required for C/D; N0 defaults to 0; B1 takes no parameters)
//
// Unknown keys are ignored, so reports emitted by the CLI can be fed back in.
gck::GaussianChannel channel_from_json(const nlohmann::json& j);

gck::GaussianChannel load_channel(const std::string& path);

nlohmann::json to_json(const gck::Mat2& m);
nlohmann::json to_json(const gck::Vec2& v);
nlohmann::json to_json(const gck::CanonicalForm& cf);
nlohmann::json to_json(const gck::GaussianChannel& ch);
nlohmann::json to_json(const gck::Classification& cl);

// Fixed 12-significant-digit float formatting for text reports.
std::string fmt(double v);
std::string fmt(const gck::Mat2& m);

}  // namespace gck::cli
