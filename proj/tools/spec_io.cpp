#include "spec_io.hpp"

#include <cstdio>
#include <fstream>

namespace gck::cli {

namespace {

gck::Mat2 mat_from_json(const nlohmann::json& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw SpecError(std::string(key) + " must be a 2x2 row-major array");
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!j[r][c].is_number())
        throw SpecError(std::string(key) + " entries must be numbers");
  return gck::Mat2(j[0][0].get<double>(), j[0][1].get<double>(),
                   j[1][0].get<double>(), j[1][1].get<double>());
}

gck::Vec2 vec_from_json(const nlohmann::json& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError(std::string(key) + " must be a 2-element number array");
  }
  return gck::Vec2(j[0].get<double>(), j[1].get<double>());
}

double number_field(const nlohmann::json& j, const char* key, double fallback,
                    bool required) {
  if (!j.contains(key)) {
    if (required) throw SpecError(std::string("missing field ") + key);
    return fallback;
  }
  if (!j[key].is_number())
    throw SpecError(std::string(key) + " must be a number");
  return j[key].get<double>();
}

gck::CanonicalForm form_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("class") || !j["class"].is_string()) {
    throw SpecError("canonical block needs a string field \"class\"");
  }
  const auto cls = gck::class_from_string(j["class"].get<std::string>());
  if (!cls) {
    throw SpecError("unknown class \"" + j["class"].get<std::string>() +
                    "\" (expected A1, A2, B1, B2, C or D)");
  }
  const double n0 = number_field(j, "N0", 0.0, false);
  switch (*cls) {
    case gck::ChannelClass::A1: return gck::CanonicalForm::a1(n0);
    case gck::ChannelClass::A2: return gck::CanonicalForm::a2(n0);
    case gck::ChannelClass::B1: return gck::CanonicalForm::b1();
    case gck::ChannelClass::B2: return gck::CanonicalForm::b2(n0);
    case gck::ChannelClass::C:
      return gck::CanonicalForm::c(number_field(j, "kappa", 0.0, true), n0);
    case gck::ChannelClass::D:
      return gck::CanonicalForm::d(number_field(j, "kappa", 0.0, true), n0);
  }
  throw SpecError("unknown class");
}

}  // namespace

gck::GaussianChannel channel_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("channel spec must be a JSON object");
  const bool raw = j.contains("K") || j.contains("alpha") || j.contains("m");
  const bool canonical = j.contains("canonical");
  if (raw == canonical) {
    throw SpecError(
        "spec must contain exactly one of raw matrices (K, alpha[, m]) or a "
        "canonical block");
  }
  if (canonical) return gck::to_channel(form_from_json(j["canonical"]));

  if (!j.contains("K")) throw SpecError("missing field K");
  if (!j.contains("alpha")) throw SpecError("missing field alpha");
  const gck::Mat2 k = mat_from_json(j["K"], "K");
  const gck::Mat2 alpha = mat_from_json(j["alpha"], "alpha");
  const gck::Vec2 m =
      j.contains("m") ? vec_from_json(j["m"], "m") : gck::Vec2();
  return gck::validate_channel(k, alpha, m);
}

gck::GaussianChannel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(path + ": " + e.what());
  }
  return channel_from_json(j);
}

nlohmann::json to_json(const gck::Mat2& m) {
  return nlohmann::json::array(
      {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}});
}

nlohmann::json to_json(const gck::Vec2& v) {
  return nlohmann::json::array({v.x, v.y});
}

nlohmann::json to_json(const gck::CanonicalForm& cf) {
  nlohmann::json j{{"class", gck::to_string(cf.cls())}};
  if (cf.has_kappa()) j["kappa"] = cf.kappa();
  if (cf.has_n0()) j["N0"] = cf.n0();
  return j;
}

nlohmann::json to_json(const gck::GaussianChannel& ch) {
  return nlohmann::json{
      {"K", to_json(ch.K())}, {"alpha", to_json(ch.alpha())},
      {"m", to_json(ch.m())}};
}

nlohmann::json to_json(const gck::Classification& cl) {
  return nlohmann::json{
      {"class", gck::to_string(cl.form.cls())},
      {"canonical", to_json(cl.form)},
      {"invariants",
       {{"det_K", cl.invariants.det_k},
        {"rank_K", cl.invariants.rank_k},
        {"det_alpha", cl.invariants.det_alpha},
        {"rank_alpha", cl.invariants.rank_alpha}}},
      {"near_boundary", cl.near_boundary}};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const gck::Mat2& m) {
  return "[[" + fmt(m(0, 0)) + ", " + fmt(m(0, 1)) + "], [" + fmt(m(1, 0)) +
         ", " + fmt(m(1, 1)) + "]]";
}

}  // namespace gck::cli
