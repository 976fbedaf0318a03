// gck -- analysis toolbox for one-mode bosonic Gaussian channels.
//
// Exit codes: 0 success, 2 unreadable/malformed spec, 3 invalid channel,
// 4 verification failure, 5 unsupported operation (e.g. a single-mode
// dilation of a B2 channel).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spec_io.hpp"

namespace {

using namespace gck;
using cli::fmt;

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kInvalidChannel = 3;
constexpr int kVerifyFailed = 4;
constexpr int kUnsupported = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::NoSingleModeDilation:
    case Errc::SingularAtUnity:
      return kUnsupported;
    default:
      return kInvalidChannel;
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_classification(const Classification& cl) {
  std::cout << "class: " << to_string(cl.form.cls()) << "\n";
  if (cl.form.has_kappa()) std::cout << "kappa: " << fmt(cl.form.kappa()) << "\n";
  if (cl.form.has_n0()) std::cout << "N0: " << fmt(cl.form.n0()) << "\n";
  std::cout << "det[K]: " << fmt(cl.invariants.det_k) << "\n"
            << "rank[K]: " << cl.invariants.rank_k << "\n"
            << "det[alpha]: " << fmt(cl.invariants.det_alpha) << "\n"
            << "rank[alpha]: " << cl.invariants.rank_alpha << "\n"
            << "near-boundary: " << yesno(cl.near_boundary) << "\n";
  if (cl.form.cls() == ChannelClass::B2 && cl.form.n0() <= tolerance()) {
    std::cout << "note: identity channel\n";
  }
}

void print_channel(const GaussianChannel& ch) {
  std::cout << "K: " << fmt(ch.K()) << "\n"
            << "alpha: " << fmt(ch.alpha()) << "\n"
            << "m: [" << fmt(ch.m().x) << ", " << fmt(ch.m().y) << "]\n";
}

int cmd_classify(const std::string& path, bool json) {
  const Classification cl = classify_full(cli::load_channel(path));
  if (json) {
    std::cout << cli::to_json(cl).dump(2) << "\n";
  } else {
    print_classification(cl);
  }
  return kOk;
}

int cmd_compose(const std::string& first_path, const std::string& second_path,
                bool json) {
  const GaussianChannel first = cli::load_channel(first_path);
  const GaussianChannel second = cli::load_channel(second_path);
  const GaussianChannel out = compose(first, second);
  const Classification cl = classify_full(out);
  if (json) {
    nlohmann::json j = cli::to_json(out);
    j["classification"] = cli::to_json(cl);
    std::cout << j.dump(2) << "\n";
  } else {
    print_channel(out);
    print_classification(cl);
  }
  return kOk;
}

int cmd_complement(const std::string& path, bool json) {
  const CanonicalForm cf = classify(cli::load_channel(path));
  const GaussianChannel comp = weak_complement(cf);
  const Classification cl = classify_full(comp);
  // A rank-one complement realizes B1 with a noise scale other than the
  // canonical 1/2; report that scale.
  const bool b1 = cl.form.cls() == ChannelClass::B1;
  const double nc = b1 ? sym_eigenvalues(comp.alpha())[1] : 0.0;
  if (json) {
    nlohmann::json j = cli::to_json(comp);
    j["input_class"] = cli::to_json(cf);
    j["classification"] = cli::to_json(cl);
    if (b1) j["N_c"] = nc;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input class: " << to_string(cf.cls()) << "\n";
    print_channel(comp);
    print_classification(cl);
    if (b1) std::cout << "N_c: " << fmt(nc) << "\n";
  }
  return kOk;
}

int cmd_dilation(const std::string& path, bool json) {
  const CanonicalForm cf = classify(cli::load_channel(path));
  const SymplecticDilation dil = build_dilation(cf);
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
      rows.push_back({dil.M()(r, 0), dil.M()(r, 1), dil.M()(r, 2),
                      dil.M()(r, 3)});
    }
    std::cout << nlohmann::json{{"input_class", cli::to_json(cf)},
                                {"M", rows},
                                {"N", dil.photon_number()},
                                {"env_pure", dil.env_pure()},
                                {"symplectic_defect",
                                 symplectic_defect(dil.M())}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "input class: " << to_string(cf.cls()) << "\n";
    std::cout << "M:\n";
    for (int r = 0; r < 4; ++r) {
      std::cout << "  [" << fmt(dil.M()(r, 0)) << ", " << fmt(dil.M()(r, 1))
                << ", " << fmt(dil.M()(r, 2)) << ", " << fmt(dil.M()(r, 3))
                << "]\n";
    }
    std::cout << "N: " << fmt(dil.photon_number()) << "\n"
              << "env-pure: " << yesno(dil.env_pure()) << "\n"
              << "symplectic defect: " << fmt(symplectic_defect(dil.M()))
              << "\n";
  }
  return kOk;
}

int cmd_degradability(const std::string& path, bool json) {
  const CanonicalForm cf = classify(cli::load_channel(path));
  const DegradabilityReport rep = analyze(cf);
  if (json) {
    nlohmann::json j{{"input_class", cli::to_json(cf)},
                     {"anti_degradable", rep.anti_degradable},
                     {"weakly_degradable", rep.weakly_degradable},
                     {"degradable", rep.degradable},
                     {"direction", to_string(rep.direction)},
                     {"verification_residual", rep.verification_residual},
                     {"null_capacity_by_antidegradability",
                      rep.null_capacity_by_antidegradability},
                     {"near_boundary", rep.near_boundary},
                     {"degenerate", rep.degenerate}};
    if (rep.connecting_channel) {
      j["connecting_channel"] = cli::to_json(*rep.connecting_channel);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "class: " << to_string(cf.cls());
    if (cf.has_kappa()) std::cout << " (kappa = " << fmt(cf.kappa()) << ")";
    if (cf.has_n0()) std::cout << " (N0 = " << fmt(cf.n0()) << ")";
    std::cout << "\n"
              << "anti-degradable: " << yesno(rep.anti_degradable) << "\n"
              << "weakly-degradable: " << yesno(rep.weakly_degradable) << "\n"
              << "degradable: " << yesno(rep.degradable) << "\n"
              << "direction: " << to_string(rep.direction) << "\n";
    if (rep.connecting_channel) {
      std::cout << "connecting K: " << fmt(rep.connecting_channel->K()) << "\n"
                << "connecting alpha: " << fmt(rep.connecting_channel->alpha())
                << "\n"
                << "verification residual: " << fmt(rep.verification_residual)
                << "\n";
    } else {
      std::cout << "connecting channel: none\n";
    }
    std::cout << "null capacity by anti-degradability: "
              << yesno(rep.null_capacity_by_antidegradability) << "\n"
              << "near-boundary: " << yesno(rep.near_boundary) << "\n";
    if (rep.degenerate) std::cout << "note: degenerate (identity channel)\n";
  }
  return kOk;
}

int cmd_region_scan(double kappa_min, double kappa_max, double n0_min,
                    double n0_max, std::size_t steps, const std::string& out) {
  const RegionScan scan = region_scan(kappa_min, kappa_max, n0_min, n0_max,
                                      steps);
  if (out.empty() || out == "-") {
    write_region_csv(scan, std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw cli::SpecError("cannot open " + out + " for writing");
    write_region_csv(scan, os);
  }
  return kOk;
}

int cmd_verify(const std::string& path, std::size_t states,
               std::uint64_t seed) {
  constexpr double kThreshold = 1e-9;
  const GaussianChannel input = cli::load_channel(path);
  const CanonicalForm cf = classify(input);
  std::cout << "class: " << to_string(cf.cls()) << "\n";

  double worst = 0.0;
  const auto record = [&worst](const char* label, double value) {
    std::cout << label << ": " << fmt(value) << "\n";
    worst = std::max(worst, value);
  };

  // Canonical round trip.
  {
    const CanonicalForm again = classify(to_channel(cf));
    double dev = (again.cls() == cf.cls()) ? 0.0 : 1.0;
    if (cf.has_kappa()) dev = std::max(dev, std::abs(again.kappa() - cf.kappa()));
    if (cf.has_n0()) dev = std::max(dev, std::abs(again.n0() - cf.n0()));
    record("round-trip residual", dev);
  }

  if (cf.cls() != ChannelClass::B2) {
    const SymplecticDilation dil = build_dilation(cf);
    record("symplectic defect", symplectic_defect(dil.M()));
    record("block determinant defect",
           std::abs(det(dil.m11()) + det(dil.m12()) - 1.0));

    const GaussianChannel canonical = to_channel(cf);
    const GaussianChannel complement = weak_complement(cf);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> stretch(0.5, 3.0);
    std::uniform_real_distribution<double> shift(-2.0, 2.0);
    double dev = 0.0;
    for (std::size_t i = 0; i < states; ++i) {
      const double th = angle(rng);
      const Mat2 rot(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
      const Mat2 gamma =
          rot * Mat2::diag(stretch(rng), stretch(rng)) * transpose(rot);
      const GaussianState s =
          make_state(Vec2(shift(rng), shift(rng)), gamma);
      const auto [out_a, out_b] = joint_evolve(dil, s);
      const GaussianState want_a = apply(canonical, s);
      const GaussianState want_b = apply(complement, s);
      dev = std::max(dev, max_abs_diff(out_a.gamma(), want_a.gamma()));
      dev = std::max(dev, max_abs_diff(out_a.mean(), want_a.mean()));
      dev = std::max(dev, max_abs_diff(out_b.gamma(), want_b.gamma()));
      dev = std::max(dev, max_abs_diff(out_b.mean(), want_b.mean()));
    }
    record("joint-evolution oracle residual", dev);
  } else {
    std::cout << "joint-evolution oracle: skipped (no single-mode "
                 "representation for B2)\n";
  }

  const DegradabilityReport rep = analyze(cf);
  if (rep.connecting_channel) {
    record("connection residual", verify_connection(rep));
  } else {
    std::cout << "connection residual: skipped (no connecting channel)\n";
  }

  if (worst > kThreshold) {
    std::cout << "FAIL: residual " << fmt(worst) << " exceeds "
              << fmt(kThreshold) << "\n";
    return kVerifyFailed;
  }
  std::cout << "OK: all residuals within " << fmt(kThreshold) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gck: classify, compose, dilate and analyze one-mode bosonic Gaussian "
      "channels.\nSet GCK_TOLERANCE to override the default tolerance 1e-9 "
      "(affects classification bands)."};
  app.require_subcommand(1);

  std::string spec_a, spec_b, out;
  bool json = false;
  double kappa_min = 0.05, kappa_max = 1.7320508075688772;  // kappa^2 in [., 3]
  double n0_min = 0.0, n0_max = 3.0;
  std::size_t steps = 61, states = 200;
  std::uint64_t seed = 12345;

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "canonical class and invariants");
  classify_cmd->add_option("spec", spec_a, "channel spec (JSON)")->required();
  classify_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* compose_cmd = app.add_subcommand(
      "compose", "compose two channels (first argument acts first)");
  compose_cmd->add_option("first", spec_a, "channel applied first")->required();
  compose_cmd->add_option("second", spec_b, "channel applied second")
      ->required();
  compose_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* complement_cmd = app.add_subcommand(
      "complement", "weakly complementary channel of the canonical form");
  complement_cmd->add_option("spec", spec_a, "channel spec (JSON)")->required();
  complement_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* dilation_cmd = app.add_subcommand(
      "dilation", "single-mode physical representation (coupling matrix M, N)");
  dilation_cmd->add_option("spec", spec_a, "channel spec (JSON)")->required();
  dilation_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* degradability_cmd = app.add_subcommand(
      "degradability", "weak-/anti-degradability report with witnesses");
  degradability_cmd->add_option("spec", spec_a, "channel spec (JSON)")
      ->required();
  degradability_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* region_cmd = app.add_subcommand(
      "region-scan", "null-quantum-capacity verdict grid as CSV");
  region_cmd->add_option("--kappa-min", kappa_min, "grid minimum kappa");
  region_cmd->add_option("--kappa-max", kappa_max, "grid maximum kappa");
  region_cmd->add_option("--n0-min", n0_min, "grid minimum N0");
  region_cmd->add_option("--n0-max", n0_max, "grid maximum N0");
  region_cmd->add_option("--steps", steps, "grid points per axis");
  region_cmd->add_option("--out", out, "output file (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check the analytic maps against the covariance oracle");
  verify_cmd->add_option("spec", spec_a, "channel spec (JSON)")->required();
  verify_cmd->add_option("--states", states, "random states for the oracle");
  verify_cmd->add_option("--seed", seed, "RNG seed for the random states");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify_cmd)) return cmd_classify(spec_a, json);
    if (app.got_subcommand(compose_cmd))
      return cmd_compose(spec_a, spec_b, json);
    if (app.got_subcommand(complement_cmd))
      return cmd_complement(spec_a, json);
    if (app.got_subcommand(dilation_cmd)) return cmd_dilation(spec_a, json);
    if (app.got_subcommand(degradability_cmd))
      return cmd_degradability(spec_a, json);
    if (app.got_subcommand(region_cmd))
      return cmd_region_scan(kappa_min, kappa_max, n0_min, n0_max, steps, out);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(spec_a, states, seed);
  } catch (const cli::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
