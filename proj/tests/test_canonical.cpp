#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"

using namespace gck;
using testsupport::Rng;

TEST_CASE("invariants: identity, rank-one K, conjugation") {
  const ChannelInvariants id =
      invariants(validate_channel(Mat2::identity(), Mat2::zero()));
  CHECK(id.det_k == 1.0);
  CHECK(id.rank_k == 2);
  CHECK(id.det_alpha == 0.0);
  CHECK(id.rank_alpha == 0);

  const ChannelInvariants a2 =
      invariants(validate_channel(Mat2::diag(1.0, 0.0), Mat2::identity()));
  CHECK(a2.det_k == 0.0);
  CHECK(a2.rank_k == 1);

  const ChannelInvariants d =
      invariants(validate_channel(Mat2::pauli_z(), Mat2::identity()));
  CHECK(d.det_k == -1.0);
}

TEST_CASE("invariants: rank-one alpha away from det K = 1 is inconsistent") {
  // Valid under the CP tolerance band, but the rank/determinant combination
  // is impossible for an exact channel.
  const double k = 1.0 + 2e-5;
  const GaussianChannel ch =
      validate_channel(Mat2::diag(k, k), Mat2::diag(1.0, 1e-10));
  CHECK_THROWS_AS((void)invariants(ch), Error);
  try {
    (void)invariants(ch);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentInvariants);
  }
}

TEST_CASE("classify: worked examples") {
  const CanonicalForm id = classify(validate_channel(Mat2::identity(), Mat2::zero()));
  CHECK(id.cls() == ChannelClass::B2);
  CHECK(id.n0() == 0.0);

  const CanonicalForm c = classify(
      validate_channel(2.0 * Mat2::identity(), 4.5 * Mat2::identity()));
  CHECK(c.cls() == ChannelClass::C);
  CHECK(c.kappa() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(c.n0() == doctest::Approx(1.0).epsilon(1e-14));

  const CanonicalForm d =
      classify(validate_channel(Mat2::pauli_z(), Mat2::identity()));
  CHECK(d.cls() == ChannelClass::D);
  CHECK(d.kappa() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.n0() == doctest::Approx(0.0));

  const CanonicalForm a2 = classify(
      validate_channel(Mat2::diag(1.0, 0.0), 1.5 * Mat2::identity()));
  CHECK(a2.cls() == ChannelClass::A2);
  CHECK(a2.n0() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("classify: CP-marginal input with negative recovered N0 is rejected") {
  // Just inside the CP tolerance band but with noise strictly below the
  // class-C floor: N0 would be about -1e-6.
  const double kappa = 1.01;
  const double floor = (kappa * kappa - 1.0) / 2.0;
  const double c = std::sqrt(floor * floor - 5e-10);
  const GaussianChannel ch =
      validate_channel(kappa * Mat2::identity(), c * Mat2::identity());
  CHECK_THROWS_AS((void)classify(ch), Error);
  try {
    (void)classify(ch);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidParameters);
  }
}

TEST_CASE("to_channel: canonical matrices") {
  const GaussianChannel b1 = to_channel(CanonicalForm::b1());
  CHECK(max_abs_diff(b1.K(), Mat2::identity()) == 0.0);
  CHECK(max_abs_diff(b1.alpha(), Mat2::diag(0.0, 0.5)) == 0.0);

  const GaussianChannel a1 = to_channel(CanonicalForm::a1(0.0));
  CHECK(max_abs_diff(a1.K(), Mat2::zero()) == 0.0);
  CHECK(max_abs_diff(a1.alpha(), 0.5 * Mat2::identity()) == 0.0);

  const GaussianChannel d = to_channel(CanonicalForm::d(1.0, 0.0));
  CHECK(max_abs_diff(d.K(), Mat2::pauli_z()) == 0.0);
  CHECK(max_abs_diff(d.alpha(), Mat2::identity()) == 0.0);
}

TEST_CASE("canonical form factories validate parameters") {
  CHECK_THROWS_AS(CanonicalForm::c(1.0, 0.5), Error);
  CHECK_THROWS_AS(CanonicalForm::c(-2.0, 0.5), Error);
  CHECK_THROWS_AS(CanonicalForm::d(2.0, -0.5), Error);
  CHECK(CanonicalForm::a1(-1e-10).n0() == 0.0);  // tiny negatives clamp
}

TEST_CASE("round trip over the parameter grid") {
  for (ChannelClass cls : testsupport::kAllClasses) {
    for (const CanonicalForm& cf : testsupport::grid_forms(cls)) {
      const CanonicalForm back = classify(to_channel(cf));
      CHECK(back.cls() == cf.cls());
      CHECK(testsupport::form_distance(back, cf) < 1e-9);
    }
  }
}

TEST_CASE("composition class table: worked cells") {
  const auto single = [](ChannelClass c) {
    return std::vector<ChannelClass>{c};
  };
  CHECK(class_compose(ChannelClass::B1, ChannelClass::A2) ==
        single(ChannelClass::A2));
  CHECK(class_compose(ChannelClass::D, ChannelClass::D) ==
        single(ChannelClass::C));
  CHECK(class_compose(ChannelClass::C, ChannelClass::C) ==
        std::vector<ChannelClass>{ChannelClass::B2, ChannelClass::C});
  CHECK(class_compose(ChannelClass::B2, ChannelClass::B1) ==
        (std::vector<ChannelClass>{ChannelClass::B1, ChannelClass::B2}));
  CHECK(class_compose(ChannelClass::A1, ChannelClass::D) ==
        single(ChannelClass::A1));
  CHECK(class_compose(ChannelClass::C, ChannelClass::B1) ==
        single(ChannelClass::C));
}

TEST_CASE("property: composed channels classify inside the table") {
  Rng rng(21);
  for (ChannelClass first : testsupport::kAllClasses) {
    for (ChannelClass second : testsupport::kAllClasses) {
      const auto expected = class_compose(first, second);
      for (int i = 0; i < 10000; ++i) {
        const CanonicalForm f1 = testsupport::random_form(first, rng);
        const CanonicalForm f2 = testsupport::random_form(second, rng);
        // The table describes generic compositions; an attenuator/amplifier
        // pair tuned to det K = 1 exactly collapses to the B classes, so
        // avoid that measure-zero coincidence for the D∘D cell.
        if (first == ChannelClass::D && second == ChannelClass::D &&
            std::abs(f1.kappa() * f2.kappa() - 1.0) < 1e-6) {
          continue;
        }
        const ChannelClass got =
            classify(compose(to_channel(f1), to_channel(f2))).cls();
        const bool ok =
            std::find(expected.begin(), expected.end(), got) != expected.end();
        if (!ok) {
          CAPTURE(to_string(first));
          CAPTURE(to_string(second));
          CAPTURE(to_string(got));
          REQUIRE(ok);
        }
      }
    }
  }
}

TEST_CASE("property: unit channels do not move the classification") {
  Rng rng(22);
  for (int i = 0; i < 2000; ++i) {
    const GaussianChannel ch = testsupport::random_channel(rng);
    const Classification base = classify_full(ch);
    const GaussianChannel pre = compose(testsupport::random_unit_channel(rng), ch);
    const GaussianChannel post = compose(ch, testsupport::random_unit_channel(rng));
    for (const GaussianChannel* v : {&pre, &post}) {
      const Classification moved = classify_full(*v);
      CHECK(moved.form.cls() == base.form.cls());
      CHECK(moved.invariants.rank_k == base.invariants.rank_k);
      CHECK(moved.invariants.rank_alpha == base.invariants.rank_alpha);
      CHECK(std::abs(moved.invariants.det_k - base.invariants.det_k) <= 1e-12);
      CHECK(std::abs(moved.invariants.det_alpha - base.invariants.det_alpha) <=
            1e-10 * std::max(1.0, std::abs(base.invariants.det_alpha)));
      CHECK(testsupport::form_distance(moved.form, base.form) <= 1e-7);
    }
  }
}

TEST_CASE("the near-identity family converges to the additive noise channel") {
  for (double n0 : {0.5, 1.0, 2.0}) {
    const GaussianChannel target = to_channel(CanonicalForm::b2(n0));
    for (double kappa : {1.0 + 1e-6, 1.0 - 1e-6}) {
      const GaussianChannel member = validate_channel(
          kappa * Mat2::identity(), n0 * Mat2::identity());
      CHECK(classify(member).cls() == ChannelClass::C);
      CHECK(channel_distance(member, target) < 1e-5);
    }
  }
}

TEST_CASE("near-boundary flag covers the (eps, 2 eps) annulus") {
  const double eps = tolerance();
  const auto flagged = [](double det_target) {
    const double k = std::sqrt(det_target);
    return classify_full(validate_channel(k * Mat2::identity(),
                                          2.0 * Mat2::identity()))
        .near_boundary;
  };
  CHECK(flagged(1.0 + 1.5 * eps));
  CHECK_FALSE(flagged(1.0 + 0.5 * eps));  // inside the band: treated as 1
  CHECK_FALSE(flagged(1.0 + 3.0 * eps));
  CHECK(flagged(1.5 * eps));
  CHECK_FALSE(flagged(2.0));
}
