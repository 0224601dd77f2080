#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gfp/backlund.hpp"
#include "gfp/errors.hpp"
#include "gfp/exact.hpp"
#include "gfp/verify.hpp"
#include "helpers.hpp"

using namespace gfp;
using namespace gfp::backlund;
using doctest::Approx;

namespace {

exact::TravellingWave reference_kink() {
  return {exact::WaveFamily::tanh_kink, 1.0, 0.0, 1.0 / 3.0};
}

KinkConfig bt_demo_config() {
  return KinkConfig::generic(
      1.0, {{-1.0, -60.0, 0.0}, {1.5, -20.0, 0.0}, {3.0, -30.0, 0.0}});
}

SeedSolution constant_seed(double a) {
  return make_seed(
      [a](double, double) {
        FieldSample s;
        s.u = a;
        return s;
      },
      SeedProvenance::custom, 1.0, {{0.0, 0.0}, {1.0, -1.0}});
}

}  // namespace

TEST_CASE("one-parameter transform at the kink centre") {
  SeedSolution seed = seed_from_travelling(reference_kink());
  // u(0,0) = 1, uX(0,0) = 4, so u + uX/(1 + u) = 3.
  CHECK(bt_one(seed, 1.0, 0.0, 0.0) == Approx(3.0));
}

TEST_CASE("constant seeds are fixed points") {
  SeedSolution seed = constant_seed(0.7);
  for (double l : {-2.0, 0.5, 4.0})
    CHECK(bt_one(seed, l, 0.3, -1.0) == Approx(0.7));
  CHECK(bt_two(seed, 0.0, 0.0, 0.3, -1.0) == Approx(0.7));
  CHECK_THROWS_AS(bt_one(seed, -0.7, 0.0, 0.0), BtPole);
}

TEST_CASE("transformed multikink satisfies the generic equation") {
  KinkConfig cfg = bt_demo_config();
  const double lambda = 1.1;
  auto result = bt_one_config(cfg, lambda);
  REQUIRE(std::holds_alternative<KinkConfig>(result));
  const KinkConfig& out = std::get<KinkConfig>(result);

  GridSpec grid{-20.0, 30.0, 60, -10.0, 30.0, 60};
  verify::ResidualReport rep = verify::scan_residual(
      [&](double X, double T) { return exact::eval_derivatives(out, X, T); },
      "generic", out.eta(), grid);
  CHECK(rep.max_abs < 1e-8);

  // Pointwise route agrees with the config route.
  SeedSolution seed = seed_from_config(cfg);
  for (double X : {-6.0, 0.0, 4.5, 12.0})
    for (double T : {-5.0, 2.0, 9.0})
      CHECK(bt_one(seed, lambda, X, T) ==
            Approx(exact::eval_multikink(out, X, T).u).epsilon(1e-10));
}

TEST_CASE("config transform absorbs positive coefficients into offsets") {
  KinkConfig cfg = bt_demo_config();
  auto result = bt_one_config(cfg, 1.1);
  const KinkConfig& out = std::get<KinkConfig>(result);
  REQUIRE(out.size() == 3);
  // delta_j += eta ln(k_j/eta + lambda)
  CHECK(out.term(0).delta == Approx(-60.0 + std::log(0.1)));
  CHECK(out.term(1).delta == Approx(-20.0 + std::log(2.6)));
  CHECK(out.term(2).delta == Approx(-30.0 + std::log(4.1)));
}

TEST_CASE("lambda = 0 reproduces the derivative-potential solution") {
  // All-positive wavenumbers stay a standard config.
  KinkConfig pos = KinkConfig::generic(1.0, {{1.0, 0.0, 0.0}, {2.0, 0.3, 0.0}});
  auto res = bt_one_config(pos, 0.0);
  REQUIRE(std::holds_alternative<KinkConfig>(res));
  // Mixed signs leave a signed sum, the ratio of phi_XX to phi_X.
  KinkConfig mixed = KinkConfig::generic(1.0, {{-1.0, 0.0, 0.0}, {3.0, 0.0, 0.0}});
  auto sres = bt_one_config(mixed, 0.0);
  REQUIRE(std::holds_alternative<SignedKinkSum>(sres));
  const SignedKinkSum& sum = std::get<SignedKinkSum>(sres);
  // d/dX ln(phi_X) = (sum k^2 e^theta) / (sum k e^theta).
  auto expected = [&](double X, double T) {
    double t1 = std::exp(-X + T), t2 = std::exp(3 * X - T / 3);
    return (t1 + 9.0 * t2) / (-t1 + 3.0 * t2);
  };
  for (double X : {0.4, 1.0, 2.0})
    CHECK(sum.value(X, 0.2) == Approx(expected(X, 0.2)).epsilon(1e-12));

  SeedSolution seed = seed_from_config(mixed);
  for (double X : {0.6, 1.5})
    CHECK(bt_one(seed, 0.0, X, 0.0) == Approx(sum.value(X, 0.0)).epsilon(1e-10));
}

TEST_CASE("nonunit viscosity keeps the config/pointwise agreement") {
  std::mt19937 rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    KinkConfig cfg = gfp::test::random_generic_config(rng, 4, 0.25, 1.0);
    double kmin = cfg.term(0).k;
    double lambda = -kmin / cfg.eta() + 0.7;  // all coefficients positive
    auto res = bt_one_config(cfg, lambda);
    REQUIRE(std::holds_alternative<KinkConfig>(res));
    const KinkConfig& out = std::get<KinkConfig>(res);
    SeedSolution seed = seed_from_config(cfg);
    std::uniform_real_distribution<double> xd(-3.0, 3.0);
    for (int s = 0; s < 6; ++s) {
      double X = xd(rng), T = xd(rng);
      CHECK(bt_one(seed, lambda, X, T) ==
            Approx(exact::eval_multikink(out, X, T).u).epsilon(1e-10));
    }
    // The transformed config still solves its viscous equation.
    GridSpec grid{-4.0, 4.0, 30, -3.0, 3.0, 30};
    verify::ResidualReport rep = verify::scan_residual(
        [&](double X, double T) { return exact::eval_derivatives(out, X, T); },
        "generic", out.eta(), grid);
    CHECK(rep.max_abs < 1e-8);
  }
}

TEST_CASE("two-parameter transform is symmetric and exact") {
  SeedSolution tanh_seed = seed_from_travelling(reference_kink());
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xd(-3.0, 3.0);
  for (int s = 0; s < 40; ++s) {
    double X = xd(rng), T = xd(rng);
    double a = bt_two(tanh_seed, 2.0, 3.0, X, T);
    double b = bt_two(tanh_seed, 3.0, 2.0, X, T);
    CHECK(a == Approx(b).epsilon(1e-10));
  }

  // The (2,3)-transformed kink solves the unit-viscosity equation: compare
  // with the equivalent composed config and scan its residual.
  KinkConfig two_term = exact::tanh_kink_as_config(reference_kink());
  auto composed = bt_two_config(two_term, 2.0, 3.0);
  REQUIRE(std::holds_alternative<KinkConfig>(composed));
  const KinkConfig& out = std::get<KinkConfig>(composed);
  GridSpec grid{-8.0, 8.0, 50, -4.0, 4.0, 50};
  verify::ResidualReport rep = verify::scan_residual(
      [&](double X, double T) { return exact::eval_derivatives(out, X, T); },
      "generic", 1.0, grid);
  CHECK(rep.max_abs < 1e-8);
  for (int s = 0; s < 25; ++s) {
    double X = xd(rng), T = xd(rng);
    CHECK(bt_two(tanh_seed, 2.0, 3.0, X, T) ==
          Approx(exact::eval_multikink(out, X, T).u).epsilon(1e-10));
  }
}

TEST_CASE("large parameters return the seed") {
  KinkConfig cfg = bt_demo_config();
  SeedSolution seed = seed_from_config(cfg);
  double sup_u = 3.0, sup_ux = 0.0;
  for (double X = -30.0; X <= 30.0; X += 0.25)
    sup_ux = std::max(sup_ux, exact::eval_derivatives(cfg, X, 0.0).uX);
  for (double lambda : {10.0 * sup_u, -10.0 * sup_u, 40.0}) {
    for (double X : {-10.0, 0.0, 10.0}) {
      double u = exact::eval_multikink(cfg, X, 0.0).u;
      CHECK(std::fabs(bt_one(seed, lambda, X, 0.0) - u) <=
            2.0 * sup_ux / std::fabs(lambda));
    }
  }
}

TEST_CASE("singularity interval of the reference kink") {
  auto c05 = bt_singularity_check(reference_kink(), 0.5);
  CHECK(c05.lo == Approx(-3.0));
  CHECK(c05.hi == Approx(1.0));
  CHECK(c05.is_singular);
  CHECK(!c05.on_boundary);

  auto c1 = bt_singularity_check(reference_kink(), 1.0);
  CHECK(c1.is_singular);  // closed-interval semantics
  CHECK(c1.on_boundary);  // the pole escapes to infinity at the boundary

  auto c10 = bt_singularity_check(reference_kink(), 10.0);
  CHECK(!c10.is_singular);

  CHECK_THROWS_AS(
      bt_singularity_check({exact::WaveFamily::sigmoid, 1, 0, 1}, 0.0),
      WrongFamily);
}

TEST_CASE("pole trajectories match the closed forms") {
  SeedSolution seed = seed_from_travelling(reference_kink());
  const double T = 0.9;

  // Both closed-form branches live inside the window.
  BtParams p{-3.5, 0.2};
  auto roots = bt_pole_trajectories(seed, p, T, -6.0, 6.0);
  const double x1 = T / 3.0 - 0.5 * std::atanh((0.2 + 1.0) / 2.0);
  const double arg2 = (p.lambda1 * *p.lambda2 + p.lambda1 + *p.lambda2 + 5.0) /
                      (2.0 * (p.lambda1 + *p.lambda2 + 2.0));
  const double x2 = T / 3.0 - 0.5 * std::atanh(arg2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Approx(std::min(x1, x2)).epsilon(1e-9));
  CHECK(roots[1] == Approx(std::max(x1, x2)).epsilon(1e-9));

  // Independent bisection oracle on the denominator factors.
  auto denom = [&](double X) {
    FieldSample s = seed.sample(X, T);
    return s.uX + (s.u + p.lambda1) * (s.u + *p.lambda2);
  };
  CHECK(gfp::test::bisect(denom, x2 - 0.3, x2 + 0.3) ==
        Approx(roots[0] == x2 ? roots[0] : roots[1]).epsilon(1e-9));

  // lambda2 on the atanh boundary: that branch has no finite root.
  auto boundary = bt_pole_trajectories(seed, {10.0, 1.0}, 0.0, -8.0, 8.0);
  CHECK(boundary.empty());

  // Far outside the singular set nothing vanishes on a bounded window.
  auto regular = bt_pole_trajectories(seed, {10.0, 12.0}, T, -8.0, 8.0);
  CHECK(regular.empty());
  double min_abs = 1e30;
  for (double X = -8.0; X <= 8.0; X += 1e-2) {
    FieldSample s = seed.sample(X, T);
    min_abs = std::min(min_abs,
                       std::fabs(s.uX + (s.u + 10.0) * (s.u + 12.0)));
  }
  CHECK(min_abs > 1.0);
}

TEST_CASE("system transform keeps the first-order pair") {
  // Constant pair maps to itself.
  SeedSolution ua = constant_seed(1.3), ra = constant_seed(1.3);
  auto fixed = bt_system(ua, ra, 2.0, 0.0, 0.0);
  CHECK(fixed.u == Approx(1.3));
  CHECK(fixed.rho == Approx(1.3));

  // Multikink pair (u, u + uX/u) at unit viscosity.
  KinkConfig cfg = KinkConfig::generic(1.0, {{0.5, 0.0, 0.0}, {2.0, 1.0, 0.0}});
  SeedSolution useed = seed_from_config(cfg);
  auto rho_sample = [cfg](double X, double T) {
    FieldSample s = exact::eval_derivatives(cfg, X, T);
    exact::SpatialJet j = exact::spatial_jet(cfg, X, T);
    FieldSample r;
    r.u = s.u + s.uX / s.u;
    r.uX = s.uX + (s.uXX * s.u - s.uX * s.uX) / (s.u * s.u);
    r.uT = s.uT + (s.uXT * s.u - s.uX * s.uT) / (s.u * s.u);
    r.uXX = j.u3;  // unused by the transform
    return r;
  };
  SeedSolution rseed = make_seed(rho_sample, SeedProvenance::custom, 1.0,
                                 {{0.3, 0.1}, {-1.0, 0.6}});

  const double lambda = 1.7;
  auto fu = [&](double X, double T) {
    return bt_system(useed, rseed, lambda, X, T).u;
  };
  auto fr = [&](double X, double T) {
    return bt_system(useed, rseed, lambda, X, T).rho;
  };
  const double h = 1e-5;
  for (double X : {-1.0, 0.2, 1.4})
    for (double T : {-0.5, 0.8}) {
      // First-order system: u_X = u (rho - u) and rho_T = -d/dX (1/u).
      double ux = (fu(X + h, T) - fu(X - h, T)) / (2 * h);
      double res1 = ux - fu(X, T) * (fr(X, T) - fu(X, T));
      CHECK(std::fabs(res1) < 1e-8);
      double rt = (fr(X, T + h) - fr(X, T - h)) / (2 * h);
      double ix = (1.0 / fu(X + h, T) - 1.0 / fu(X - h, T)) / (2 * h);
      CHECK(std::fabs(rt + ix) < 1e-8);
      // First component coincides with the scalar transform.
      CHECK(fu(X, T) == Approx(bt_one(useed, lambda, X, T)));
    }
}

TEST_CASE("randomized residual suite for transformed seeds") {
  std::mt19937 rng(314);
  std::uniform_real_distribution<double> ld(0.5, 4.0);
  for (int trial = 0; trial < 8; ++trial) {
    KinkConfig cfg = gfp::test::random_generic_config(rng, 5, 0.3, 1.0);
    double lambda = -cfg.term(0).k / cfg.eta() + ld(rng);
    auto res = bt_one_config(cfg, lambda);
    REQUIRE(std::holds_alternative<KinkConfig>(res));
    const KinkConfig& out = std::get<KinkConfig>(res);
    GridSpec grid{-5.0, 5.0, 20, -2.0, 2.0, 10};
    verify::ResidualReport rep = verify::scan_residual(
        [&](double X, double T) { return exact::eval_derivatives(out, X, T); },
        "generic", out.eta(), grid);
    CHECK(rep.max_abs < 1e-8);
  }
}

TEST_CASE("printed two-parameter closed form deviates and is only reported") {
  // The superposition route is the primary path (validated above by swap
  // symmetry, the config route and the equation residual). The typeset
  // closed form for u^{l1,l2} - u on a tanh seed is cross-checked here and
  // its deviation reported, not forced to agree.
  exact::TravellingWave tw{exact::WaveFamily::tanh_kink, 1.0, 0.0, 1.0 / 3.0};
  SeedSolution seed = seed_from_travelling(tw);
  const double l1 = 2.0, l2 = 3.0;
  auto closed_form = [&](double X, double T) {
    const double A = 2.0;  // sqrt(K1^2 + 1/c)
    const double Y = tw.K1 * A * (X - tw.c * T + tw.K2);
    const double R = tw.K1 + l2 + A * std::tanh(Y);
    const double gate = 1.0 - tw.c * l2 * (2 * tw.K1 + l2);
    const double num =
        (1.0 + tw.c * tw.K1 * tw.K1) *
        (tw.c * R * (R + (2 * tw.K1 + l1 + l2)) + gate);
    const double den = std::cosh(Y) * std::cosh(Y) *
                       (tw.c * R * (tw.c * (2 * tw.K1 + l1 + l2) * R) + gate);
    return num / den;
  };
  double deviation = 0.0;
  for (double X : {-1.0, 0.0, 0.7, 2.0}) {
    double truth = bt_two(seed, l1, l2, X, 0.4) - eval_travelling(tw, X, 0.4);
    deviation = std::max(deviation, std::fabs(closed_form(X, 0.4) - truth));
  }
  MESSAGE("closed-form deviation from the superposition route: ", deviation);
  CHECK(deviation > 1e-3);
}

TEST_CASE("seed validation rejects wrong derivatives") {
  auto bogus = [](double X, double T) {
    FieldSample s;
    s.u = std::sin(X) * std::cos(T);
    s.uX = 42.0;
    return s;
  };
  CHECK_THROWS_AS(
      make_seed(bogus, SeedProvenance::custom, 1.0, {{0.3, 0.4}}),
      SeedValidationError);
}
