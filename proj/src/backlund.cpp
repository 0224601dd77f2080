#include "gfp/backlund.hpp"

#include <algorithm>
#include <cmath>

#include "gfp/detail/weights.hpp"
#include "gfp/errors.hpp"

namespace gfp::backlund {

namespace {

constexpr double kPoleTol = 1e-12;

void validate_seed(const SeedSolution& seed,
                   const std::vector<std::pair<double, double>>& points) {
  const double h = 1e-5;
  for (auto [X, T] : points) {
    FieldSample s = seed.sample(X, T);
    double fdX = (seed.sample(X + h, T).u - seed.sample(X - h, T).u) / (2 * h);
    double fdT = (seed.sample(X, T + h).u - seed.sample(X, T - h).u) / (2 * h);
    double sX = std::max({1.0, std::fabs(s.uX), std::fabs(fdX)});
    double sT = std::max({1.0, std::fabs(s.uT), std::fabs(fdT)});
    if (std::fabs(fdX - s.uX) > 1e-6 * sX ||
        std::fabs(fdT - s.uT) > 1e-6 * sT)
      throw SeedValidationError(
          "seed derivatives disagree with finite differences");
  }
}

}  // namespace

SeedSolution make_seed(std::function<FieldSample(double, double)> sampler,
                       SeedProvenance provenance, double frame_eta,
                       const std::vector<std::pair<double, double>>& points) {
  if (!(frame_eta > 0.0)) throw ValidationError("frame_eta must be positive");
  SeedSolution seed{std::move(sampler), provenance, frame_eta};
  validate_seed(seed, points);
  return seed;
}

SeedSolution seed_from_travelling(const exact::TravellingWave& tw) {
  auto sampler = [tw](double X, double T) {
    return exact::travelling_sample(tw, X, T);
  };
  std::vector<std::pair<double, double>> pts;
  if (tw.family != exact::WaveFamily::tan_singular)
    pts = {{0.1, 0.0}, {-0.7, 0.4}, {1.3, -0.5}};
  return make_seed(sampler, SeedProvenance::travelling, 1.0, pts);
}

SeedSolution seed_from_config(const KinkConfig& cfg) {
  auto sampler = [cfg](double X, double T) {
    return exact::eval_derivatives(cfg, X, T);
  };
  return make_seed(sampler, SeedProvenance::multikink, cfg.eta(),
                   {{0.1, 0.0}, {-0.7, 0.4}, {1.3, -0.5}});
}

double bt_one(const SeedSolution& seed, double lambda, double X, double T) {
  const double eta = seed.frame_eta;
  FieldSample s = seed.sample(X, T);
  const double den = s.u + eta * lambda;
  if (std::fabs(den) < kPoleTol)
    throw BtPole("transform denominator u + eta*lambda vanishes");
  return s.u + eta * s.uX / den;
}

double bt_two(const SeedSolution& seed, double lambda1, double lambda2,
              double X, double T) {
  const double eta = seed.frame_eta;
  FieldSample s = seed.sample(X, T);
  const double d1 = s.u + eta * lambda1;
  const double d2 = s.u + eta * lambda2;
  if (std::fabs(d1) < kPoleTol || std::fabs(d2) < kPoleTol)
    throw BtPole("intermediate transform denominator vanishes");
  const double u_l1 = s.u + eta * s.uX / d1;
  const double u_l2 = s.u + eta * s.uX / d2;
  const double uX_l2 = s.uX + eta * (s.uXX * d2 - s.uX * s.uX) / (d2 * d2);
  const double den = (u_l1 - s.u) * (u_l2 - s.u) + eta * s.uX;
  const double num = eta * (u_l1 - s.u) * uX_l2;
  if (std::fabs(den) < kPoleTol) {
    if (std::fabs(num) < kPoleTol) return u_l2;  // constant-seed limit
    throw BtPole("superposition denominator vanishes");
  }
  return u_l2 + num / den;
}

double SignedKinkSum::value(double X, double T) const {
  return detail::eval_core(base, &coeff, X, T).m1;
}

FieldSample SignedKinkSum::sample(double X, double T) const {
  return detail::sample_from_core(detail::eval_core(base, &coeff, X, T),
                                  base.eta());
}

double SignedKinkSum::denominator_scale(double X, double T) const {
  detail::EvalCore c = detail::eval_core(base, &coeff, X, T);
  return c.abs_sum > 0.0 ? std::fabs(c.S) / c.abs_sum : 0.0;
}

namespace {

BtConfigResult pack_config(const KinkConfig& cfg, std::vector<double> coeff) {
  bool any = false, all_positive = true;
  for (double a : coeff) {
    if (a != 0.0) any = true;
    if (a < 0.0) all_positive = false;
  }
  if (!any)
    throw AllCoefficientsZero("every transformed coefficient vanished");
  if (all_positive) {
    std::vector<PhaseTerm> terms;
    for (std::size_t j = 0; j < cfg.size(); ++j) {
      if (coeff[j] == 0.0) continue;  // the term drops out of the potential
      PhaseTerm t = cfg.term(j);
      t.delta += cfg.eta() * std::log(coeff[j]);
      terms.push_back(t);
    }
    return KinkConfig::generic(cfg.eta(), std::move(terms));
  }
  return SignedKinkSum{cfg, std::move(coeff)};
}

}  // namespace

BtConfigResult bt_one_config(const KinkConfig& cfg, double lambda) {
  if (cfg.kase() != Case::generic)
    throw ValidationError("config-level transform expects the generic case");
  std::vector<double> coeff(cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j)
    coeff[j] = cfg.term(j).k / cfg.eta() + lambda;
  return pack_config(cfg, std::move(coeff));
}

BtConfigResult bt_two_config(const KinkConfig& cfg, double lambda1,
                             double lambda2) {
  if (cfg.kase() != Case::generic)
    throw ValidationError("config-level transform expects the generic case");
  std::vector<double> coeff(cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    double base = cfg.term(j).k / cfg.eta();
    coeff[j] = (base + lambda1) * (base + lambda2);
  }
  return pack_config(cfg, std::move(coeff));
}

SingularityCheck bt_singularity_check(const exact::TravellingWave& tw,
                                      double lambda) {
  if (tw.family != exact::WaveFamily::tanh_kink)
    throw WrongFamily("singularity interval applies to the tanh kink");
  const double half = 0.5 * exact::amplitude(tw);
  SingularityCheck c;
  c.lo = -tw.K1 - half;  // lambda hits -u somewhere iff it lies in -range(u)
  c.hi = -tw.K1 + half;
  c.is_singular = lambda >= c.lo && lambda <= c.hi;
  const double tol = 1e-12 * std::max({1.0, std::fabs(c.lo), std::fabs(c.hi)});
  c.on_boundary =
      std::fabs(lambda - c.lo) <= tol || std::fabs(lambda - c.hi) <= tol;
  return c;
}

std::vector<double> bt_pole_trajectories(const SeedSolution& seed,
                                         const BtParams& params, double T,
                                         double xlo, double xhi) {
  if (!(xlo < xhi)) throw EmptyWindow("pole search needs xlo < xhi");
  const double eta = seed.frame_eta;

  std::vector<std::function<double(double)>> fns;
  if (params.lambda2) {
    fns.push_back([&, l2 = *params.lambda2](double X) {
      return seed.sample(X, T).u + eta * l2;
    });
    fns.push_back([&, l1 = params.lambda1, l2 = *params.lambda2](double X) {
      FieldSample s = seed.sample(X, T);
      return eta * s.uX + (s.u + eta * l1) * (s.u + eta * l2);
    });
  } else {
    fns.push_back([&, l1 = params.lambda1](double X) {
      return seed.sample(X, T).u + eta * l1;
    });
  }

  std::vector<double> roots;
  const int nscan = 4000;
  for (const auto& f : fns) {
    double prev_x = xlo, prev_v = f(xlo);
    for (int m = 1; m <= nscan; ++m) {
      double x = xlo + (xhi - xlo) * m / double(nscan);
      double v = f(x);
      if (prev_v == 0.0) roots.push_back(prev_x);
      if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
        double a = prev_x, b = x, fa = prev_v;
        for (int it = 0; it < 200 && b - a > 1e-14 * (1 + std::fabs(a));
             ++it) {
          double mid = 0.5 * (a + b), fm = f(mid);
          if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        roots.push_back(0.5 * (a + b));
      }
      prev_x = x;
      prev_v = v;
    }
    if (prev_v == 0.0) roots.push_back(prev_x);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) {
                            return std::fabs(a - b) <= 1e-9;
                          }),
              roots.end());
  return roots;
}

BtSystemValue bt_system(const SeedSolution& u_seed,
                        const SeedSolution& rho_seed, double lambda, double X,
                        double T) {
  FieldSample su = u_seed.sample(X, T);
  FieldSample sr = rho_seed.sample(X, T);
  if (std::fabs(su.u + lambda) < kPoleTol ||
      std::fabs(sr.u + lambda) < kPoleTol)
    throw BtPole("system transform denominator vanishes");
  return {su.u + su.uX / (lambda + su.u), sr.u + sr.uX / (lambda + sr.u)};
}

}  // namespace gfp::backlund
