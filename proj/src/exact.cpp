#include "gfp/exact.hpp"

#include <algorithm>
#include <cmath>

#include "gfp/detail/weights.hpp"
#include "gfp/errors.hpp"

namespace gfp::detail {

EvalCore eval_core(const KinkConfig& cfg, const std::vector<double>* coeffs,
                   double X, double T) {
  const std::size_t n = cfg.size();
  const double eta = cfg.eta();
  EvalCore c;
  c.w.resize(n);

  double theta_ref = -INFINITY;
  std::vector<double> theta(n);
  for (std::size_t j = 0; j < n; ++j) {
    theta[j] = cfg.theta(j, X, T);
    bool active = !coeffs || (*coeffs)[j] != 0.0;
    if (active) theta_ref = std::max(theta_ref, theta[j]);
  }
  c.theta_ref = theta_ref;

  for (std::size_t j = 0; j < n; ++j) {
    double a = coeffs ? (*coeffs)[j] : 1.0;
    double s = a == 0.0 ? 0.0 : a * std::exp((theta[j] - theta_ref) / eta);
    c.w[j] = s;
    c.S += s;
    c.abs_sum += std::fabs(s);
  }
  for (double& wj : c.w) wj /= c.S;

  for (std::size_t j = 0; j < n; ++j) c.m1 += cfg.term(j).k * c.w[j];
  for (std::size_t j = 0; j < n; ++j) c.gbar += cfg.tcoef(j) * c.w[j];
  for (std::size_t j = 0; j < n; ++j) {
    const double dk = cfg.term(j).k - c.m1;
    const double dg = cfg.tcoef(j) - c.gbar;
    const double wj = c.w[j];
    const double dk2 = dk * dk;
    c.mu2 += wj * dk2;
    c.mu3 += wj * dk2 * dk;
    c.mu4 += wj * dk2 * dk2;
    c.mu5 += wj * dk2 * dk2 * dk;
    c.cov_kg += wj * dk * dg;
    c.cov_k2g += wj * dk2 * dg;
  }
  return c;
}

}  // namespace gfp::detail

namespace gfp::exact {

namespace {

// Squared sech via tanh to stay finite for huge arguments.
double step_profile(double K1, double scale, double arg, double& d_tanh) {
  d_tanh = std::tanh(arg);
  return K1 + scale * d_tanh;
}

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

double eval_travelling(const TravellingWave& tw, double X, double T) {
  return travelling_sample(tw, X, T).u;
}

FieldSample travelling_sample(const TravellingWave& tw, double X, double T) {
  require(tw.c != 0.0, "travelling wave needs c != 0");
  const double disc = tw.K1 * tw.K1 + 1.0 / tw.c;
  FieldSample s;
  switch (tw.family) {
    case WaveFamily::tanh_kink: {
      require(disc >= 0.0, "tanh kink needs K1^2 + 1/c >= 0");
      const double A = std::sqrt(disc);
      const double arg = A * (X - tw.c * T + tw.K2);
      double th;
      s.u = step_profile(tw.K1, A, arg, th);
      s.uX = A * A * (1.0 - th * th);
      s.uT = -tw.c * s.uX;
      s.uXX = -2.0 * (s.u - tw.K1) * s.uX;
      s.uXT = -tw.c * s.uXX;
      return s;
    }
    case WaveFamily::tan_singular: {
      require(disc < 0.0, "tangent family needs K1^2 + 1/c < 0");
      const double B = std::sqrt(-disc);
      const double arg = B * (X - tw.c * T + tw.K2);
      // Distance in X to the nearest pole of tan.
      const double off = std::remainder(arg - M_PI / 2.0, M_PI);
      if (std::fabs(off) / B < 1e-12)
        throw PoleHit("tangent-family evaluation at a singularity");
      const double t = std::tan(arg);
      s.u = tw.K1 - B * t;
      s.uX = -B * B * (1.0 + t * t);
      s.uT = -tw.c * s.uX;
      s.uXX = -2.0 * (s.u - tw.K1) * s.uX;
      s.uXT = -tw.c * s.uXX;
      return s;
    }
    case WaveFamily::sigmoid: {
      const double arg = 0.5 * tw.K1 * (X - tw.c * T - tw.K2);
      double th;
      s.u = step_profile(0.5 * tw.K1, 0.5 * tw.K1, arg, th);
      s.uX = s.u * (tw.K1 - s.u);
      s.uT = -tw.c * s.uX;
      s.uXX = s.uX * (tw.K1 - 2.0 * s.u);
      s.uXT = -tw.c * s.uXX;
      return s;
    }
  }
  throw ValidationError("unknown travelling-wave family");
}

double amplitude(const TravellingWave& tw) {
  switch (tw.family) {
    case WaveFamily::tanh_kink: {
      const double disc = tw.K1 * tw.K1 + 1.0 / tw.c;
      require(disc >= 0.0, "tanh kink needs K1^2 + 1/c >= 0");
      return 2.0 * std::sqrt(disc);
    }
    case WaveFamily::sigmoid:
      return std::fabs(tw.K1);
    case WaveFamily::tan_singular:
      throw WrongFamily("the tangent family has no step amplitude");
  }
  throw ValidationError("unknown travelling-wave family");
}

std::vector<double> tangent_singularities(const TravellingWave& tw, double T,
                                          double xlo, double xhi) {
  if (tw.family != WaveFamily::tan_singular)
    throw WrongFamily("singularities are specific to the tangent family");
  const double disc = tw.K1 * tw.K1 + 1.0 / tw.c;
  require(disc < 0.0, "tangent family needs K1^2 + 1/c < 0");
  const double B = std::sqrt(-disc);
  // B (X - cT + K2) = pi/2 + n pi  =>  X = cT - K2 + (pi/2 + n pi)/B
  const double base = tw.c * T - tw.K2;
  const long nlo = std::lround(std::ceil((B * (xlo - base) - M_PI / 2) / M_PI));
  const long nhi = std::lround(std::floor((B * (xhi - base) - M_PI / 2) / M_PI));
  std::vector<double> roots;
  for (long nn = nlo; nn <= nhi; ++nn) {
    double X = base + (M_PI / 2 + nn * M_PI) / B;
    if (X >= xlo && X <= xhi) roots.push_back(X);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

MultikinkValue eval_multikink(const KinkConfig& cfg, double X, double T) {
  detail::EvalCore c = detail::eval_core(cfg, nullptr, X, T);
  return {c.m1, std::move(c.w)};
}

FieldSample eval_derivatives(const KinkConfig& cfg, double X, double T) {
  return detail::sample_from_core(detail::eval_core(cfg, nullptr, X, T),
                                  cfg.eta());
}

SpatialJet spatial_jet(const KinkConfig& cfg, double X, double T) {
  const detail::EvalCore c = detail::eval_core(cfg, nullptr, X, T);
  const double eta = cfg.eta();
  SpatialJet j;
  j.u = c.m1;
  j.u1 = c.mu2 / eta;
  j.u2 = c.mu3 / (eta * eta);
  const double k4 = c.mu4 - 3.0 * c.mu2 * c.mu2;
  const double k5 = c.mu5 - 10.0 * c.mu3 * c.mu2;
  j.u3 = k4 / (eta * eta * eta);
  j.u4 = k5 / (eta * eta * eta * eta);
  return j;
}

std::vector<double> free_energy_moments(const KinkConfig& cfg, double X,
                                        double T, int order) {
  if (order < 0 || order > 4)
    throw ValidationError("moment order must be in 0..4");
  const detail::EvalCore c = detail::eval_core(cfg, nullptr, X, T);
  const double F = c.theta_ref + cfg.eta() * std::log(c.S);
  std::vector<double> out{F};
  const double vals[4] = {c.m1, c.mu2, c.mu3, c.mu4};
  for (int i = 0; i < order; ++i) out.push_back(vals[i]);
  return out;
}

double general_solution_delta0(const FunctionOfT& A, const FunctionOfX& B,
                               double X, double T) {
  const double den = A.value(T) + B.value(X);
  if (!(den > 0.0))
    throw NonpositivePotential("A(T) + B(X) must be positive");
  return B.d1(X) / den;
}

FieldSample general_solution_sample(const FunctionOfT& A, const FunctionOfX& B,
                                    double X, double T) {
  const double den = A.value(T) + B.value(X);
  if (!(den > 0.0))
    throw NonpositivePotential("A(T) + B(X) must be positive");
  const double a1 = A.d1 ? A.d1(T) : 0.0;
  const double b1 = B.d1(X);
  const double b2 = B.d2(X);
  const double b3 = B.d3 ? B.d3(X) : 0.0;
  FieldSample s;
  s.u = b1 / den;
  s.uX = b2 / den - b1 * b1 / (den * den);
  s.uT = -b1 * a1 / (den * den);
  s.uXT = -b2 * a1 / (den * den) + 2.0 * b1 * b1 * a1 / (den * den * den);
  s.uXX = b3 / den - 3.0 * b1 * b2 / (den * den) +
          2.0 * b1 * b1 * b1 / (den * den * den);
  return s;
}

KinkConfig unit_viscosity_equivalent(const KinkConfig& cfg) {
  if (cfg.eta() == 1.0) return cfg;
  std::vector<PhaseTerm> terms = cfg.terms();
  for (PhaseTerm& t : terms) {
    t.k /= cfg.eta();
    t.delta /= cfg.eta();
    t.omega /= cfg.eta();
  }
  return cfg.kase() == Case::generic
             ? KinkConfig::generic(1.0, std::move(terms))
             : KinkConfig::degenerate(1.0, std::move(terms));
}

KinkConfig tanh_kink_as_config(const TravellingWave& tw) {
  require(tw.family == WaveFamily::tanh_kink, "expects the tanh kink family");
  const double disc = tw.K1 * tw.K1 + 1.0 / tw.c;
  require(disc > 0.0, "a proper kink needs K1^2 + 1/c > 0");
  const double A = std::sqrt(disc);
  PhaseTerm lo{tw.K1 - A, 0.0, 0.0};
  PhaseTerm hi{tw.K1 + A, 2.0 * A * tw.K2, 0.0};
  return KinkConfig::generic(1.0, {lo, hi});
}

}  // namespace gfp::exact
