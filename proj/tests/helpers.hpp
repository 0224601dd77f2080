#ifndef GFP_TESTS_HELPERS_HPP
#define GFP_TESTS_HELPERS_HPP

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfp/scenario.hpp"
#include "gfp/types.hpp"

namespace gfp::test {

inline KinkConfig bundled_config(const std::string& name) {
  for (const cli::Scenario& sc : cli::bundled_scenarios())
    if (sc.name == name) return cli::config_of(sc);
  throw std::runtime_error("unknown bundled scenario " + name);
}

inline cli::Scenario bundled_scenario(const std::string& name) {
  for (const cli::Scenario& sc : cli::bundled_scenarios())
    if (sc.name == name) return sc;
  throw std::runtime_error("unknown bundled scenario " + name);
}

// Random generic config with pairwise well-separated nonzero wavenumbers.
inline KinkConfig random_generic_config(std::mt19937& rng, int max_terms = 8,
                                        double eta_lo = 0.05,
                                        double eta_hi = 1.0) {
  std::uniform_int_distribution<int> nd(2, max_terms);
  std::uniform_real_distribution<double> kd(-4.0, 4.0);
  std::uniform_real_distribution<double> dd(-10.0, 10.0);
  std::uniform_real_distribution<double> ed(eta_lo, eta_hi);
  const int n = nd(rng);
  std::vector<PhaseTerm> terms;
  while (static_cast<int>(terms.size()) < n) {
    double k = kd(rng);
    if (std::fabs(k) < 0.3) continue;
    bool close = false;
    for (const PhaseTerm& t : terms)
      if (std::fabs(t.k - k) < 0.2) close = true;
    if (close) continue;
    terms.push_back({k, dd(rng), 0.0});
  }
  return KinkConfig::generic(ed(rng), terms);
}

// Random generic config on small integers, with exact mirrors attached.
inline KinkConfig random_rational_config(std::mt19937& rng, int max_terms = 8) {
  std::uniform_int_distribution<int> nd(2, max_terms);
  std::uniform_int_distribution<int> kd(-6, 6);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  const int n = nd(rng);
  std::vector<PhaseTerm> terms;
  ExactTerms exact;
  std::vector<int> used;
  while (static_cast<int>(terms.size()) < n) {
    int k = kd(rng);
    if (k == 0) continue;
    bool dup = false;
    for (int kk : used) dup = dup || kk == k;
    if (dup) continue;
    used.push_back(k);
    Rational dq(num(rng), den(rng));
    terms.push_back({double(k), to_double(dq), 0.0});
    exact.k.push_back(Rational(k));
    exact.delta.push_back(dq);
  }
  return KinkConfig::generic(1.0, terms, exact);
}

// Adaptive Simpson quadrature (test oracle).
inline double simpson_slice(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_slice(f, a, m, fa, flm, fm);
  const double right = simpson_slice(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-9,
                               int depth = 40) {
  // Seed with a modest uniform split so narrow features are not missed.
  const int pieces = 64;
  double total = 0.0;
  for (int p = 0; p < pieces; ++p) {
    double pa = a + (b - a) * p / double(pieces);
    double pb = a + (b - a) * (p + 1) / double(pieces);
    double fa = f(pa), fb = f(pb), fm = f(0.5 * (pa + pb));
    double whole = simpson_slice(f, pa, pb, fa, fm, fb);
    total += adaptive_simpson_rec(f, pa, pb, fa, fm, fb, whole,
                                  tol / pieces, depth);
  }
  return total;
}

// Bisection root finder (test oracle); f(a) and f(b) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double a,
                     double b, double tol = 1e-13) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0))
    throw std::runtime_error("bisection bracket has equal signs");
  while (b - a > tol) {
    double m = 0.5 * (a + b), fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace gfp::test

#endif  // GFP_TESTS_HELPERS_HPP
