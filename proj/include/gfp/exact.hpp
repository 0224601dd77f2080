#ifndef GFP_EXACT_HPP
#define GFP_EXACT_HPP

#include <functional>
#include <vector>

#include "gfp/types.hpp"

namespace gfp::exact {

enum class WaveFamily { tanh_kink, tan_singular, sigmoid };

// The three closed-form travelling-wave families:
//   tanh_kink    u = K1 + A tanh(A (X - cT + K2)),    A = sqrt(K1^2 + 1/c)
//   tan_singular u = K1 - B tan(B (X - cT + K2)),     B = sqrt(-(K1^2 + 1/c))
//   sigmoid      u = K1/2 (1 + tanh(K1/2 (X - cT - K2)))
// The sigmoid offset is subtracted so that u(K2, 0) = K1/2 marks the front.
struct TravellingWave {
  WaveFamily family = WaveFamily::tanh_kink;
  double K1 = 0.0;
  double K2 = 0.0;
  double c = 1.0;  // nonzero
};

double eval_travelling(const TravellingWave& tw, double X, double T);

// Value plus analytic derivatives.
FieldSample travelling_sample(const TravellingWave& tw, double X, double T);

// Step amplitude: 2 sqrt(K1^2 + 1/c) (tanh kink) or |K1| (sigmoid).
// Throws WrongFamily for the tangent family.
double amplitude(const TravellingWave& tw);

// All singular X in [xlo, xhi] at time T of the tangent family, i.e. where
// the full argument B (X - cT + K2) hits pi/2 + n pi.
std::vector<double> tangent_singularities(const TravellingWave& tw, double T,
                                          double xlo, double xhi);

struct MultikinkValue {
  double u = 0.0;
  std::vector<double> weights;  // simplex: w_j in [0,1], sum = 1
};

// u = sum_j k_j w_j with w_j the normalised exponentials of theta_j/eta,
// evaluated in max-shifted form; finite for every real (X, T).
MultikinkValue eval_multikink(const KinkConfig& cfg, double X, double T);

// Analytic derivatives via moment identities of the weight distribution:
// uX = var(k)/eta, uT = cov(k, theta_T)/eta, second derivatives from third
// central moments.
FieldSample eval_derivatives(const KinkConfig& cfg, double X, double T);

// Spatial derivatives u', u'', u''', u'''' at fixed T (cumulants of k).
struct SpatialJet {
  double u = 0.0, u1 = 0.0, u2 = 0.0, u3 = 0.0, u4 = 0.0;
};
SpatialJet spatial_jet(const KinkConfig& cfg, double X, double T);

// (F, <k>, var(k), mu3, mu4) truncated after `order` moments, F = eta ln phi.
std::vector<double> free_energy_moments(const KinkConfig& cfg, double X,
                                        double T, int order);

struct FunctionOfT {
  std::function<double(double)> value;
  std::function<double(double)> d1;  // only needed for derivative sampling
};
struct FunctionOfX {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  std::function<double(double)> d3;  // optional, for uXX
};

// General degenerate-case solution u = B'(X) / (A(T) + B(X)).
// Throws NonpositivePotential when A + B <= 0 at the point.
double general_solution_delta0(const FunctionOfT& A, const FunctionOfX& B,
                               double X, double T);
FieldSample general_solution_sample(const FunctionOfT& A, const FunctionOfX& B,
                                    double X, double T);

// The tanh kink as its exact two-term unit-viscosity configuration.
// Requires K1^2 + 1/c > 0.
KinkConfig tanh_kink_as_config(const TravellingWave& tw);

// The unit-viscosity configuration equivalent to cfg: wavenumbers and
// offsets (and frequencies) divided by eta. Its field at (X, T/eta^2)
// (generic) or (X, T) (degenerate) carries the same weights as cfg at
// (X, T).
KinkConfig unit_viscosity_equivalent(const KinkConfig& cfg);

}  // namespace gfp::exact

#endif  // GFP_EXACT_HPP
