#ifndef GFP_DETAIL_WEIGHTS_HPP
#define GFP_DETAIL_WEIGHTS_HPP

#include <vector>

#include "gfp/types.hpp"

namespace gfp::detail {

// Shared evaluation core for exponential sums phi = sum_j a_j e^{theta_j/eta}.
// Weights are the normalised (possibly signed) terms; moments are central
// moments of k and mixed moments with the phase time-coefficient g, all
// computed in max-shifted form so no finite (X, T) overflows.
struct EvalCore {
  std::vector<double> w;  // w_j = a_j e^{(theta_j - theta_ref)/eta} / S
  double S = 0.0;         // sum of shifted terms (signed); 0 only at a pole
  double abs_sum = 0.0;   // sum of |shifted terms|, for pole detection
  double theta_ref = 0.0;

  double m1 = 0.0;                                  // <k>
  double mu2 = 0.0, mu3 = 0.0, mu4 = 0.0, mu5 = 0.0;  // central moments of k
  double gbar = 0.0;     // <g>
  double cov_kg = 0.0;   // <(k-m1)(g-gbar)>
  double cov_k2g = 0.0;  // <(k-m1)^2 (g-gbar)>
};

// coeffs == nullptr means unit amplitudes.
EvalCore eval_core(const KinkConfig& cfg, const std::vector<double>* coeffs,
                   double X, double T);

inline FieldSample sample_from_core(const EvalCore& c, double eta) {
  FieldSample s;
  s.u = c.m1;
  s.uX = c.mu2 / eta;
  s.uT = c.cov_kg / eta;
  s.uXX = c.mu3 / (eta * eta);
  s.uXT = c.cov_k2g / (eta * eta);
  return s;
}

}  // namespace gfp::detail

#endif  // GFP_DETAIL_WEIGHTS_HPP
