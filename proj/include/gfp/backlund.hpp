#ifndef GFP_BACKLUND_HPP
#define GFP_BACKLUND_HPP

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gfp/exact.hpp"
#include "gfp/types.hpp"

namespace gfp::backlund {

struct BtParams {
  double lambda1 = 0.0;
  std::optional<double> lambda2;  // real-valued only
};

enum class SeedProvenance { travelling, multikink, custom };

// A seed solution hands out analytic derivatives at any point. frame_eta is
// the viscosity of the equation the seed solves (1 for travelling waves and
// custom seeds; cfg.eta() for multikink seeds). All transforms are stated in
// the unit-viscosity frame and rescaled internally, so for a frame with
// viscosity eta the one-parameter map reads u + eta*uX/(u + eta*lambda).
struct SeedSolution {
  std::function<FieldSample(double, double)> sample;
  SeedProvenance provenance = SeedProvenance::custom;
  double frame_eta = 1.0;
};

// Registers a seed; when validation points are given, uX and uT are checked
// against finite differences to 1e-6 relative (SeedValidationError).
SeedSolution make_seed(std::function<FieldSample(double, double)> sampler,
                       SeedProvenance provenance, double frame_eta = 1.0,
                       const std::vector<std::pair<double, double>>&
                           validation_points = {});
SeedSolution seed_from_travelling(const exact::TravellingWave& tw);
SeedSolution seed_from_config(const KinkConfig& cfg);

// One-parameter transform u + eta*uX/(u + eta*lambda).
// Throws BtPole when the denominator is below 1e-12.
double bt_one(const SeedSolution& seed, double lambda, double X, double T);

// Two-parameter transform via the superposition formula; symmetric in
// (lambda1, lambda2). Derivatives of the intermediate one-parameter
// transform come from the seed's analytic uX, uXX.
double bt_two(const SeedSolution& seed, double lambda1, double lambda2,
              double X, double T);

// Exponential sum with signed term coefficients; arises when a transform
// parameter does not exceed -min_j(k_j)/eta. Evaluable pointwise only --
// zeros of the sum are genuine poles of the transformed solution.
struct SignedKinkSum {
  KinkConfig base;
  std::vector<double> coeff;

  double value(double X, double T) const;
  FieldSample sample(double X, double T) const;
  // |sum| / sum|terms|; near zero means a pole is close.
  double denominator_scale(double X, double T) const;
};

using BtConfigResult = std::variant<KinkConfig, SignedKinkSum>;

// Config-level transform: new term coefficients k_j/eta + lambda. When all
// are positive they are absorbed as delta_j += eta*ln(k_j/eta + lambda) and
// a standard config is returned.
BtConfigResult bt_one_config(const KinkConfig& cfg, double lambda);
// Composition with coefficients (k_j/eta + lambda1)(k_j/eta + lambda2).
BtConfigResult bt_two_config(const KinkConfig& cfg, double lambda1,
                             double lambda2);

struct SingularityCheck {
  bool is_singular = false;
  bool on_boundary = false;  // interval endpoints; closed-interval semantics
  double lo = 0.0, hi = 0.0;
};

// The one-parameter transform of a tanh kink develops poles exactly when
// lambda lies in [-K1 - A/2, -K1 + A/2] with A the step amplitude (the
// range of -u). Throws WrongFamily otherwise.
SingularityCheck bt_singularity_check(const exact::TravellingWave& tw,
                                      double lambda);

// All denominator roots of the transform in [xlo, xhi] at time T, found by
// bracketing and bisection: roots of u + eta*lambda2 and, for two-parameter
// transforms, of eta*uX + (u + eta*lambda1)(u + eta*lambda2).
std::vector<double> bt_pole_trajectories(const SeedSolution& seed,
                                         const BtParams& params, double T,
                                         double xlo, double xhi);

struct BtSystemValue {
  double u = 0.0;
  double rho = 0.0;
};

// Transform of the first-order system pair: both components map through the
// same one-parameter formula. rho_seed must be u + d/dX ln u of the same
// underlying solution.
BtSystemValue bt_system(const SeedSolution& u_seed,
                        const SeedSolution& rho_seed, double lambda, double X,
                        double T);

}  // namespace gfp::backlund

#endif  // GFP_BACKLUND_HPP
