#ifndef GFP_MODEL_HPP
#define GFP_MODEL_HPP

#include <optional>

#include "gfp/types.hpp"

namespace gfp::model {

// Raw coefficients of the conservation law
//   v_t + d/dx [ (c2 v^2 + c4 s^2 + eta*s*(c1 v_t + c2 v_x)) / (c1 v + c3 s) ] = 0
// with s = sigma and eta > 0 the viscosity scale.
template <typename S>
struct BasicModelParams {
  S c1{}, c2{}, c3{}, c4{};
  S sigma{};
  S eta{};
};

using ModelParams = BasicModelParams<double>;
using ModelParamsExact = BasicModelParams<Rational>;

template <typename S>
S structural_delta_of(const BasicModelParams<S>& p) {
  return p.c4 * p.c1 * p.c1 + p.c2 * p.c3 * p.c3;
}

double structural_delta(const ModelParams& p);

struct CaseTag {
  Case kase = Case::generic;
  double delta = 0.0;
};

// Generic iff |Delta| exceeds the scaled tolerance tol*max(|c4 c1^2|,
// |c2 c3^2|, 1e-300). Throws ValidationError for tol < 0.
CaseTag classify_case(const ModelParams& p, double tol = 1e-12);

// Two generic frames exist: the parameter-free one (unit-viscosity target
// equation) and the perturbative one with epsilon = c1*eta/(c3*Delta).
enum class FrameKind { parameter_free, visco_pert };

// Affine change of variables X = a_x x + b_x t, T = a_t t, u = a_u v + b_u.
template <typename S>
struct BasicFrameMap {
  S a_x{}, b_x{}, a_t{}, a_u{}, b_u{};
  Case kase = Case::generic;
  bool eta_rescaled = false;
  FrameKind kind = FrameKind::parameter_free;

  struct Point {
    S X{}, T{}, u{};
  };
  struct PhysPoint {
    S x{}, t{}, v{};
  };

  Point forward(const S& x, const S& t, const S& v) const {
    return {a_x * x + b_x * t, a_t * t, a_u * v + b_u};
  }
  PhysPoint inverse(const S& X, const S& T, const S& u) const {
    S t = T / a_t;
    return {(X - b_x * t) / a_x, t, (u - b_u) / a_u};
  }
};

using FrameMap = BasicFrameMap<double>;
using FrameMapExact = BasicFrameMap<Rational>;

// Builds the affine frame for the classified case. eta_rescaled divides the
// scaled coordinates by eta, so the target equation keeps its explicit
// viscosity term; it is only defined for the parameter_free kind.
// Throws InvalidCoefficients when the required nonzero conditions fail.
FrameMap make_frame(const ModelParams& p, const CaseTag& tag,
                    bool eta_rescaled = false,
                    FrameKind kind = FrameKind::parameter_free);
FrameMapExact make_frame_exact(const ModelParamsExact& p, Case kase,
                               bool eta_rescaled = false,
                               FrameKind kind = FrameKind::parameter_free);

struct Dispersion {
  double omega = 0.0;
  double group_dispersion = 0.0;
};

// omega(k) = (eta c2 c3 k^2 - c1 c4 k) / (eta c1 c3 k + c3^2) and its second
// k-derivative 2 eta Delta / (c1 eta k + c3)^3. Throws PoleAtK when the
// denominator vanishes.
Dispersion dispersion(const ModelParams& p, double k);

// c(v) = c2/c1 - sigma^2 Delta / (c1 (c3 sigma + c1 v)^2).
// Throws SingularDenominator when c3 sigma + c1 v = 0.
double characteristic_speed(const ModelParams& p, double v);

// Discrete PT map: the returned configuration evaluates to -u(-X,-T).
// Generic: k_j -> -k_j with delta unchanged; degenerate also flips omega.
KinkConfig pt_transform(const KinkConfig& cfg);

}  // namespace gfp::model

#endif  // GFP_MODEL_HPP
