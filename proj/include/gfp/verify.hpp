#ifndef GFP_VERIFY_HPP
#define GFP_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "gfp/model.hpp"
#include "gfp/types.hpp"

namespace gfp::verify {

struct WorstPoint {
  double X = 0.0, T = 0.0, value = 0.0;
};

struct ResidualReport {
  std::string equation;
  GridSpec grid;
  double max_abs = 0.0;
  double l2 = 0.0;
  WorstPoint worst;
  std::string derivative_source;  // "analytic" | "finite-difference"
};

std::string residual_report_to_json(const ResidualReport& rep);

// Residual of u_T + d/dX(1/u + (eta/u) u_T) at one point, evaluated from
// fully expanded derivative monomials over u^2 to avoid cancellation in 1/u
// near steep kinks. Throws ZeroField.
double residual_generic(const FieldSample& s, double eta);

// Residual of d/dT(u + (eta/u) u_X), same conditioning.
double residual_degenerate(const FieldSample& s, double eta);

using FieldFn = std::function<FieldSample(double, double)>;

// equation is "generic" or "degenerate".
ResidualReport scan_residual(const FieldFn& field, const std::string& equation,
                             double eta, const GridSpec& grid,
                             const std::string& derivative_source = "analytic");

// Linearised-potential residual eta^2 phi_XT + phi for a generic config,
// evaluated per term after dividing by the dominant exponential.
double kg_residual(const KinkConfig& cfg, double X, double T);
// Same residual for an injected custom potential value/derivative.
double kg_residual_custom(double phi, double phi_XT, double eta);

// Max-norm of T_X - X_T + [T, X] for the diagonal/triangular matrix pair
// built from (u, rho); rho defaults to u + uX/u for config inputs. The
// spectral-parameter analogue alpha defaults to 1.
double lax_residual(const KinkConfig& cfg, double alpha, double X, double T);
double lax_residual(const KinkConfig& cfg, double X, double T);
double lax_residual_fields(double u, double uX, double uT, double uXT,
                           double rho, double rhoT, double alpha);

// Spatial profile data at one X: value and first four derivatives.
struct Profile {
  double u = 0.0, u1 = 0.0, u2 = 0.0, u3 = 0.0, u4 = 0.0;
};

// Truncated evolutionary right-hand side
//   u1/u^2 + e (u2/u^3 - 3 u1^2/u^4)
//          + e^2 (u3/u^4 - 10 u1 u2/u^5 + 15 u1^3/u^6)
//          + e^3 (u4/u^5 - 15 u1 u3/u^6 - 10 u2^2/u^6
//                 + 105 u1^2 u2/u^7 - 105 u1^4/u^8)
// cut after the requested order (0..3).
double series_rhs(const Profile& p, double epsilon, int order);

enum class StaggeredVariant { pointwise, riccati };

struct StateField {
  double x0 = 0.0;
  double dx = 1.0;
  double time = 0.0;
  std::vector<double> u;
  std::vector<double> rho;  // u + d/dX ln u within discretisation error
};

// Builds the state and fills rho by centered differences of ln u.
StateField make_state(std::vector<double> u, double x0, double dx,
                      double time = 0.0);

// Alternating update: rho^{n+1} = rho^n - d/dX(1/u^n) dT, then either the
// pointwise update u^{n+1} = u^n - d/dX(1/u^n) dT or the riccati recovery
// integrating u_X = u (rho^{n+1} - u) from the left boundary. Returns the
// initial state plus one state per step. Throws ZeroCrossing (with the step
// index) when any iterate touches or crosses zero.
//
// left_boundary, when given, supplies u(x0, time) for the riccati recovery;
// without it the left value comes from the explicit update (adequate only
// when the left edge is flat).
std::vector<StateField> integrate_staggered(
    const StateField& initial, double dT, int steps, StaggeredVariant variant,
    const std::function<double(double)>& left_boundary = {});

// x - t * c(v) - psi(v) with c the characteristic speed of the raw model.
double hodograph_residual(const std::function<double(double)>& psi, double v,
                          double x, double t, const model::ModelParams& p);

struct FdDerivatives {
  FieldSample sample;
  double err_uX = 0.0, err_uT = 0.0, err_uXX = 0.0, err_uXT = 0.0;
};

// Central differences with one Richardson refinement; the err_* fields are
// step-halving error estimates.
FdDerivatives fd_derivatives(const std::function<double(double, double)>& u,
                             double X, double T, double step);

}  // namespace gfp::verify

#endif  // GFP_VERIFY_HPP
