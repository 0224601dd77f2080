#include "gfp/verify.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "gfp/errors.hpp"
#include "gfp/exact.hpp"

namespace gfp::verify {

namespace {

constexpr double kFieldFloor = 1e-150;

void require_field(double u) {
  if (std::fabs(u) < kFieldFloor)
    throw ZeroField("residual undefined where u vanishes");
}

}  // namespace

double residual_generic(const FieldSample& s, double eta) {
  require_field(s.u);
  const double u2 = s.u * s.u;
  const double p =
      u2 * s.uT - s.uX + eta * (s.u * s.uXT - s.uX * s.uT);
  return p / u2;
}

double residual_degenerate(const FieldSample& s, double eta) {
  require_field(s.u);
  const double u2 = s.u * s.u;
  const double p = u2 * s.uT + eta * (s.u * s.uXT - s.uX * s.uT);
  return p / u2;
}

ResidualReport scan_residual(const FieldFn& field, const std::string& equation,
                             double eta, const GridSpec& grid,
                             const std::string& derivative_source) {
  if (equation != "generic" && equation != "degenerate")
    throw ValidationError("equation must be 'generic' or 'degenerate'");
  const bool generic = equation == "generic";
  ResidualReport rep;
  rep.equation = equation;
  rep.grid = grid;
  rep.derivative_source = derivative_source;
  double sumsq = 0.0;
  for (int jt = 0; jt < grid.nt; ++jt) {
    const double T = grid.t_at(jt);
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double X = grid.x_at(ix);
      const FieldSample s = field(X, T);
      const double r =
          generic ? residual_generic(s, eta) : residual_degenerate(s, eta);
      sumsq += r * r;
      if (std::fabs(r) > rep.max_abs) {
        rep.max_abs = std::fabs(r);
        rep.worst = {X, T, r};
      }
    }
  }
  rep.l2 = std::sqrt(sumsq);
  return rep;
}

std::string residual_report_to_json(const ResidualReport& rep) {
  nlohmann::ordered_json doc;
  doc["equation"] = rep.equation;
  doc["grid"] = {{"xmin", rep.grid.xmin}, {"xmax", rep.grid.xmax},
                 {"nx", rep.grid.nx},     {"tmin", rep.grid.tmin},
                 {"tmax", rep.grid.tmax}, {"nt", rep.grid.nt}};
  doc["max_abs"] = rep.max_abs;
  doc["l2"] = rep.l2;
  doc["worst_point"] = {
      {"X", rep.worst.X}, {"T", rep.worst.T}, {"value", rep.worst.value}};
  doc["derivative_source"] = rep.derivative_source;
  return doc.dump(2);
}

double kg_residual(const KinkConfig& cfg, double X, double T) {
  if (cfg.kase() != Case::generic)
    throw ValidationError("the linearised potential equation is generic-case");
  const std::size_t n = cfg.size();
  double theta_max = -INFINITY;
  for (std::size_t j = 0; j < n; ++j)
    theta_max = std::max(theta_max, cfg.theta(j, X, T));
  double r = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // Per-term identity: eta^2 (k_j/eta)(g_j/eta) + 1 = k_j g_j + 1.
    const double c = cfg.term(j).k * cfg.tcoef(j) + 1.0;
    r += c * std::exp((cfg.theta(j, X, T) - theta_max) / cfg.eta());
  }
  return r;
}

double kg_residual_custom(double phi, double phi_XT, double eta) {
  return eta * eta * phi_XT + phi;
}

double lax_residual_fields(double u, double uX, double uT, double uXT,
                           double rho, double rhoT, double alpha) {
  require_field(u);
  const double u2 = u * u;
  const double e11 = (-u * uXT + uX + uX * uT - u2 * uT) / u2;
  const double e21 = alpha * (uX + u2 - u * rho);
  const double e22 = (uX - u2 * rhoT) / u2;
  return std::max({std::fabs(e11), std::fabs(e21), std::fabs(e22)});
}

double lax_residual(const KinkConfig& cfg, double alpha, double X, double T) {
  if (cfg.kase() != Case::generic)
    throw ValidationError("the zero-curvature pair is generic-case");
  if (alpha == 0.0) throw ValidationError("alpha must be nonzero");
  // The matrix pair lives in the unit-viscosity frame; probe the equivalent
  // configuration at the point carrying the same weights as cfg at (X, T).
  const KinkConfig unit = exact::unit_viscosity_equivalent(cfg);
  const double Tu = T / (cfg.eta() * cfg.eta());
  const FieldSample s = exact::eval_derivatives(unit, X, Tu);
  require_field(s.u);
  const double rho = s.u + s.uX / s.u;
  const double rhoT = s.uT + (s.uXT * s.u - s.uX * s.uT) / (s.u * s.u);
  return lax_residual_fields(s.u, s.uX, s.uT, s.uXT, rho, rhoT, alpha);
}

double lax_residual(const KinkConfig& cfg, double X, double T) {
  return lax_residual(cfg, 1.0, X, T);
}

double series_rhs(const Profile& p, double epsilon, int order) {
  if (order < 0 || order > 3)
    throw ValidationError("series order must be in 0..3");
  require_field(p.u);
  const double u = p.u, u1 = p.u1, u2 = p.u2, u3 = p.u3, u4 = p.u4;
  const double iu = 1.0 / u;
  const double iu3 = iu * iu * iu, iu4 = iu3 * iu, iu5 = iu4 * iu,
               iu6 = iu5 * iu, iu7 = iu6 * iu, iu8 = iu7 * iu;
  double r = u1 / (u * u);  // order zero is exactly -d/dX(1/u)
  if (order >= 1) r += epsilon * (u2 * iu3 - 3.0 * u1 * u1 * iu4);
  if (order >= 2)
    r += epsilon * epsilon *
         (u3 * iu4 - 10.0 * u1 * u2 * iu5 + 15.0 * u1 * u1 * u1 * iu6);
  if (order >= 3)
    r += epsilon * epsilon * epsilon *
         (u4 * iu5 - 15.0 * u1 * u3 * iu6 - 10.0 * u2 * u2 * iu6 +
          105.0 * u1 * u1 * u2 * iu7 - 105.0 * u1 * u1 * u1 * u1 * iu8);
  return r;
}

namespace {

// Centered first derivative, second-order one-sided at the ends.
std::vector<double> grid_derivative(const std::vector<double>& f, double dx) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2 * dx);
  d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * dx);
  d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * dx);
  return d;
}

void check_sign(const std::vector<double>& u, int step) {
  bool pos = false, nonpos = false;
  for (double v : u) {
    if (v > 0.0) pos = true;
    if (v <= 0.0) nonpos = true;
  }
  if (pos && nonpos)
    throw ZeroCrossing(step, "u touches zero on the grid");
  if (!pos && !nonpos) throw ZeroCrossing(step, "empty grid");
}

}  // namespace

StateField make_state(std::vector<double> u, double x0, double dx,
                      double time) {
  if (u.size() < 3) throw ValidationError("state needs at least 3 grid points");
  if (!(dx > 0.0)) throw ValidationError("dx must be positive");
  StateField s;
  s.x0 = x0;
  s.dx = dx;
  s.time = time;
  s.u = std::move(u);
  check_sign(s.u, 0);
  std::vector<double> logu(s.u.size());
  for (std::size_t i = 0; i < s.u.size(); ++i)
    logu[i] = std::log(std::fabs(s.u[i]));
  std::vector<double> dlog = grid_derivative(logu, dx);
  s.rho.resize(s.u.size());
  for (std::size_t i = 0; i < s.u.size(); ++i) s.rho[i] = s.u[i] + dlog[i];
  return s;
}

std::vector<StateField> integrate_staggered(
    const StateField& initial, double dT, int steps, StaggeredVariant variant,
    const std::function<double(double)>& left_boundary) {
  if (!(dT > 0.0)) throw ValidationError("dT must be positive");
  if (steps < 0) throw ValidationError("steps must be nonnegative");
  check_sign(initial.u, 0);

  std::vector<StateField> out;
  out.reserve(steps + 1);
  out.push_back(initial);

  const std::size_t n = initial.u.size();
  const double dx = initial.dx;

  for (int step = 1; step <= steps; ++step) {
    const StateField& prev = out.back();
    std::vector<double> inv_u(n);
    for (std::size_t i = 0; i < n; ++i) inv_u[i] = 1.0 / prev.u[i];
    std::vector<double> flux = grid_derivative(inv_u, dx);

    StateField next;
    next.x0 = prev.x0;
    next.dx = dx;
    next.time = prev.time + dT;
    next.rho.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      next.rho[i] = prev.rho[i] - flux[i] * dT;

    next.u.resize(n);
    if (variant == StaggeredVariant::pointwise) {
      for (std::size_t i = 0; i < n; ++i)
        next.u[i] = prev.u[i] - flux[i] * dT;
    } else {
      // Recover u from u_X = u (rho - u) via w = 1/u, w' = 1 - rho w,
      // integrating left to right with RK4 on the updated rho.
      double u_left = left_boundary ? left_boundary(next.time)
                                    : prev.u[0] - flux[0] * dT;
      double w = 1.0 / u_left;
      next.u[0] = 1.0 / w;
      auto rho_at = [&](std::size_t i, double frac) {
        return next.rho[i] * (1.0 - frac) + next.rho[i + 1] * frac;
      };
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = dx;
        const double k1 = 1.0 - rho_at(i, 0.0) * w;
        const double k2 = 1.0 - rho_at(i, 0.5) * (w + 0.5 * h * k1);
        const double k3 = 1.0 - rho_at(i, 0.5) * (w + 0.5 * h * k2);
        const double k4 = 1.0 - rho_at(i, 1.0) * (w + h * k3);
        w += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        next.u[i + 1] = 1.0 / w;
      }
    }
    check_sign(next.u, step);
    out.push_back(std::move(next));
  }
  return out;
}

double hodograph_residual(const std::function<double(double)>& psi, double v,
                          double x, double t, const model::ModelParams& p) {
  return x - t * model::characteristic_speed(p, v) - psi(v);
}

FdDerivatives fd_derivatives(const std::function<double(double, double)>& u,
                             double X, double T, double step) {
  if (!(step > 0.0)) throw ValidationError("step must be positive");

  auto d1x = [&](double h) {
    return (u(X + h, T) - u(X - h, T)) / (2 * h);
  };
  auto d1t = [&](double h) {
    return (u(X, T + h) - u(X, T - h)) / (2 * h);
  };
  auto d2x = [&](double h) {
    return (u(X + h, T) - 2 * u(X, T) + u(X - h, T)) / (h * h);
  };
  auto dxt = [&](double h) {
    return (u(X + h, T + h) - u(X + h, T - h) - u(X - h, T + h) +
            u(X - h, T - h)) /
           (4 * h * h);
  };

  auto richardson = [](double coarse, double fine, double& err) {
    err = std::fabs(fine - coarse) / 3.0;
    return (4.0 * fine - coarse) / 3.0;
  };

  FdDerivatives r;
  r.sample.u = u(X, T);
  r.sample.uX = richardson(d1x(step), d1x(step / 2), r.err_uX);
  r.sample.uT = richardson(d1t(step), d1t(step / 2), r.err_uT);
  r.sample.uXX = richardson(d2x(step), d2x(step / 2), r.err_uXX);
  r.sample.uXT = richardson(dxt(step), dxt(step / 2), r.err_uXT);
  return r;
}

}  // namespace gfp::verify
