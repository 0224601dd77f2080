#include "gfp/model.hpp"

#include <cmath>
#include <utility>

#include "gfp/errors.hpp"

namespace gfp::model {

double structural_delta(const ModelParams& p) {
  return structural_delta_of(p);
}

CaseTag classify_case(const ModelParams& p, double tol) {
  if (tol < 0.0) throw ValidationError("tolerance must be nonnegative");
  double a = std::fabs(p.c4 * p.c1 * p.c1);
  double b = std::fabs(p.c2 * p.c3 * p.c3);
  double scale = std::max({a, b, 1e-300});
  double delta = structural_delta(p);
  Case kase = std::fabs(delta) > tol * scale ? Case::generic : Case::degenerate;
  return {kase, delta};
}

namespace {

template <typename S>
bool is_zero(const S& x) {
  return x == S(0);
}

template <typename S>
BasicFrameMap<S> make_frame_impl(const BasicModelParams<S>& p, Case kase,
                                 bool eta_rescaled, FrameKind kind) {
  if (is_zero(p.eta)) throw InvalidCoefficients("eta must be nonzero");
  if (is_zero(p.sigma)) throw InvalidCoefficients("sigma must be nonzero");
  if (is_zero(p.c1))
    throw InvalidCoefficients(
        "c1 = 0 reduces to a Bateman-Burgers equation (solvable by heat "
        "kernel); not covered by these frames");
  if (eta_rescaled && kind != FrameKind::parameter_free)
    throw ValidationError("eta rescaling applies to the parameter-free frame");

  const S delta = structural_delta_of(p);
  BasicFrameMap<S> f;
  f.kase = kase;
  f.eta_rescaled = eta_rescaled;
  f.kind = kind;

  const S galilei = p.c2 / p.c1;  // X is built from x - (c2/c1) t

  if (kase == Case::generic) {
    if (kind == FrameKind::visco_pert) {
      if (is_zero(delta))
        throw InvalidCoefficients("visco_pert frame needs Delta != 0");
      if (is_zero(p.c3)) throw InvalidCoefficients("visco_pert needs c3 != 0");
      f.a_x = S(1) / delta;
      f.a_t = S(1) / (p.c1 * p.c3 * p.c3);
      f.a_u = p.c1 / (p.c3 * p.sigma);
      f.b_u = S(1);
    } else if (!is_zero(p.c3)) {
      f.a_x = p.c3 / (p.c1 * p.eta);
      f.a_t = delta / (p.c1 * p.c1 * p.c3 * p.eta);
      f.a_u = p.c1 / (p.c3 * p.sigma);
      f.b_u = S(1);
    } else {
      // c3 = 0 fallback; needs c1*c4 != 0 and lands on the same target form.
      if (is_zero(p.c4))
        throw InvalidCoefficients(
            "c3 = c4 = 0 is solvable by direct integration; not covered by "
            "these frames");
      f.a_x = p.c4 / (p.c1 * p.eta * p.eta);
      f.a_t = S(1);
      f.a_u = p.c1 * p.eta / (p.c4 * p.sigma);
      f.b_u = S(0);
    }
  } else {
    if (is_zero(p.c3))
      throw InvalidCoefficients("degenerate frame needs c1*c3 != 0");
    f.a_x = p.c3 / (p.c1 * p.eta);
    f.a_t = S(1);
    f.a_u = p.c1 / (p.c3 * p.sigma);
    f.b_u = S(1);
  }

  if (eta_rescaled) {
    f.a_x = f.a_x / p.eta;
    f.a_t = f.a_t / p.eta;
  }
  f.b_x = -galilei * f.a_x;
  return f;
}

}  // namespace

FrameMap make_frame(const ModelParams& p, const CaseTag& tag,
                    bool eta_rescaled, FrameKind kind) {
  return make_frame_impl<double>(p, tag.kase, eta_rescaled, kind);
}

FrameMapExact make_frame_exact(const ModelParamsExact& p, Case kase,
                               bool eta_rescaled, FrameKind kind) {
  return make_frame_impl<Rational>(p, kase, eta_rescaled, kind);
}

Dispersion dispersion(const ModelParams& p, double k) {
  const double den = p.eta * p.c1 * p.c3 * k + p.c3 * p.c3;
  const double scale =
      std::fabs(p.eta * p.c1 * p.c3 * k) + std::fabs(p.c3 * p.c3);
  if (std::fabs(den) <= 1e-14 * std::max(scale, 1e-300))
    throw PoleAtK("dispersion denominator vanishes at k");
  Dispersion d;
  d.omega = (p.eta * p.c2 * p.c3 * k * k - p.c1 * p.c4 * k) / den;
  const double g = p.c1 * p.eta * k + p.c3;
  d.group_dispersion = 2.0 * p.eta * structural_delta(p) / (g * g * g);
  return d;
}

double characteristic_speed(const ModelParams& p, double v) {
  const double den = p.c3 * p.sigma + p.c1 * v;
  const double scale = std::fabs(p.c3 * p.sigma) + std::fabs(p.c1 * v);
  if (std::fabs(den) <= 1e-14 * std::max(scale, 1e-300))
    throw SingularDenominator("characteristic speed undefined at this v");
  return p.c2 / p.c1 -
         p.sigma * p.sigma * structural_delta(p) / (p.c1 * den * den);
}

KinkConfig pt_transform(const KinkConfig& cfg) {
  std::vector<PhaseTerm> terms = cfg.terms();
  for (PhaseTerm& t : terms) {
    t.k = -t.k;
    if (cfg.kase() == Case::degenerate) t.omega = -t.omega;
  }
  std::optional<ExactTerms> exact;
  if (cfg.exact()) {
    ExactTerms ex = *cfg.exact();
    for (Rational& k : ex.k) k = -k;
    if (cfg.kase() == Case::degenerate)
      for (Rational& w : ex.omega) w = -w;
    exact = std::move(ex);
  }
  return cfg.kase() == Case::generic
             ? KinkConfig::generic(cfg.eta(), std::move(terms),
                                   std::move(exact))
             : KinkConfig::degenerate(cfg.eta(), std::move(terms),
                                      std::move(exact));
}

}  // namespace gfp::model
