#include "gfp/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gfp/errors.hpp"

namespace gfp {

namespace {

bool nearly_equal(double a, double b) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) <= 1e-12 * scale;
}

}  // namespace

KinkConfig KinkConfig::build(Case kase, double eta,
                             std::vector<PhaseTerm> terms,
                             std::optional<ExactTerms> exact,
                             const std::vector<double>& amplitudes) {
  const std::size_t n = terms.size();
  if (n == 0) throw ValidationError("config needs at least one term");
  if (!(eta > 0.0)) throw ValidationError("eta must be positive");
  if (!amplitudes.empty() && amplitudes.size() != n)
    throw ValidationError("amplitude list length mismatch");
  if (exact) {
    auto check = [&](const std::vector<Rational>& v, const char* what) {
      if (!v.empty() && v.size() != n)
        throw ValidationError(std::string("exact ") + what +
                              " length mismatch");
    };
    check(exact->k, "k");
    check(exact->delta, "delta");
    check(exact->omega, "omega");
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (!amplitudes.empty()) {
      double a = amplitudes[j];
      if (!(a > 0.0))
        throw ValidationError("term amplitudes must be positive");
      terms[j].delta += eta * std::log(a);
      if (exact && exact->has_delta()) exact->delta.clear();
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return terms[a].k < terms[b].k;
  });

  KinkConfig cfg;
  cfg.kase_ = kase;
  cfg.eta_ = eta;
  cfg.terms_.reserve(n);
  for (std::size_t j : order) cfg.terms_.push_back(terms[j]);
  if (exact) {
    ExactTerms ex;
    auto permute = [&](const std::vector<Rational>& src,
                       std::vector<Rational>& dst) {
      if (src.empty()) return;
      dst.reserve(n);
      for (std::size_t j : order) dst.push_back(src[j]);
    };
    permute(exact->k, ex.k);
    permute(exact->delta, ex.delta);
    permute(exact->omega, ex.omega);
    cfg.exact_ = std::move(ex);
  }

  // Distinct k: exact equality when rationals are present, 1e-12 relative
  // otherwise (the vertex formulas divide by Vandermonde factors).
  for (std::size_t j = 0; j + 1 < n; ++j) {
    bool dup;
    if (cfg.exact_ && cfg.exact_->has_k())
      dup = cfg.exact_->k[j] == cfg.exact_->k[j + 1];
    else
      dup = nearly_equal(cfg.terms_[j].k, cfg.terms_[j + 1].k);
    if (dup) throw ValidationError("wavenumbers must be pairwise distinct");
  }

  int zero_pos = -1;
  for (std::size_t j = 0; j < n; ++j) {
    bool is_zero = cfg.exact_ && cfg.exact_->has_k()
                       ? cfg.exact_->k[j] == 0
                       : cfg.terms_[j].k == 0.0;
    if (is_zero) zero_pos = static_cast<int>(j);
  }

  if (kase == Case::generic) {
    if (zero_pos >= 0)
      throw ValidationError("generic case requires nonzero wavenumbers");
    for (std::size_t j = 0; j < n; ++j) cfg.terms_[j].omega = 0.0;
  } else {
    double omega0 = 0.0;
    bool have_omega0 = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<int>(j) == zero_pos) {
        if (cfg.terms_[j].omega != 0.0)
          throw ValidationError("the k = 0 term must have omega = 0");
        continue;
      }
      if (!have_omega0) {
        omega0 = cfg.terms_[j].omega;
        have_omega0 = true;
      } else if (!nearly_equal(cfg.terms_[j].omega, omega0)) {
        throw ValidationError("nonzero-k terms must share one common omega");
      }
    }
  }

  cfg.labels_.resize(n);
  int next = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (static_cast<int>(j) == zero_pos)
      cfg.labels_[j] = 0;
    else
      cfg.labels_[j] = next++;
  }
  return cfg;
}

KinkConfig KinkConfig::generic(double eta, std::vector<PhaseTerm> terms,
                               std::optional<ExactTerms> exact,
                               const std::vector<double>& amplitudes) {
  return build(Case::generic, eta, std::move(terms), std::move(exact),
               amplitudes);
}

KinkConfig KinkConfig::degenerate(double eta, std::vector<PhaseTerm> terms,
                                  std::optional<ExactTerms> exact,
                                  const std::vector<double>& amplitudes) {
  return build(Case::degenerate, eta, std::move(terms), std::move(exact),
               amplitudes);
}

std::size_t KinkConfig::position_of(int label) const {
  for (std::size_t j = 0; j < labels_.size(); ++j)
    if (labels_[j] == label) return j;
  throw ValidationError("unknown term label " + std::to_string(label));
}

double KinkConfig::tcoef(std::size_t pos) const {
  const PhaseTerm& t = terms_[pos];
  return kase_ == Case::generic ? -1.0 / t.k : -t.omega;
}

double KinkConfig::theta(std::size_t pos, double X, double T) const {
  const PhaseTerm& t = terms_[pos];
  return t.k * X + tcoef(pos) * T + t.delta;
}

std::optional<Rational> KinkConfig::k_exact(std::size_t pos) const {
  if (exact_ && exact_->has_k()) return exact_->k[pos];
  return std::nullopt;
}

std::optional<Rational> KinkConfig::delta_exact(std::size_t pos) const {
  if (exact_ && exact_->has_delta()) return exact_->delta[pos];
  return std::nullopt;
}

std::optional<Rational> KinkConfig::tcoef_exact(std::size_t pos) const {
  if (!exact_) return std::nullopt;
  if (kase_ == Case::generic) {
    if (!exact_->has_k()) return std::nullopt;
    return Rational(-1) / exact_->k[pos];
  }
  if (!exact_->has_omega()) {
    // A lone k = 0 term still has an exact tcoef.
    if (labels_[pos] == 0) return Rational(0);
    return std::nullopt;
  }
  return -exact_->omega[pos];
}

KinkConfig KinkConfig::with_eta(double eta) const {
  KinkConfig cfg = *this;
  if (!(eta > 0.0)) throw ValidationError("eta must be positive");
  cfg.eta_ = eta;
  return cfg;
}

}  // namespace gfp
