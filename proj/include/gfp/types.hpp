#ifndef GFP_TYPES_HPP
#define GFP_TYPES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gfp/rational.hpp"

namespace gfp {

// The structural parameter Delta = c4*c1^2 + c2*c3^2 splits the model into
// two regimes with different scalings, phases and shock kinematics.
enum class Case { generic, degenerate };

// One exponential phase of the linearising potential. In the generic case
// theta_j = k_j X - T/k_j + delta_j (omega unused); in the degenerate case
// theta_j = k_j X - omega_j T + delta_j.
struct PhaseTerm {
  double k = 0.0;
  double delta = 0.0;
  double omega = 0.0;
};

// Optional exact mirror of the term data. Each vector is either empty or has
// one entry per term; delta may be absent even when k is exact (irrational
// offsets occur in the bundled degenerate scenarios).
struct ExactTerms {
  std::vector<Rational> k;
  std::vector<Rational> delta;
  std::vector<Rational> omega;

  bool has_k() const { return !k.empty(); }
  bool has_delta() const { return !delta.empty(); }
  bool has_omega() const { return !omega.empty(); }
};

// Validated multi-kink configuration: terms sorted by ascending k, all k
// pairwise distinct, eta > 0. Generic: every k nonzero. Degenerate: at most
// one k == 0 term (with omega == 0), all others sharing one common omega.
//
// Terms carry stable labels: generic terms are labelled 1..N in ascending-k
// order; degenerate terms reserve label 0 for the k == 0 term and use 1..N
// for the nonzero terms in ascending-k order.
class KinkConfig {
 public:
  // Builders validate and sort; positive amplitudes a_j are absorbed as
  // delta_j += eta*ln(a_j). Throw ValidationError on violations.
  static KinkConfig generic(double eta, std::vector<PhaseTerm> terms,
                            std::optional<ExactTerms> exact = std::nullopt,
                            const std::vector<double>& amplitudes = {});
  static KinkConfig degenerate(double eta, std::vector<PhaseTerm> terms,
                               std::optional<ExactTerms> exact = std::nullopt,
                               const std::vector<double>& amplitudes = {});

  Case kase() const { return kase_; }
  double eta() const { return eta_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  const PhaseTerm& term(std::size_t pos) const { return terms_[pos]; }

  int label(std::size_t pos) const { return labels_[pos]; }
  const std::vector<int>& labels() const { return labels_; }
  // Throws ValidationError for an unknown label.
  std::size_t position_of(int label) const;

  // Time coefficient of the phase: theta_j = k_j X + tcoef_j T + delta_j.
  // Generic: -1/k_j. Degenerate: -omega_j.
  double tcoef(std::size_t pos) const;
  double theta(std::size_t pos, double X, double T) const;

  const std::optional<ExactTerms>& exact() const { return exact_; }
  std::optional<Rational> k_exact(std::size_t pos) const;
  std::optional<Rational> delta_exact(std::size_t pos) const;
  // Generic: -1/k_j; degenerate: -omega_j. Requires the matching exact data.
  std::optional<Rational> tcoef_exact(std::size_t pos) const;

  // Same terms, different viscosity.
  KinkConfig with_eta(double eta) const;

 private:
  KinkConfig() = default;
  static KinkConfig build(Case kase, double eta, std::vector<PhaseTerm> terms,
                          std::optional<ExactTerms> exact,
                          const std::vector<double>& amplitudes);

  Case kase_ = Case::generic;
  double eta_ = 1.0;
  std::vector<PhaseTerm> terms_;
  std::vector<int> labels_;
  std::optional<ExactTerms> exact_;
};

// Field value and derivatives at one point (X, T).
struct FieldSample {
  double u = 0.0;
  double uX = 0.0;
  double uT = 0.0;
  double uXX = 0.0;
  double uXT = 0.0;
};

// Rectangular evaluation grid, row-major in T then X.
struct GridSpec {
  double xmin = -1.0, xmax = 1.0;
  int nx = 2;
  double tmin = -1.0, tmax = 1.0;
  int nt = 2;

  double x_at(int i) const {
    return nx < 2 ? xmin : xmin + (xmax - xmin) * i / double(nx - 1);
  }
  double t_at(int j) const {
    return nt < 2 ? tmin : tmin + (tmax - tmin) * j / double(nt - 1);
  }
};

}  // namespace gfp

#endif  // GFP_TYPES_HPP
