#ifndef GFP_SCENARIO_HPP
#define GFP_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "gfp/backlund.hpp"
#include "gfp/exact.hpp"
#include "gfp/model.hpp"
#include "gfp/tropical.hpp"
#include "gfp/types.hpp"
#include "gfp/verify.hpp"

namespace gfp::cli {

// One numeric field; carries the exact rational when the scenario wrote it
// as a fraction string, so exact-arithmetic paths survive a round trip.
struct ScalarSpec {
  double value = 0.0;
  std::optional<Rational> exact;

  static ScalarSpec of(double v) { return {v, std::nullopt}; }
  static ScalarSpec of_exact(const Rational& q) { return {to_double(q), q}; }
  static ScalarSpec of_exact(const std::string& text);
  bool operator==(const ScalarSpec&) const = default;
};

struct TermSpec {
  ScalarSpec k;
  ScalarSpec delta;
  bool operator==(const TermSpec&) const = default;
};

struct TravellingSpec {
  exact::WaveFamily family = exact::WaveFamily::tanh_kink;
  double K1 = 0.0, K2 = 0.0, c = 1.0;
  bool operator==(const TravellingSpec&) const = default;
};

struct BacklundSpec {
  double lambda1 = 0.0;
  std::optional<double> lambda2;
  bool operator==(const BacklundSpec&) const = default;
};

struct IntegratorSpec {
  double dT = 1e-2;
  int steps = 10;
  verify::StaggeredVariant variant = verify::StaggeredVariant::pointwise;
  bool operator==(const IntegratorSpec&) const = default;
};

struct ModelSpec {
  ScalarSpec c1, c2, c3, c4, sigma, eta;
  bool operator==(const ModelSpec&) const = default;
};

struct Scenario {
  std::string name;
  Case kase = Case::generic;
  ScalarSpec eta = ScalarSpec::of(1.0);
  std::vector<TermSpec> terms;
  std::optional<ScalarSpec> omega0;  // degenerate only
  GridSpec grid;
  std::optional<ModelSpec> model;
  std::optional<TravellingSpec> travelling;
  std::optional<BacklundSpec> backlund;
  std::optional<IntegratorSpec> integrator;

  bool operator==(const Scenario&) const;
};

// Throws ParseError on malformed JSON, ValidationError on inconsistencies.
Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& sc);
Scenario load_scenario_file(const std::string& path);

// The five bundled parameter sets driving the multi-kink figures.
std::vector<Scenario> bundled_scenarios();

// Builds the validated kink configuration (exact data attached when
// exact_arith and the scenario carries fractions).
KinkConfig config_of(const Scenario& sc, bool exact_arith = true);
tropical::Window window_of(const Scenario& sc);

struct RunFlags {
  std::string out_dir = ".";
  std::optional<std::pair<int, int>> grid_override;  // nx, nt
  std::optional<double> eta_override;
  std::optional<BacklundSpec> lambda_override;
  std::optional<verify::StaggeredVariant> variant_override;
  bool exact_arith = true;
};

// Commands: eval | skeleton | backlund | verify | integrate | figures.
// Writes artifacts under flags.out_dir and returns 0; throws gfp::Error.
int run(const std::string& command, const Scenario& sc, const RunFlags& flags);
int run_figures(const RunFlags& flags);

}  // namespace gfp::cli

#endif  // GFP_SCENARIO_HPP
