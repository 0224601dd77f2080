#ifndef GFP_TROPICAL_HPP
#define GFP_TROPICAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfp/types.hpp"

namespace gfp::tropical {

struct Point {
  double X = 0.0;
  double T = 0.0;
};

struct Window {
  double xmin = 0.0, xmax = 0.0, tmin = 0.0, tmax = 0.0;
};

// Indices in this module are term labels (see KinkConfig): 1..N generic,
// 0..N degenerate with 0 the k = 0 term.

struct Dominance {
  int dominant = 0;        // label of the argmax phase
  std::vector<int> ties;   // all labels within 1e-12*max|theta|, sorted
};
Dominance dominant_index(const KinkConfig& cfg, double X, double T);

// k of the dominant term; arithmetic mean of the tied k's on an n-fold tie.
double asymptotic_u(const KinkConfig& cfg, double X, double T);

// Resonance line theta_i = theta_j as X(T) = velocity*T + intercept.
struct PairLine {
  double velocity = 0.0;
  double intercept = 0.0;
};
PairLine pair_line(const KinkConfig& cfg, int i, int j);
struct PairLineExact {
  Rational velocity, intercept;
};
std::optional<PairLineExact> pair_line_exact(const KinkConfig& cfg, int i,
                                             int j);

// Three-phase resonance point; exact rational for rational inputs.
Point triple_vertex(const KinkConfig& cfg, int i, int j, int l);
std::optional<std::pair<Rational, Rational>> triple_vertex_exact(
    const KinkConfig& cfg, int i, int j, int l);

// mass = k_j - k_i, case-correct velocity, momentum = mass*velocity.
struct ShockProps {
  double mass = 0.0, velocity = 0.0, momentum = 0.0;
};
ShockProps shock_properties(const KinkConfig& cfg, int i, int j);
struct ShockPropsExact {
  Rational mass, velocity, momentum;
};
std::optional<ShockPropsExact> shock_properties_exact(const KinkConfig& cfg,
                                                      int i, int j);

// Total mass and momentum carried between the outermost states.
struct Totals {
  double mass = 0.0, momentum = 0.0;
};
Totals totals(const KinkConfig& cfg, double T = 0.0);
struct TotalsExact {
  Rational mass, momentum;
};
std::optional<TotalsExact> totals_exact(const KinkConfig& cfg);

struct ShockSegment {
  int i = 0, j = 0;        // labels with k_i < k_j (left / right states)
  Point from, to;          // from.T <= to.T
  double velocity = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
};

enum class VertexKind { fission, fusion, exchange };
std::string to_string(VertexKind k);

struct Vertex {
  std::vector<int> indices;  // participating labels, sorted
  double X = 0.0, T = 0.0;
  std::optional<std::pair<Rational, Rational>> exact;
  VertexKind kind = VertexKind::exchange;
  std::vector<std::size_t> incident_below;  // segment ids ending here
  std::vector<std::size_t> incident_above;  // segment ids starting here
  double residual_mass = 0.0;
  double residual_momentum = 0.0;
};

struct Region {
  int index = 0;  // label
  double k = 0.0;
  Point representative;
};

struct Skeleton {
  KinkConfig cfg;
  Window window;
  std::vector<Region> regions;
  std::vector<ShockSegment> segments;
  std::vector<Vertex> vertices;
  bool exact_arithmetic = false;
};

// Enumerates all admissible resonance sub-segments inside the window,
// computes admissible triple vertices, merges coincident vertices (1e-9)
// into higher-order exchange events, and labels every vertex by counting
// incident segments below/above its time. Uses exact rational arithmetic
// when the config carries exact data and prefer_exact is set.
Skeleton build_skeleton(const KinkConfig& cfg, const Window& window,
                        bool prefer_exact = true);

struct ConservationEntry {
  std::size_t vertex = 0;
  double residual_mass = 0.0;
  double residual_momentum = 0.0;
};
struct ConservationReport {
  std::vector<ConservationEntry> entries;
  double max_abs_mass = 0.0;
  double max_abs_momentum = 0.0;
  bool exact_arithmetic = false;
};
// Per-vertex mass/momentum balance; violations are reported, never thrown.
ConservationReport check_conservation(const Skeleton& skel);

struct PhaseShift {
  double shift_right = 0.0;  // shock with the larger velocity
  double shift_left = 0.0;
  Point in_center, out_center;
};
// in1/in2 and out1/out2 name shocks by their label pairs; the incoming pair
// must be non-parallel (likewise outgoing) and velocities must match
// pairwise between in and out.
PhaseShift phase_shift(const Skeleton& skel, std::pair<int, int> in1,
                       std::pair<int, int> in2, std::pair<int, int> out1,
                       std::pair<int, int> out2);

// JSON document with regions / segments / vertices arrays.
std::string skeleton_to_json(const Skeleton& skel);

}  // namespace gfp::tropical

#endif  // GFP_TROPICAL_HPP
