#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gfp/errors.hpp"
#include "gfp/exact.hpp"
#include "gfp/model.hpp"
#include "gfp/tropical.hpp"
#include "helpers.hpp"

using namespace gfp;
using namespace gfp::tropical;
using doctest::Approx;

namespace {

KinkConfig fig2() { return gfp::test::bundled_config("three_kink"); }
KinkConfig fig3() { return gfp::test::bundled_config("five_kink"); }
KinkConfig fig4() { return gfp::test::bundled_config("eight_kink"); }
KinkConfig fusion4() { return gfp::test::bundled_config("degenerate_fusion"); }

Window window_of(const char* name) {
  return gfp::cli::window_of(gfp::test::bundled_scenario(name));
}

bool close_pt(const Point& a, double X, double T, double tol = 1e-9) {
  return std::fabs(a.X - X) <= tol && std::fabs(a.T - T) <= tol;
}

}  // namespace

TEST_CASE("dominant index and ties") {
  KinkConfig cfg = fig3();
  CHECK(dominant_index(cfg, 200.0, 0.0).dominant == 5);

  Dominance d = dominant_index(fig2(), -5.0, -6.0);
  CHECK(d.ties == std::vector<int>{1, 2, 3});

  KinkConfig one = KinkConfig::generic(1.0, {{2.0, 0.0, 0.0}});
  CHECK(dominant_index(one, 3.0, -8.0).dominant == 1);
}

TEST_CASE("asymptotic field value with the tie-mean rule") {
  CHECK(asymptotic_u(fig2(), -5.0, -6.0) == Approx(0.0));
  CHECK(asymptotic_u(fig2(), 40.0, 0.0) == 3.0);
  KinkConfig one = KinkConfig::generic(1.0, {{-2.5, 1.0, 0.0}});
  CHECK(asymptotic_u(one, 0.0, 0.0) == -2.5);
}

TEST_CASE("resonance lines of the three-kink set") {
  KinkConfig cfg = fig2();
  CHECK(pair_line(cfg, 1, 3).velocity == Approx(1.0 / 6.0));
  CHECK(pair_line(cfg, 1, 2).velocity == Approx(-0.5));
  CHECK(pair_line(cfg, 2, 3).velocity == Approx(1.0 / 3.0));

  auto ex = pair_line_exact(cfg, 1, 3);
  REQUIRE(ex.has_value());
  CHECK(ex->velocity == Rational(1, 6));

  // Stationary degenerate pair (both wavenumbers nonzero).
  CHECK(pair_line(fusion4(), 1, 2).velocity == 0.0);
  CHECK_THROWS_AS(pair_line(cfg, 2, 2), DegenerateDirection);
}

TEST_CASE("triple resonance of the three-kink set is exact") {
  KinkConfig cfg = fig2();
  auto v = triple_vertex_exact(cfg, 1, 2, 3);
  REQUIRE(v.has_value());
  CHECK(v->first == Rational(-5));
  CHECK(v->second == Rational(-6));

  Point p = triple_vertex(cfg, 1, 2, 3);
  CHECK(p.X == Approx(-5.0).epsilon(1e-12));
  CHECK(p.T == Approx(-6.0).epsilon(1e-12));

  // Permutation invariance.
  for (auto [a, b, c] : {std::array<int, 3>{2, 3, 1}, {3, 1, 2}, {2, 1, 3}}) {
    auto w = triple_vertex_exact(cfg, a, b, c);
    CHECK(w->first == v->first);
    CHECK(w->second == v->second);
  }
}

TEST_CASE("the eight-kink exchange point carries four pairwise triples") {
  KinkConfig cfg = fig4();
  for (auto [a, b, c] :
       {std::array<int, 3>{2, 3, 5}, {2, 3, 6}, {2, 5, 6}, {3, 5, 6}}) {
    auto v = triple_vertex_exact(cfg, a, b, c);
    REQUIRE(v.has_value());
    CHECK(v->first == Rational(-6));
    CHECK(v->second == Rational(-18));
  }
}

TEST_CASE("degenerate fusion vertex against hand-solved phases") {
  // theta_1 = theta_2 forces X = -4.4; theta_0 closes T = -5.4 - ln(3/2).
  Point p = triple_vertex(fusion4(), 0, 1, 2);
  CHECK(p.X == Approx(-4.4).epsilon(1e-12));
  CHECK(p.T == Approx(-5.4 - std::log(1.5)).epsilon(1e-12));
}

TEST_CASE("shock ledger of the three-kink set") {
  KinkConfig cfg = fig2();
  auto m13 = shock_properties_exact(cfg, 1, 3);
  auto m12 = shock_properties_exact(cfg, 1, 2);
  auto m23 = shock_properties_exact(cfg, 2, 3);
  REQUIRE(m13.has_value());
  CHECK(m13->mass == Rational(5));
  CHECK(m13->velocity == Rational(1, 6));
  CHECK(m12->mass == Rational(1));
  CHECK(m12->velocity == Rational(-1, 2));
  CHECK(m23->mass == Rational(4));
  CHECK(m23->velocity == Rational(1, 3));
  // Conservation through the collision, exactly.
  CHECK(m13->mass == m12->mass + m23->mass);
  CHECK(m13->momentum == m12->momentum + m23->momentum);
  // Orientation antisymmetry.
  CHECK(shock_properties(cfg, 3, 1).mass == -shock_properties(cfg, 1, 3).mass);
}

TEST_CASE("degenerate fusion ledger") {
  KinkConfig cfg = fusion4();  // labels: 0 (k=0), 1 (k=1), 2 (k=7/2), 3 (k=5)
  auto m01 = shock_properties_exact(cfg, 0, 1);
  CHECK(m01->mass == Rational(1));
  CHECK(m01->velocity == Rational(1));
  CHECK(shock_properties_exact(cfg, 1, 2)->mass == Rational(5, 2));
  CHECK(shock_properties_exact(cfg, 2, 3)->mass == Rational(3, 2));
  auto fused = shock_properties_exact(cfg, 0, 2);
  CHECK(fused->mass == Rational(7, 2));
  CHECK(fused->velocity == Rational(2, 7));
}

TEST_CASE("totals from the outermost states, with a quadrature oracle") {
  KinkConfig cfg = fig3();
  auto tot = totals_exact(cfg);
  REQUIRE(tot.has_value());
  CHECK(tot->mass == Rational(5));
  CHECK(tot->momentum == Rational(5, 4));

  // Independent route: quadrature of -u_T over a wide slab at fixed T.
  auto integrand = [&](double X) {
    return -exact::eval_derivatives(cfg, X, 0.0).uT;
  };
  double quad = gfp::test::adaptive_simpson(integrand, -100.0, 100.0, 1e-9);
  CHECK(quad == Approx(1.25).epsilon(1e-6));

  KinkConfig one = KinkConfig::generic(1.0, {{2.0, 0.0, 0.0}});
  Totals t1 = totals(one);
  CHECK(t1.mass == 0.0);
  CHECK(t1.momentum == 0.0);

  // Degenerate totals are differences of the outer frequencies.
  auto dtot = totals_exact(fusion4());
  CHECK(dtot->mass == Rational(5));
  CHECK(dtot->momentum == Rational(1));
}

TEST_CASE("three-kink skeleton is a single fission") {
  KinkConfig cfg = fig2();
  Skeleton skel = build_skeleton(cfg, window_of("three_kink"));
  CHECK(skel.exact_arithmetic);
  REQUIRE(skel.vertices.size() == 1);
  const Vertex& v = skel.vertices[0];
  CHECK(v.indices == std::vector<int>{1, 2, 3});
  CHECK(v.X == -5.0);
  CHECK(v.T == -6.0);
  CHECK(v.kind == VertexKind::fission);
  CHECK(v.incident_below.size() == 1);
  CHECK(v.incident_above.size() == 2);
  CHECK(skel.segments.size() == 3);
  CHECK(v.residual_mass == 0.0);
  CHECK(v.residual_momentum == 0.0);
}

TEST_CASE("five-kink skeleton: six segments, four regions, Y-network") {
  KinkConfig cfg = fig3();
  Skeleton skel = build_skeleton(cfg, window_of("five_kink"));
  CHECK(skel.exact_arithmetic);
  CHECK(skel.segments.size() == 6);

  std::vector<int> regions;
  for (const Region& r : skel.regions) regions.push_back(r.index);
  std::sort(regions.begin(), regions.end());
  CHECK(regions == std::vector<int>{1, 2, 4, 5});

  // One fission opens the transient middle state; two later fusions close
  // it: at (-9, 88/3) the right-moving {1,2} shock overtakes the left-moving
  // {2,4} shock (2 in, 1 out), and at (-21/5, 656/15) the {1,4} and {4,5}
  // shocks merge into the final {1,5} shock.
  REQUIRE(skel.vertices.size() == 3);
  CHECK(close_pt({skel.vertices[0].X, skel.vertices[0].T}, -1.0, 16.0 / 3.0));
  CHECK(skel.vertices[0].kind == VertexKind::fission);
  CHECK(close_pt({skel.vertices[1].X, skel.vertices[1].T}, -9.0, 88.0 / 3.0));
  CHECK(skel.vertices[1].kind == VertexKind::fusion);
  CHECK(close_pt({skel.vertices[2].X, skel.vertices[2].T}, -4.2, 656.0 / 15.0));
  CHECK(skel.vertices[2].kind == VertexKind::fusion);

  // The six separating pairs.
  std::vector<std::pair<int, int>> pairs;
  for (const ShockSegment& s : skel.segments) pairs.push_back({s.i, s.j});
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<int, int>> expected{{1, 2}, {1, 4}, {1, 5},
                                            {2, 4}, {2, 5}, {4, 5}};
  CHECK(pairs == expected);
}

TEST_CASE("eight-kink skeleton has the two-in/two-out exchange") {
  KinkConfig cfg = fig4();
  Skeleton skel = build_skeleton(cfg, window_of("eight_kink"));
  const Vertex* exchange = nullptr;
  for (const Vertex& v : skel.vertices)
    if (close_pt({v.X, v.T}, -6.0, -18.0)) exchange = &v;
  REQUIRE(exchange != nullptr);
  REQUIRE(exchange->exact.has_value());
  CHECK(exchange->exact->first == Rational(-6));
  CHECK(exchange->exact->second == Rational(-18));
  CHECK(exchange->indices == std::vector<int>{2, 3, 5, 6});
  CHECK(exchange->kind == VertexKind::exchange);
  CHECK(exchange->incident_below.size() == 2);
  CHECK(exchange->incident_above.size() == 2);
  CHECK(exchange->residual_mass == 0.0);
  CHECK(exchange->residual_momentum == 0.0);
}

TEST_CASE("two terms give one clipped line and no vertices") {
  KinkConfig cfg = KinkConfig::generic(0.5, {{-1.0, 0.0, 0.0}, {2.0, 1.0, 0.0}});
  Skeleton skel = build_skeleton(cfg, {-10.0, 10.0, -10.0, 10.0});
  CHECK(skel.segments.size() == 1);
  CHECK(skel.vertices.empty());
  CHECK_THROWS_AS(build_skeleton(cfg, {1.0, 1.0, -1.0, 1.0}), EmptyWindow);
}

TEST_CASE("degenerate fusion skeleton carries the fused shock") {
  KinkConfig cfg = fusion4();
  Skeleton skel = build_skeleton(cfg, window_of("degenerate_fusion"));
  REQUIRE(skel.vertices.size() == 2);
  CHECK(skel.vertices[0].kind == VertexKind::fusion);
  CHECK(skel.vertices[1].kind == VertexKind::fusion);
  CHECK(close_pt({skel.vertices[0].X, skel.vertices[0].T}, -4.4,
                 -5.4 - std::log(1.5)));
  CHECK(close_pt({skel.vertices[1].X, skel.vertices[1].T}, 20.0 / 3.0,
                 100.0 / 3.0 - std::log(1.5)));
  bool fused_present = false;
  for (const ShockSegment& s : skel.segments)
    if (s.i == 0 && s.j == 2) {
      fused_present = true;
      CHECK(s.velocity == Approx(2.0 / 7.0));
      CHECK(s.mass == Approx(3.5));
    }
  CHECK(fused_present);
}

TEST_CASE("conservation holds exactly for random rational configs") {
  std::mt19937 rng(1234);
  int with_vertices = 0;
  for (int trial = 0; trial < 110; ++trial) {
    KinkConfig cfg = gfp::test::random_rational_config(rng, 8);
    Skeleton skel = build_skeleton(cfg, {-40.0, 40.0, -40.0, 40.0});
    REQUIRE(skel.exact_arithmetic);
    ConservationReport rep = check_conservation(skel);
    CHECK(rep.exact_arithmetic);
    CHECK(rep.max_abs_mass == 0.0);
    CHECK(rep.max_abs_momentum == 0.0);
    if (!skel.vertices.empty()) ++with_vertices;
  }
  CHECK(with_vertices > 30);
}

TEST_CASE("scattering centers and position shifts of the eight-kink set") {
  KinkConfig cfg = fig4();
  Skeleton skel = build_skeleton(cfg, window_of("eight_kink"));
  PhaseShift ps = phase_shift(skel, {1, 5}, {5, 8}, {1, 4}, {4, 8});
  CHECK(ps.in_center.X == Approx(-39.0 / 20.0).epsilon(1e-9));
  CHECK(ps.in_center.T == Approx(19.0 / 5.0).epsilon(1e-9));
  CHECK(ps.out_center.X == Approx(-863.0 / 360.0).epsilon(1e-9));
  CHECK(ps.out_center.T == Approx(-151.0 / 45.0).epsilon(1e-9));

  // Galilean formula values; the mass-weighted shifts cancel exactly, so the
  // center of mass line is undisturbed by the scattering.
  CHECK(ps.shift_right == Approx(161.0 / 120.0).epsilon(1e-9));
  CHECK(ps.shift_left == Approx(-161.0 / 72.0).epsilon(1e-9));
  const double m_right = shock_properties(cfg, 1, 5).mass;
  const double m_left = shock_properties(cfg, 5, 8).mass;
  CHECK(m_right * ps.shift_right + m_left * ps.shift_left ==
        Approx(0.0).scale(1.0).epsilon(1e-9));

  // No interaction: identical in/out pairs shift nothing.
  PhaseShift none = phase_shift(skel, {1, 5}, {5, 8}, {1, 5}, {5, 8});
  CHECK(none.shift_right == Approx(0.0).scale(1.0));
  CHECK(none.shift_left == Approx(0.0).scale(1.0));

  CHECK_THROWS_AS(phase_shift(skel, {1, 5}, {4, 8}, {1, 4}, {5, 8}),
                  ParallelTrajectories);
}

TEST_CASE("segment midpoints sit on the two-state step") {
  KinkConfig cfg = fig2().with_eta(0.1);
  Skeleton skel = build_skeleton(cfg, window_of("three_kink"));
  for (const ShockSegment& s : skel.segments) {
    double X = 0.5 * (s.from.X + s.to.X);
    double T = 0.5 * (s.from.T + s.to.T);
    double mid = 0.5 * (cfg.term(cfg.position_of(s.i)).k +
                        cfg.term(cfg.position_of(s.j)).k);
    CHECK(std::fabs(exact::eval_multikink(cfg, X, T).u - mid) <= 1e-6);
  }
}

TEST_CASE("region interiors obey the measured-gap dominance bound") {
  KinkConfig cfg = fig2();
  Skeleton skel = build_skeleton(cfg, window_of("three_kink"));
  double kmax = 0.0;
  for (const PhaseTerm& t : cfg.terms()) kmax = std::max(kmax, std::fabs(t.k));
  for (const Region& r : skel.regions) {
    double X = r.representative.X, T = r.representative.T;
    std::vector<double> th(cfg.size());
    for (std::size_t j = 0; j < cfg.size(); ++j) th[j] = cfg.theta(j, X, T);
    std::sort(th.begin(), th.end());
    double gap = th[cfg.size() - 1] - th[cfg.size() - 2];
    double bound =
        2.0 * kmax * double(cfg.size()) * std::exp(-gap / cfg.eta());
    CHECK(std::fabs(exact::eval_multikink(cfg, X, T).u - r.k) <=
          std::max(bound, 1e-15));
  }
}

TEST_CASE("PT transform point-reflects the skeleton") {
  KinkConfig cfg = fig2();
  Window w = window_of("three_kink");
  Skeleton skel = build_skeleton(cfg, w);
  KinkConfig pt = model::pt_transform(cfg);
  Skeleton ref = build_skeleton(pt, {-w.xmax, -w.xmin, -w.tmax, -w.tmin});
  REQUIRE(ref.segments.size() == skel.segments.size());
  for (const ShockSegment& s : skel.segments) {
    bool found = false;
    for (const ShockSegment& r : ref.segments) {
      bool fwd = close_pt(r.from, -s.to.X, -s.to.T) &&
                 close_pt(r.to, -s.from.X, -s.from.T);
      bool bwd = close_pt(r.from, -s.from.X, -s.from.T) &&
                 close_pt(r.to, -s.to.X, -s.to.T);
      found = found || fwd || bwd;
    }
    CHECK(found);
  }
  REQUIRE(ref.vertices.size() == skel.vertices.size());
  for (const Vertex& v : skel.vertices) {
    bool found = false;
    for (const Vertex& r : ref.vertices)
      found = found || close_pt({r.X, r.T}, -v.X, -v.T);
    CHECK(found);
  }
}

TEST_CASE("skeleton serialises with the documented field names") {
  Skeleton skel = build_skeleton(fig2(), window_of("three_kink"));
  std::string doc = skeleton_to_json(skel);
  for (const char* key :
       {"\"regions\"", "\"segments\"", "\"vertices\"", "\"index\"", "\"k\"",
        "\"representative_point\"", "\"i\"", "\"j\"", "\"from\"", "\"to\"",
        "\"velocity\"", "\"mass\"", "\"momentum\"", "\"indices\"", "\"X\"",
        "\"T\"", "\"kind\"", "\"residual_mass\"", "\"residual_momentum\""})
    CHECK(doc.find(key) != std::string::npos);
}
