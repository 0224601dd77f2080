#include "gfp/tropical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include <nlohmann/json.hpp>

#include "gfp/errors.hpp"

namespace gfp::tropical {

namespace {

using json = nlohmann::ordered_json;

double as_double(double x) { return x; }
double as_double(const Rational& x) { return to_double(x); }

// Term data in the working scalar type: theta_j = k_j X + g_j T + d_j.
template <class S>
struct Terms {
  std::vector<S> k, g, d;
  std::vector<int> label;
  Case kase = Case::generic;
};

Terms<double> terms_double(const KinkConfig& cfg) {
  Terms<double> t;
  t.kase = cfg.kase();
  for (std::size_t p = 0; p < cfg.size(); ++p) {
    t.k.push_back(cfg.term(p).k);
    t.g.push_back(cfg.tcoef(p));
    t.d.push_back(cfg.term(p).delta);
    t.label.push_back(cfg.label(p));
  }
  return t;
}

bool kinematic_exact_available(const KinkConfig& cfg) {
  if (!cfg.exact() || !cfg.exact()->has_k()) return false;
  if (cfg.kase() == Case::degenerate && !cfg.exact()->has_omega())
    return false;
  return true;
}

bool geometry_exact_available(const KinkConfig& cfg) {
  return kinematic_exact_available(cfg) && cfg.exact()->has_delta();
}

Terms<Rational> terms_exact(const KinkConfig& cfg) {
  Terms<Rational> t;
  t.kase = cfg.kase();
  for (std::size_t p = 0; p < cfg.size(); ++p) {
    t.k.push_back(*cfg.k_exact(p));
    t.g.push_back(*cfg.tcoef_exact(p));
    t.d.push_back(*cfg.delta_exact(p));
    t.label.push_back(cfg.label(p));
  }
  return t;
}

template <class S>
struct Line {
  S v, q;  // X(T) = v*T + q
};

template <class S>
Line<S> line_of(const Terms<S>& t, std::size_t i, std::size_t j) {
  S dk = t.k[i] - t.k[j];
  return {-(t.g[i] - t.g[j]) / dk, -(t.d[i] - t.d[j]) / dk};
}

template <class S>
S theta_at(const Terms<S>& t, std::size_t p, const S& X, const S& T) {
  return t.k[p] * X + t.g[p] * T + t.d[p];
}

// Three-phase resonance. Generic case uses the closed product formulas,
// which stay exact for rational inputs; the degenerate case solves the
// 2x2 linear system. Returns false when no unique solution exists.
template <class S>
bool vertex_of(const Terms<S>& t, std::size_t i, std::size_t j, std::size_t l,
               S& X, S& T) {
  if (t.kase == Case::generic) {
    S den = (t.k[i] - t.k[j]) * (t.k[i] - t.k[l]) * (t.k[j] - t.k[l]);
    X = (t.k[i] * t.k[j] * (t.d[j] - t.d[i]) +
         t.k[i] * t.k[l] * (t.d[i] - t.d[l]) +
         t.k[j] * t.k[l] * (t.d[l] - t.d[j])) /
        den;
    T = t.k[i] * t.k[j] * t.k[l] *
        (t.k[i] * (t.d[l] - t.d[j]) + t.k[j] * (t.d[i] - t.d[l]) +
         t.k[l] * (t.d[j] - t.d[i])) /
        den;
    return true;
  }
  S a1 = t.k[i] - t.k[j], b1 = t.g[i] - t.g[j], c1 = t.d[j] - t.d[i];
  S a2 = t.k[i] - t.k[l], b2 = t.g[i] - t.g[l], c2 = t.d[l] - t.d[i];
  S det = a1 * b2 - a2 * b1;
  if (det == S(0)) return false;
  X = (c1 * b2 - c2 * b1) / det;
  T = (a1 * c2 - a2 * c1) / det;
  return true;
}

double dominance_tol(const Terms<double>&, double theta_scale) {
  return 1e-9 * std::max(1.0, std::fabs(theta_scale));
}
Rational dominance_tol(const Terms<Rational>&, const Rational&) {
  return Rational(0);
}

// Is phase p (tied with possibly others) maximal at (X, T)?
template <class S>
bool dominant_at(const Terms<S>& t, std::size_t p, const S& X, const S& T) {
  S th = theta_at(t, p, X, T);
  S tol = dominance_tol(t, th);
  for (std::size_t m = 0; m < t.k.size(); ++m) {
    if (m == p) continue;
    if (theta_at(t, m, X, T) > th + tol) return false;
  }
  return true;
}

template <class S>
bool strictly_dominant_at(const Terms<S>& t, std::size_t p, const S& X,
                          const S& T) {
  S th = theta_at(t, p, X, T);
  S tol = dominance_tol(t, th);
  for (std::size_t m = 0; m < t.k.size(); ++m) {
    if (m == p) continue;
    if (!(theta_at(t, m, X, T) + tol < th)) return false;
  }
  return true;
}

// ---- convex polygon clipping (regions) ----

template <class S>
using Poly = std::vector<std::array<S, 2>>;

template <class S>
Poly<S> clip_halfplane(const Poly<S>& poly, const S& a, const S& b,
                       const S& c) {
  Poly<S> out;
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e) {
    const auto& P = poly[e];
    const auto& Q = poly[(e + 1) % n];
    S vp = a * P[0] + b * P[1] + c;
    S vq = a * Q[0] + b * Q[1] + c;
    bool inp = vp >= S(0), inq = vq >= S(0);
    if (inp) out.push_back(P);
    if (inp != inq) {
      S s = vp / (vp - vq);
      out.push_back({P[0] + s * (Q[0] - P[0]), P[1] + s * (Q[1] - P[1])});
    }
  }
  return out;
}

template <class S>
S polygon_area2(const Poly<S>& poly) {  // twice the signed area
  S a(0);
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e) {
    const auto& P = poly[e];
    const auto& Q = poly[(e + 1) % n];
    a += P[0] * Q[1] - Q[0] * P[1];
  }
  return a;
}

template <class S>
std::array<S, 2> polygon_centroid(const Poly<S>& poly, const S& area2) {
  S cx(0), ct(0);
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e) {
    const auto& P = poly[e];
    const auto& Q = poly[(e + 1) % n];
    S cross = P[0] * Q[1] - Q[0] * P[1];
    cx += (P[0] + Q[0]) * cross;
    ct += (P[1] + Q[1]) * cross;
  }
  S denom = S(3) * area2;
  return {cx / denom, ct / denom};
}

// ---- skeleton kernel ----

struct RawSegment {
  std::size_t pi, pj;  // positions, pi < pj (so k_pi < k_pj)
  double from_X, from_T, to_X, to_T;
};

template <class S>
void collect_pair_segments(const Terms<S>& t, const Window& w,
                           std::vector<RawSegment>& out) {
  const std::size_t n = t.k.size();
  const S xmin = S(w.xmin), xmax = S(w.xmax);
  const S tmin = S(w.tmin), tmax = S(w.tmax);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Line<S> L = line_of(t, i, j);
      // Clip the line to the window: T range first, then X range.
      S tlo = tmin, thi = tmax;
      if (L.v == S(0)) {
        if (L.q < xmin || L.q > xmax) continue;
      } else {
        S ta = (xmin - L.q) / L.v;
        S tb = (xmax - L.q) / L.v;
        if (ta > tb) std::swap(ta, tb);
        tlo = std::max(tlo, ta);
        thi = std::min(thi, tb);
      }
      if (!(tlo < thi)) continue;

      // Breakpoints: three-phase resonances along the line.
      std::vector<S> cuts{tlo, thi};
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        // h_l(T) = A T + B, the phase gap theta_i - theta_l on the line.
        S A = (t.k[i] - t.k[l]) * L.v + (t.g[i] - t.g[l]);
        S B = (t.k[i] - t.k[l]) * L.q + (t.d[i] - t.d[l]);
        if (A == S(0)) continue;
        S root = -B / A;
        if (root > tlo && root < thi) cuts.push_back(root);
      }
      std::sort(cuts.begin(), cuts.end());
      if constexpr (std::is_same_v<S, Rational>) {
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      } else {
        // Analytically equal roots can round apart; collapse them so no
        // micro-interval survives between copies of one breakpoint.
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) {
                                 return std::fabs(a - b) <=
                                        1e-10 * (1.0 + std::fabs(a));
                               }),
                   cuts.end());
      }

      // Chebyshev-spaced interior samples plus the interval ends.
      static const int kSamples = 17;
      double nodes[kSamples];
      for (int m = 0; m < kSamples; ++m)
        nodes[m] = 0.5 + 0.5 * std::cos((2.0 * m + 1.0) * M_PI /
                                        (2.0 * kSamples));

      std::optional<std::array<S, 2>> open;  // current admissible run
      auto flush = [&]() {
        if (!open) return;
        const auto& seg = *open;
        if (!(seg[0] < seg[1])) {
          open.reset();
          return;
        }
        RawSegment r;
        r.pi = i;
        r.pj = j;
        r.from_T = as_double(seg[0]);
        r.to_T = as_double(seg[1]);
        r.from_X = as_double(S(L.v * seg[0] + L.q));
        r.to_X = as_double(S(L.v * seg[1] + L.q));
        out.push_back(r);
        open.reset();
      };

      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const S a = cuts[c], b = cuts[c + 1];
        bool ok = true;
        for (int m = 0; m < kSamples && ok; ++m) {
          S tm = a + (b - a) * S(nodes[m]);
          S xm = tm * L.v + L.q;
          ok = dominant_at(t, i, xm, tm);
        }
        // Exact comparisons at the breakpoints themselves.
        S xa = a * L.v + L.q, xb = b * L.v + L.q;
        if (ok) ok = dominant_at(t, i, xa, a);
        if (ok) ok = dominant_at(t, i, xb, b);
        if (ok) {
          if (open)
            (*open)[1] = b;
          else
            open = std::array<S, 2>{a, b};
        } else {
          flush();
        }
      }
      flush();
    }
  }
}

struct RawVertex {
  std::array<std::size_t, 3> positions;
  double X, T;
  std::optional<std::pair<Rational, Rational>> exact;
};

template <class S>
void collect_vertices(const Terms<S>& t, const Window& w,
                      std::vector<RawVertex>& out) {
  const std::size_t n = t.k.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        S X, T;
        if (!vertex_of(t, i, j, l, X, T)) continue;
        if (!(X > S(w.xmin) && X < S(w.xmax) && T > S(w.tmin) &&
              T < S(w.tmax)))
          continue;
        if (!dominant_at(t, i, X, T)) continue;
        RawVertex rv;
        rv.positions = {i, j, l};
        rv.X = as_double(X) + 0.0;  // normalise -0.0
        rv.T = as_double(T) + 0.0;
        if constexpr (std::is_same_v<S, Rational>)
          rv.exact = std::make_pair(X, T);
        out.push_back(rv);
      }
}

template <class S>
Skeleton build_skeleton_impl(const KinkConfig& cfg, const Terms<S>& t,
                             const Window& w) {
  Skeleton skel{cfg, w, {}, {}, {}, std::is_same_v<S, Rational>};

  // Regions: clip the window by the dominance half-planes of each term.
  const std::size_t n = t.k.size();
  for (std::size_t p = 0; p < n; ++p) {
    Poly<S> poly{{S(w.xmin), S(w.tmin)},
                 {S(w.xmax), S(w.tmin)},
                 {S(w.xmax), S(w.tmax)},
                 {S(w.xmin), S(w.tmax)}};
    for (std::size_t m = 0; m < n && !poly.empty(); ++m) {
      if (m == p) continue;
      poly = clip_halfplane(poly, S(t.k[p] - t.k[m]), S(t.g[p] - t.g[m]),
                            S(t.d[p] - t.d[m]));
    }
    if (poly.size() < 3) continue;
    S area2 = polygon_area2(poly);
    if (!(area2 > S(0))) continue;
    auto cen = polygon_centroid(poly, area2);
    std::array<S, 2> rep = cen;
    if (!strictly_dominant_at(t, p, rep[0], rep[1])) {
      bool found = false;
      for (const auto& v : poly) {
        std::array<S, 2> mid{(cen[0] + v[0]) / S(2), (cen[1] + v[1]) / S(2)};
        if (strictly_dominant_at(t, p, mid[0], mid[1])) {
          rep = mid;
          found = true;
          break;
        }
      }
      if (!found) continue;
    }
    Region r;
    r.index = t.label[p];
    r.k = as_double(t.k[p]);
    r.representative = {as_double(rep[0]), as_double(rep[1])};
    skel.regions.push_back(r);
  }

  // Segments.
  std::vector<RawSegment> raw;
  collect_pair_segments(t, w, raw);
  for (const RawSegment& r : raw) {
    ShockSegment s;
    s.i = t.label[r.pi];
    s.j = t.label[r.pj];
    s.from = {r.from_X, r.from_T};
    s.to = {r.to_X, r.to_T};
    ShockProps props = shock_properties(cfg, s.i, s.j);
    s.velocity = props.velocity;
    s.mass = props.mass;
    s.momentum = props.momentum;
    skel.segments.push_back(s);
  }
  std::sort(skel.segments.begin(), skel.segments.end(),
            [](const ShockSegment& a, const ShockSegment& b) {
              return std::tie(a.i, a.j, a.from.T) <
                     std::tie(b.i, b.j, b.from.T);
            });

  // Vertices: admissible triples merged within 1e-9.
  std::vector<RawVertex> rawv;
  collect_vertices(t, w, rawv);
  std::vector<int> cluster(rawv.size(), -1);
  int nclusters = 0;
  for (std::size_t a = 0; a < rawv.size(); ++a) {
    if (cluster[a] >= 0) continue;
    cluster[a] = nclusters++;
    for (std::size_t b = a + 1; b < rawv.size(); ++b) {
      if (cluster[b] >= 0) continue;
      if (std::hypot(rawv[a].X - rawv[b].X, rawv[a].T - rawv[b].T) <= 1e-9)
        cluster[b] = cluster[a];
    }
  }
  skel.vertices.resize(nclusters);
  std::vector<bool> seen(nclusters, false);
  for (std::size_t a = 0; a < rawv.size(); ++a) {
    Vertex& v = skel.vertices[cluster[a]];
    if (!seen[cluster[a]]) {
      v.X = rawv[a].X;
      v.T = rawv[a].T;
      v.exact = rawv[a].exact;
      seen[cluster[a]] = true;
    } else if (v.exact && rawv[a].exact && *v.exact != *rawv[a].exact) {
      v.exact.reset();
    }
    for (std::size_t pos : rawv[a].positions) {
      int lbl = t.label[pos];
      if (std::find(v.indices.begin(), v.indices.end(), lbl) ==
          v.indices.end())
        v.indices.push_back(lbl);
    }
  }
  for (Vertex& v : skel.vertices) std::sort(v.indices.begin(), v.indices.end());
  std::sort(skel.vertices.begin(), skel.vertices.end(),
            [](const Vertex& a, const Vertex& b) {
              return std::tie(a.T, a.X) < std::tie(b.T, b.X);
            });

  // Incident segments and the fission/fusion/exchange labelling.
  for (Vertex& v : skel.vertices) {
    for (std::size_t sidx = 0; sidx < skel.segments.size(); ++sidx) {
      const ShockSegment& s = skel.segments[sidx];
      if (std::hypot(s.to.X - v.X, s.to.T - v.T) <= 1e-9)
        v.incident_below.push_back(sidx);
      if (std::hypot(s.from.X - v.X, s.from.T - v.T) <= 1e-9)
        v.incident_above.push_back(sidx);
    }
    const std::size_t below = v.incident_below.size();
    const std::size_t above = v.incident_above.size();
    if (below == 1 && above >= 2)
      v.kind = VertexKind::fission;
    else if (above == 1 && below >= 2)
      v.kind = VertexKind::fusion;
    else
      v.kind = VertexKind::exchange;
  }

  // Conservation residuals, exact when the kinematic data is exact.
  for (Vertex& v : skel.vertices) {
    if (kinematic_exact_available(cfg)) {
      Rational rm(0), rp(0);
      for (std::size_t sidx : v.incident_below) {
        auto p = *shock_properties_exact(cfg, skel.segments[sidx].i,
                                         skel.segments[sidx].j);
        rm += p.mass;
        rp += p.momentum;
      }
      for (std::size_t sidx : v.incident_above) {
        auto p = *shock_properties_exact(cfg, skel.segments[sidx].i,
                                         skel.segments[sidx].j);
        rm -= p.mass;
        rp -= p.momentum;
      }
      v.residual_mass = to_double(rm);
      v.residual_momentum = to_double(rp);
    } else {
      double rm = 0, rp = 0;
      for (std::size_t sidx : v.incident_below) {
        rm += skel.segments[sidx].mass;
        rp += skel.segments[sidx].momentum;
      }
      for (std::size_t sidx : v.incident_above) {
        rm -= skel.segments[sidx].mass;
        rp -= skel.segments[sidx].momentum;
      }
      v.residual_mass = rm;
      v.residual_momentum = rp;
    }
  }

  return skel;
}

}  // namespace

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::fission:
      return "fission";
    case VertexKind::fusion:
      return "fusion";
    case VertexKind::exchange:
      return "exchange";
  }
  return "exchange";
}

Dominance dominant_index(const KinkConfig& cfg, double X, double T) {
  const std::size_t n = cfg.size();
  std::vector<double> theta(n);
  double best = -INFINITY, scale = 0.0;
  std::size_t best_pos = 0;
  for (std::size_t p = 0; p < n; ++p) {
    theta[p] = cfg.theta(p, X, T);
    scale = std::max(scale, std::fabs(theta[p]));
    if (theta[p] > best) {
      best = theta[p];
      best_pos = p;
    }
  }
  const double tol = 1e-12 * std::max(scale, 1e-300);
  Dominance d;
  d.dominant = cfg.label(best_pos);
  for (std::size_t p = 0; p < n; ++p)
    if (best - theta[p] <= tol) d.ties.push_back(cfg.label(p));
  std::sort(d.ties.begin(), d.ties.end());
  return d;
}

double asymptotic_u(const KinkConfig& cfg, double X, double T) {
  Dominance d = dominant_index(cfg, X, T);
  double sum = 0.0;
  for (int lbl : d.ties) sum += cfg.term(cfg.position_of(lbl)).k;
  return sum / double(d.ties.size());
}

PairLine pair_line(const KinkConfig& cfg, int i, int j) {
  if (i == j) throw DegenerateDirection("pair needs two distinct labels");
  Terms<double> t = terms_double(cfg);
  Line<double> L = line_of(t, cfg.position_of(i), cfg.position_of(j));
  return {L.v, L.q};
}

std::optional<PairLineExact> pair_line_exact(const KinkConfig& cfg, int i,
                                             int j) {
  if (i == j) throw DegenerateDirection("pair needs two distinct labels");
  if (!geometry_exact_available(cfg)) return std::nullopt;
  Terms<Rational> t = terms_exact(cfg);
  Line<Rational> L = line_of(t, cfg.position_of(i), cfg.position_of(j));
  return PairLineExact{L.v, L.q};
}

Point triple_vertex(const KinkConfig& cfg, int i, int j, int l) {
  if (i == j || i == l || j == l)
    throw DegenerateDirection("triple needs three distinct labels");
  Terms<double> t = terms_double(cfg);
  double X, T;
  if (!vertex_of(t, cfg.position_of(i), cfg.position_of(j),
                 cfg.position_of(l), X, T))
    throw DegenerateDirection("the three resonance lines are parallel");
  return {X, T};
}

std::optional<std::pair<Rational, Rational>> triple_vertex_exact(
    const KinkConfig& cfg, int i, int j, int l) {
  if (i == j || i == l || j == l)
    throw DegenerateDirection("triple needs three distinct labels");
  if (!geometry_exact_available(cfg)) return std::nullopt;
  Terms<Rational> t = terms_exact(cfg);
  Rational X, T;
  if (!vertex_of(t, cfg.position_of(i), cfg.position_of(j),
                 cfg.position_of(l), X, T))
    throw DegenerateDirection("the three resonance lines are parallel");
  return std::make_pair(X, T);
}

ShockProps shock_properties(const KinkConfig& cfg, int i, int j) {
  if (i == j) throw DegenerateDirection("pair needs two distinct labels");
  std::size_t pi = cfg.position_of(i), pj = cfg.position_of(j);
  double mass = cfg.term(pj).k - cfg.term(pi).k;
  // velocity = -(g_i - g_j)/(k_i - k_j); momentum = mass * velocity = g_i - g_j
  double momentum = cfg.tcoef(pi) - cfg.tcoef(pj);
  return {mass, momentum / mass, momentum};
}

std::optional<ShockPropsExact> shock_properties_exact(const KinkConfig& cfg,
                                                      int i, int j) {
  if (i == j) throw DegenerateDirection("pair needs two distinct labels");
  if (!kinematic_exact_available(cfg)) return std::nullopt;
  std::size_t pi = cfg.position_of(i), pj = cfg.position_of(j);
  Rational mass = *cfg.k_exact(pj) - *cfg.k_exact(pi);
  Rational momentum = *cfg.tcoef_exact(pi) - *cfg.tcoef_exact(pj);
  return ShockPropsExact{mass, momentum / mass, momentum};
}

Totals totals(const KinkConfig& cfg, double) {
  // The outermost states are the extreme wavenumbers at every time.
  std::size_t lo = 0, hi = cfg.size() - 1;  // terms sorted by ascending k
  Totals tt;
  tt.mass = cfg.term(hi).k - cfg.term(lo).k;
  tt.momentum = cfg.tcoef(lo) - cfg.tcoef(hi);
  return tt;
}

std::optional<TotalsExact> totals_exact(const KinkConfig& cfg) {
  if (!kinematic_exact_available(cfg)) return std::nullopt;
  std::size_t lo = 0, hi = cfg.size() - 1;
  return TotalsExact{*cfg.k_exact(hi) - *cfg.k_exact(lo),
                     *cfg.tcoef_exact(lo) - *cfg.tcoef_exact(hi)};
}

Skeleton build_skeleton(const KinkConfig& cfg, const Window& w,
                        bool prefer_exact) {
  if (!(w.xmin < w.xmax) || !(w.tmin < w.tmax))
    throw EmptyWindow("skeleton window must have positive extent");
  if (prefer_exact && geometry_exact_available(cfg))
    return build_skeleton_impl(cfg, terms_exact(cfg), w);
  return build_skeleton_impl(cfg, terms_double(cfg), w);
}

ConservationReport check_conservation(const Skeleton& skel) {
  ConservationReport rep;
  rep.exact_arithmetic = kinematic_exact_available(skel.cfg);
  for (std::size_t vi = 0; vi < skel.vertices.size(); ++vi) {
    const Vertex& v = skel.vertices[vi];
    ConservationEntry e;
    e.vertex = vi;
    if (rep.exact_arithmetic) {
      Rational rm(0), rp(0);
      for (std::size_t sidx : v.incident_below) {
        auto p = *shock_properties_exact(skel.cfg, skel.segments[sidx].i,
                                         skel.segments[sidx].j);
        rm += p.mass;
        rp += p.momentum;
      }
      for (std::size_t sidx : v.incident_above) {
        auto p = *shock_properties_exact(skel.cfg, skel.segments[sidx].i,
                                         skel.segments[sidx].j);
        rm -= p.mass;
        rp -= p.momentum;
      }
      e.residual_mass = to_double(rm);
      e.residual_momentum = to_double(rp);
    } else {
      e.residual_mass = v.residual_mass;
      e.residual_momentum = v.residual_momentum;
    }
    rep.max_abs_mass = std::max(rep.max_abs_mass, std::fabs(e.residual_mass));
    rep.max_abs_momentum =
        std::max(rep.max_abs_momentum, std::fabs(e.residual_momentum));
    rep.entries.push_back(e);
  }
  return rep;
}

PhaseShift phase_shift(const Skeleton& skel, std::pair<int, int> in1,
                       std::pair<int, int> in2, std::pair<int, int> out1,
                       std::pair<int, int> out2) {
  auto line = [&](std::pair<int, int> p) {
    return pair_line(skel.cfg, p.first, p.second);
  };
  PairLine a = line(in1), b = line(in2), c = line(out1), d = line(out2);

  auto intersect = [](const PairLine& p, const PairLine& q) -> Point {
    double scale = std::max({std::fabs(p.velocity), std::fabs(q.velocity), 1.0});
    if (std::fabs(p.velocity - q.velocity) <= 1e-14 * scale)
      throw ParallelTrajectories("trajectory pair is parallel");
    double T = (q.intercept - p.intercept) / (p.velocity - q.velocity);
    return {p.velocity * T + p.intercept, T};
  };

  PhaseShift ps;
  ps.in_center = intersect(a, b);
  ps.out_center = intersect(c, d);

  // Match incoming to outgoing shocks by velocity.
  auto close = [](double x, double y) {
    return std::fabs(x - y) <= 1e-12 * std::max({std::fabs(x), std::fabs(y), 1.0});
  };
  const PairLine* outs[2] = {&c, &d};
  const PairLine* ins[2] = {&a, &b};
  int match[2] = {-1, -1};
  for (int ii = 0; ii < 2; ++ii)
    for (int oo = 0; oo < 2; ++oo)
      if (close(ins[ii]->velocity, outs[oo]->velocity)) match[ii] = oo;
  if (match[0] < 0 || match[1] < 0 || match[0] == match[1])
    throw ValidationError("in/out velocities do not match pairwise");

  double dX = ps.out_center.X - ps.in_center.X;
  double dT = ps.out_center.T - ps.in_center.T;
  double shift[2];
  for (int ii = 0; ii < 2; ++ii)
    shift[ii] = dX - dT * ins[ii]->velocity;
  if (ins[0]->velocity >= ins[1]->velocity) {
    ps.shift_right = shift[0];
    ps.shift_left = shift[1];
  } else {
    ps.shift_right = shift[1];
    ps.shift_left = shift[0];
  }
  return ps;
}

std::string skeleton_to_json(const Skeleton& skel) {
  json doc;
  doc["regions"] = json::array();
  for (const Region& r : skel.regions) {
    json jr;
    jr["index"] = r.index;
    jr["k"] = r.k;
    jr["representative_point"] = {r.representative.X, r.representative.T};
    doc["regions"].push_back(jr);
  }
  doc["segments"] = json::array();
  for (const ShockSegment& s : skel.segments) {
    json js;
    js["i"] = s.i;
    js["j"] = s.j;
    js["from"] = {s.from.X, s.from.T};
    js["to"] = {s.to.X, s.to.T};
    js["velocity"] = s.velocity;
    js["mass"] = s.mass;
    js["momentum"] = s.momentum;
    doc["segments"].push_back(js);
  }
  doc["vertices"] = json::array();
  for (const Vertex& v : skel.vertices) {
    json jv;
    jv["indices"] = v.indices;
    jv["X"] = v.X;
    jv["T"] = v.T;
    jv["kind"] = to_string(v.kind);
    jv["residual_mass"] = v.residual_mass;
    jv["residual_momentum"] = v.residual_momentum;
    doc["vertices"].push_back(jv);
  }
  return doc.dump(2);
}

}  // namespace gfp::tropical
