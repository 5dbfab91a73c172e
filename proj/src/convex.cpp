#include "projconvex/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "projconvex/smalllp.hpp"

namespace projconvex {

namespace {

Eigen::MatrixXd orthonormal_complement(const Eigen::VectorXd& c) {
  // Columns span c-perp.
  const int d = static_cast<int>(c.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d) -
                      c.normalized() * c.normalized().transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  return svd.matrixU().leftCols(d - 1);
}

// Deterministic pair subsampling: all pairs when small, strided otherwise.
template <typename F>
void for_sample_pairs(size_t n, size_t budget, F&& fn) {
  size_t total = n * (n - 1) / 2;
  if (total <= budget) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) fn(i, j);
    return;
  }
  size_t stride = total / budget + 1;
  size_t count = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (count++ % stride == 0) fn(i, j);
}

}  // namespace

ConvexBody ConvexBody::from_halfspaces(int dim,
                                       std::vector<Eigen::VectorXd> halfspaces,
                                       const Eigen::VectorXd& interior,
                                       std::vector<Eigen::VectorXd> samples) {
  ConvexBody b;
  b.dim = dim;
  for (auto& h : halfspaces) b.halfspaces.push_back(h.normalized());
  b.interior = interior.normalized();
  for (auto& h : b.halfspaces) {
    if (h.dot(b.interior) <= 1e-9)
      throw Error("ConvexBody: interior point does not satisfy half-space");
  }
  for (auto& s : samples) b.samples.push_back(s.normalized());
  return b;
}

ConvexBody ConvexBody::elliptic_ball(const Eigen::VectorXd& center,
                                     double radius, int n_boundary_samples) {
  const int d = static_cast<int>(center.size());
  ConvexBody b;
  b.dim = d - 1;
  b.interior = center.normalized();
  Eigen::MatrixXd q = std::cos(radius) * std::cos(radius) *
                          Eigen::MatrixXd::Identity(d, d) -
                      b.interior * b.interior.transpose();
  b.quadrics.push_back(q / q.norm());
  Eigen::MatrixXd basis = orthonormal_complement(b.interior);
  if (d == 3) {
    for (int i = 0; i < n_boundary_samples; ++i) {
      double t = 2.0 * M_PI * i / n_boundary_samples;
      Eigen::VectorXd dir = std::cos(t) * basis.col(0) + std::sin(t) * basis.col(1);
      b.samples.push_back(std::cos(radius) * b.interior + std::sin(radius) * dir);
    }
  } else {
    // Deterministic directions on the boundary sphere.
    for (int i = 0; i < n_boundary_samples; ++i) {
      Eigen::VectorXd u(d - 1);
      for (int k = 0; k < d - 1; ++k) {
        std::uint64_t h = mix_seed(9001 + k, i);
        double a = (h >> 11) * (1.0 / 9007199254740992.0);
        std::uint64_t h2 = mix_seed(40503 + k, i);
        double bgl = (h2 >> 11) * (1.0 / 9007199254740992.0);
        u(k) = std::sqrt(-2.0 * std::log(std::max(a, 1e-16))) *
               std::cos(2 * M_PI * bgl);
      }
      if (u.norm() < 1e-9) u(0) = 1.0;
      Eigen::VectorXd dir = (basis * u).normalized();
      b.samples.push_back(std::cos(radius) * b.interior + std::sin(radius) * dir);
    }
  }
  return b;
}

double ConvexBody::violation(const Eigen::VectorXd& x) const {
  Eigen::VectorXd u = x.normalized();
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& h : halfspaces) v = std::max(v, -h.dot(u));
  for (const auto& q : quadrics) v = std::max(v, u.dot(q * u));
  if (halfspaces.empty() && quadrics.empty()) v = -1.0;
  return v;
}

bool ConvexBody::contains(const Eigen::VectorXd& x, double tol) const {
  return violation(x) <= tol || violation(-x) <= tol;
}

bool ConvexBody::contains(const ProjPoint& p, double tol) const {
  return contains(p.coords(), tol);
}

Eigen::VectorXd ConvexBody::lift(const ProjPoint& p) const {
  Eigen::VectorXd u = p.coords().normalized();
  if (violation(-u) < violation(u)) u = -u;
  return u;
}

Cone Cone::from_generators(std::vector<Eigen::VectorXd> gens) {
  if (gens.empty()) throw Error("Cone: no generators");
  Cone c;
  c.ambient = static_cast<int>(gens.front().size());
  for (auto& g : gens) {
    if (g.size() != c.ambient) throw DimensionMismatch("Cone: generator size");
    c.generators.push_back(g.normalized());
  }
  return c;
}

Cone Cone::from_halfspaces(int ambient, std::vector<Eigen::VectorXd> hs) {
  if (hs.empty()) throw Error("Cone: no half-spaces");
  Cone c;
  c.ambient = ambient;
  for (auto& h : hs) {
    if (h.size() != ambient) throw DimensionMismatch("Cone: functional size");
    c.halfspaces.push_back(h.normalized());
  }
  return c;
}

namespace {

// Extreme rays of {x : rows.x >= 0}: candidates from (d-1)-subsets of rows.
std::vector<Eigen::VectorXd> extreme_rays(
    const std::vector<Eigen::VectorXd>& rows, int d) {
  const int m = static_cast<int>(rows.size());
  if (d < 2) throw Error("extreme_rays: ambient dimension too small");
  std::vector<int> comb(d - 1);
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<Eigen::VectorXd> out;

  auto try_subset = [&](const std::vector<int>& idx) {
    Eigen::MatrixXd a(static_cast<int>(idx.size()), d);
    for (size_t i = 0; i < idx.size(); ++i) a.row(static_cast<int>(i)) = rows[idx[i]];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    if (lu.rank() != d - 1) return;
    Eigen::VectorXd r = lu.kernel().col(0).normalized();
    for (int sgn = 0; sgn < 2; ++sgn) {
      Eigen::VectorXd cand = (sgn == 0) ? r : Eigen::VectorXd(-r);
      bool ok = true;
      for (const auto& h : rows) {
        if (h.dot(cand) < -1e-9) { ok = false; break; }
      }
      if (!ok) continue;
      bool dup = false;
      for (const auto& e : out)
        if ((e - cand).norm() < 1e-8) { dup = true; break; }
      if (!dup) out.push_back(cand);
    }
  };

  // All (d-1)-subsets; guarded against combinatorial blowup.
  double n_subsets = 1.0;
  for (int i = 0; i < d - 1; ++i) n_subsets *= static_cast<double>(m - i) / (i + 1);
  if (n_subsets > 3e6)
    throw Error("extreme_rays: half-space system too large to enumerate");
  if (m < d - 1) return out;
  while (true) {
    try_subset(comb);
    int i = d - 2;
    while (i >= 0 && comb[i] == m - (d - 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

}  // namespace

void Cone::ensure_generators() {
  if (has_generators()) return;
  generators = extreme_rays(halfspaces, ambient);
  if (generators.empty()) throw Error("Cone: no extreme rays found");
}

void Cone::ensure_halfspaces() {
  if (has_halfspaces()) return;
  // Facets of cone(G) are the extreme rays of {phi : phi.g >= 0}.
  halfspaces = extreme_rays(generators, ambient);
  if (halfspaces.empty()) throw Error("Cone: no facets found");
}

bool Cone::contains(const Eigen::VectorXd& v, double tol) const {
  const_cast<Cone*>(this)->ensure_halfspaces();
  Eigen::VectorXd u = v.normalized();
  for (const auto& h : halfspaces)
    if (h.dot(u) < -tol) return false;
  return true;
}

double Cone::properness_margin() const {
  const_cast<Cone*>(this)->ensure_generators();
  Eigen::MatrixXd p(ambient, generators.size());
  for (size_t i = 0; i < generators.size(); ++i) p.col(static_cast<int>(i)) = generators[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0)) ++rank;
  if (rank < ambient) return 0.0;  // empty interior
  return best_margin(p).margin;
}

bool Cone::properly_convex(double tol) const { return properness_margin() >= tol; }

Cone dual_cone(const Cone& v) {
  Cone w = v;
  w.ensure_generators();
  if (!w.properly_convex())
    throw NotProperlyConvex("dual_cone: closure contains a line or interior empty");
  Cone d;
  d.ambient = w.ambient;
  d.halfspaces = w.generators;
  d.generators = w.halfspaces;  // may be empty; computed on demand
  return d;
}

namespace {

double dist_to_body(const Eigen::VectorXd& x, const ConvexBody& k) {
  if (k.contains(x, 1e-9)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : k.samples) best = std::min(best, elliptic_distance(x, s));
  best = std::min(best, elliptic_distance(x, k.interior));
  return best;
}

}  // namespace

double hausdorff_distance(const ConvexBody& k1, const ConvexBody& k2) {
  if (k1.dim != k2.dim) throw DimensionMismatch("hausdorff_distance: dims differ");
  double d = 0.0;
  for (const auto& s : k1.samples) d = std::max(d, dist_to_body(s, k2));
  for (const auto& s : k2.samples) d = std::max(d, dist_to_body(s, k1));
  return d;
}

double cone_section_hausdorff(const Cone& a, const Cone& b) {
  Cone ca = a, cb = b;
  ca.ensure_generators();
  cb.ensure_generators();
  auto one_sided = [](const Cone& from, const Cone& to) {
    double d = 0.0;
    for (const auto& g : from.generators) {
      if (to.contains(g, 1e-9)) continue;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& h : to.generators) best = std::min(best, elliptic_distance(g, h));
      d = std::max(d, best);
    }
    return d;
  };
  return std::max(one_sided(ca, cb), one_sided(cb, ca));
}

ConvexVerdict properly_convex_check(const ConvexBody& body) {
  // Chord test against the body's own constraints.
  const auto& s = body.samples;
  bool not_convex = false;
  for_sample_pairs(s.size(), 20000, [&](size_t i, size_t j) {
    if (not_convex) return;
    for (double t : {0.25, 0.5, 0.75}) {
      Eigen::VectorXd m = ((1.0 - t) * s[i] + t * s[j]);
      if (m.norm() < 1e-12) continue;
      if (body.violation(m) > 1e-6) { not_convex = true; return; }
    }
  });
  if (not_convex) return ConvexVerdict::NotConvex;

  // Positive functional on all samples <=> closure compactly in a patch.
  Eigen::MatrixXd p(body.interior.size(), s.size() + 1);
  for (size_t i = 0; i < s.size(); ++i) p.col(static_cast<int>(i)) = s[i];
  p.col(static_cast<int>(s.size())) = body.interior;
  double margin = best_margin(p).margin;
  return margin >= 1e-8 ? ConvexVerdict::ProperlyConvex
                        : ConvexVerdict::ConvexNotProper;
}

double max_chord_length(const ConvexBody& body) {
  const auto& s = body.samples;
  double best = 0.0;
  for_sample_pairs(s.size(), 4000000, [&](size_t i, size_t j) {
    double c = std::clamp(s[i].dot(s[j]), -1.0, 1.0);
    best = std::max(best, std::acos(c));
  });
  return best;
}

std::vector<Eigen::VectorXd> supporting_halfspaces(
    const ConvexBody& body, const std::vector<ProjPoint>& at) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& p : at) {
    Eigen::VectorXd x = body.lift(p);
    double v = body.violation(x);
    if (v < -1e-6)
      throw PointNotOnBoundary("supporting_halfspaces: point is interior");
    if (v > 1e-6)
      throw PointNotOnBoundary("supporting_halfspaces: point is outside");

    Eigen::VectorXd ell;
    bool found = false;
    // Active quadric: analytic tangent functional.
    for (const auto& q : body.quadrics) {
      if (std::abs(x.dot(q * x)) <= 1e-6) {
        ell = -(q * x);
        if (ell.dot(body.interior) < 0) ell = -ell;
        found = ell.norm() > 1e-12;
        if (found) ell.normalize();
        break;
      }
    }
    if (!found) {
      // Margin maximization over samples projected to the tangent space at x.
      Eigen::MatrixXd basis = orthonormal_complement(x);
      std::vector<Eigen::VectorXd> proj;
      for (const auto& sm : body.samples) {
        Eigen::VectorXd u = basis.transpose() * sm;
        if (u.norm() > 1e-9) proj.push_back(u.normalized());
      }
      Eigen::VectorXd ui = basis.transpose() * body.interior;
      if (ui.norm() > 1e-9) proj.push_back(ui.normalized());
      Eigen::MatrixXd pm(basis.cols(), proj.size());
      for (size_t i = 0; i < proj.size(); ++i) pm.col(static_cast<int>(i)) = proj[i];
      MarginResult mr = best_margin(pm);
      ell = (basis * mr.phi).normalized();
      if (ell.dot(body.interior) < 0) ell = -ell;
      found = true;
    }
    // Validate nonnegativity on the sample cloud.
    for (const auto& sm : body.samples) {
      if (ell.dot(sm) < -1e-8)
        throw Error("supporting_halfspaces: no supporting functional found");
    }
    out.push_back(ell);
  }
  return out;
}

double inradius(const ConvexBody& body) {
  if (!body.halfspaces.empty()) {
    Eigen::MatrixXd p(body.interior.size(), body.halfspaces.size());
    for (size_t i = 0; i < body.halfspaces.size(); ++i)
      p.col(static_cast<int>(i)) = body.halfspaces[i];
    double m = best_margin(p).margin;
    return m > 0 ? std::asin(std::clamp(m, 0.0, 1.0)) : 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : body.samples)
    best = std::min(best, elliptic_distance(body.interior, s));
  return body.samples.empty() ? 0.0 : best;
}

std::vector<int> hull_2d(const std::vector<Eigen::Vector2d>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a].x() != pts[b].x()) return pts[a].x() < pts[b].x();
    return pts[a].y() < pts[b].y();
  });
  auto cross = [&](int o, int a, int b) {
    return (pts[a].x() - pts[o].x()) * (pts[b].y() - pts[o].y()) -
           (pts[a].y() - pts[o].y()) * (pts[b].x() - pts[o].x());
  };
  std::vector<int> h(2 * n);
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {
    int i = idx[ii];
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  for (int ii = n - 2, t = k + 1; ii >= 0; --ii) {
    int i = idx[ii];
    while (k >= t && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  h.resize(std::max(0, k - 1));
  return h;
}

std::vector<HullFacet> hull_3d(const std::vector<Eigen::Vector3d>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw Error("hull_3d: need at least 4 points");

  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.norm());
  const double eps = 1e-9 * std::max(scale, 1.0);

  // Initial non-degenerate tetrahedron.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n; ++i)
    if ((pts[i] - pts[i0]).norm() > eps) { i1 = i; break; }
  if (i1 < 0) throw Error("hull_3d: degenerate input");
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1) continue;
    if ((pts[i1] - pts[i0]).cross(pts[i] - pts[i0]).norm() > eps) { i2 = i; break; }
  }
  if (i2 < 0) throw Error("hull_3d: collinear input");
  Eigen::Vector3d nrm = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]);
  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2) continue;
    if (std::abs(nrm.dot(pts[i] - pts[i0])) > eps) { i3 = i; break; }
  }
  if (i3 < 0) throw Error("hull_3d: coplanar input");

  struct Tri { int a, b, c; Eigen::Vector3d n; double off; bool alive = true; };
  std::vector<Tri> tris;
  Eigen::Vector3d centroid = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  auto add_tri = [&](int a, int b, int c) {
    Tri t{a, b, c, Eigen::Vector3d::Zero(), 0.0, true};
    t.n = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    if (t.n.dot(centroid - pts[a]) > 0) { std::swap(t.b, t.c); t.n = -t.n; }
    t.n.normalize();
    t.off = t.n.dot(pts[t.a]);
    tris.push_back(t);
  };
  add_tri(i0, i1, i2);
  add_tri(i0, i1, i3);
  add_tri(i0, i2, i3);
  add_tri(i1, i2, i3);

  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    // Facets visible from pts[i].
    std::vector<int> visible;
    for (size_t t = 0; t < tris.size(); ++t)
      if (tris[t].alive && tris[t].n.dot(pts[i]) > tris[t].off + eps)
        visible.push_back(static_cast<int>(t));
    if (visible.empty()) continue;
    // Horizon edges: edges of visible facets shared with a hidden facet.
    std::map<std::pair<int, int>, int> edge_count;
    for (int t : visible) {
      int vs[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) {
        int u = vs[e], v = vs[(e + 1) % 3];
        auto key = std::minmax(u, v);
        edge_count[{key.first, key.second}]++;
      }
      tris[t].alive = false;
    }
    for (const auto& [edge, cnt] : edge_count)
      if (cnt == 1) add_tri(edge.first, edge.second, i);
  }

  std::vector<HullFacet> out;
  for (const auto& t : tris) {
    if (!t.alive) continue;
    HullFacet f;
    f.vertex_ids = {t.a, t.b, t.c};
    f.normal = t.n;
    f.offset = t.off;
    out.push_back(f);
  }
  return out;
}

ConvexBody ConvexBody::hull_of_points(int dim,
                                      const std::vector<Eigen::VectorXd>& cloud,
                                      const Eigen::VectorXd& interior_hint) {
  if (dim != 2 && dim != 3)
    throw Error("hull_of_points: implemented for projective dims 2 and 3");
  ConvexBody b;
  b.dim = dim;
  Eigen::VectorXd c = interior_hint.normalized();
  b.interior = c;
  Eigen::MatrixXd basis = orthonormal_complement(c);

  std::vector<Eigen::VectorXd> chart;
  for (const auto& x : cloud) {
    double t = c.dot(x);
    if (t <= 1e-12)
      throw Error("hull_of_points: cloud leaves the affine chart");
    Eigen::VectorXd y = x / t - c;
    chart.push_back(basis.transpose() * y);
    b.samples.push_back(x.normalized());
  }

  if (dim == 2) {
    std::vector<Eigen::Vector2d> p2;
    for (const auto& u : chart) p2.emplace_back(u(0), u(1));
    std::vector<int> h = hull_2d(p2);
    Eigen::Vector2d g = Eigen::Vector2d::Zero();
    for (int i : h) g += p2[i];
    g /= static_cast<double>(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
      const Eigen::Vector2d& a = p2[h[i]];
      const Eigen::Vector2d& d2 = p2[h[(i + 1) % h.size()]];
      Eigen::Vector2d e = d2 - a;
      Eigen::Vector2d nrm(e.y(), -e.x());
      double off = nrm.dot(a);
      if (nrm.dot(g) > off) { nrm = -nrm; off = -off; }  // outward
      Eigen::VectorXd a3(2);
      a3 << nrm.x(), nrm.y();
      // inside: nrm.u <= off  <=>  (off c - basis nrm).x >= 0
      Eigen::VectorXd ell = off * c - basis * a3;
      if (ell.norm() < 1e-12) continue;
      b.halfspaces.push_back(ell.normalized());
    }
  } else {
    std::vector<Eigen::Vector3d> p3;
    for (const auto& u : chart) p3.emplace_back(u(0), u(1), u(2));
    auto facets = hull_3d(p3);
    for (const auto& f : facets) {
      Eigen::VectorXd ell = f.offset * c - basis * f.normal;
      if (ell.dot(b.interior) < 0) ell = -ell;
      bool dup = false;
      for (const auto& h : b.halfspaces)
        if ((h - ell.normalized()).norm() < 1e-9) { dup = true; break; }
      if (!dup) b.halfspaces.push_back(ell.normalized());
    }
  }
  return b;
}

}  // namespace projconvex
