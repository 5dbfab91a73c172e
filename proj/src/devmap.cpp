#include "projconvex/devmap.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "projconvex/smalllp.hpp"

namespace projconvex {

GluingData GluingData::doubled_tetrahedron(
    const std::array<EndOrbifoldParams, 4>& ends) {
  GluingSolve gs = solve_gluing_coefficients(ends);
  if (!gs.solvable)
    throw Error("GluingData: end parameters violate the matching conditions "
                "(cycle residual " + std::to_string(gs.residual) + ")");
  GluingData g;
  g.front = gs.front;
  g.back = gs.back;
  g.validate();
  return g;
}

GluingData GluingData::hyperbolic_point() {
  std::array<EndOrbifoldParams, 4> ends;  // all (3,3,3), s = t = 1
  return doubled_tetrahedron(ends);
}

Eigen::Matrix4d GluingData::substitution(int side, int face) const {
  const Eigen::Matrix4d& c = (side == 0) ? front : back;
  Eigen::Matrix4d s = Eigen::Matrix4d::Identity();
  for (int j = 0; j < 4; ++j) s(j, face) = (j == face) ? -1.0 : c(j, face);
  return s;
}

void GluingData::validate() const {
  for (int m = 0; m < 4; ++m)
    for (int j = 0; j < 4; ++j) {
      if (j == m) continue;
      if (std::abs(front(j, m)) < 1e-12 || std::abs(back(j, m)) < 1e-12)
        throw ZeroCrossRatio("GluingData: vanishing invariant, "
                             "non-holographic gluing refused");
    }
}

namespace {

// Canonical key of a placed simplex: per-column sign/scale canonical form on
// a 1e-8 grid, columns sorted.
std::string placement_key(const Eigen::MatrixXd& vertices) {
  std::vector<std::string> cols;
  for (int c = 0; c < vertices.cols(); ++c) {
    Eigen::VectorXd v = vertices.col(c).normalized();
    for (int i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-6) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    std::string s;
    s.reserve(v.size() * 8);
    for (int i = 0; i < v.size(); ++i) {
      auto q = static_cast<long long>(std::llround(v(i) * 1e8));
      s.append(reinterpret_cast<const char*>(&q), sizeof(q));
    }
    cols.push_back(std::move(s));
  }
  std::sort(cols.begin(), cols.end());
  std::string key;
  for (auto& s : cols) key += s;
  return key;
}

double placement_volume(const Eigen::Matrix4d& m) {
  Eigen::Matrix4d u = m;
  for (int c = 0; c < 4; ++c) u.col(c).normalize();
  return std::abs(u.determinant());
}

}  // namespace

Development develop(const GluingData& data, int depth_max,
                    const DevelopOptions& opts) {
  data.validate();
  Development dev;
  dev.data = data;
  dev.complex.dim = 3;

  struct Node {
    Eigen::Matrix4d mat;
    int parity;
    std::string word;
    int depth;
    int last_face;
  };
  std::deque<Node> queue;
  std::unordered_set<std::string> seen;

  // Seed pair: the standard cell and its fixed neighbor across face 3.
  Node t1{Eigen::Matrix4d::Identity(), 0, "", 0, 3};
  Node t2{data.substitution(0, 3), 1, "d", 0, 3};
  seen.insert(placement_key(t1.mat));
  seen.insert(placement_key(t2.mat));
  queue.push_back(t1);
  queue.push_back(t2);

  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();

    if (placement_volume(cur.mat) < opts.degenerate_tol)
      throw DegeneratePlacement("develop: flat simplex placed");
    PlacedSimplex ps;
    ps.vertices = cur.mat;
    ps.word = cur.word;
    ps.depth = cur.depth;
    ps.parity = cur.parity;
    dev.complex.placed.push_back(ps);
    if (static_cast<long long>(dev.complex.placed.size()) > opts.max_placed)
      throw ExplosionGuard("develop: placement cap exceeded");

    if (cur.depth == depth_max) continue;
    for (int f = 0; f < 4; ++f) {
      if (f == cur.last_face) continue;  // substitutions are involutions
      Node nxt{cur.mat * data.substitution(cur.parity, f), 1 - cur.parity,
               cur.word + static_cast<char>('a' + f), cur.depth + 1, f};
      // Facet-sharing invariant: untouched columns are shared exactly.
      for (int j = 0; j < 4; ++j) {
        if (j == f) continue;
        if ((nxt.mat.col(j) - cur.mat.col(j)).norm() > 1e-8 * cur.mat.col(j).norm())
          throw Error("develop: facet-sharing invariant violated");
      }
      std::string key = placement_key(nxt.mat);
      if (seen.insert(key).second) queue.push_back(nxt);
    }
  }
  return dev;
}

Eigen::Matrix4d Development::edge_rotation(int m, int n) const {
  return data.substitution(0, m) * data.substitution(1, n);
}

std::vector<RelatorResidual> Development::relator_residuals() const {
  std::vector<RelatorResidual> out;
  Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (m == n) continue;
      Eigen::Matrix4d g = edge_rotation(m, n);
      Eigen::Matrix4d p = g * g * g;
      double plus = (p - id).cwiseAbs().maxCoeff();
      double minus = (p + id).cwiseAbs().maxCoeff();
      out.push_back({m, n, std::min(plus, minus)});
    }
  return out;
}

double Development::max_relator_residual() const {
  double r = 0.0;
  for (const auto& rr : relator_residuals()) r = std::max(r, rr.residual);
  return r;
}

std::array<Development::End, 4> Development::seed_ends() const {
  std::array<End, 4> ends;
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e(k) = 1.0;
    ends[k].vertex = ProjPoint(e);
    int comp[3];
    int c = 0;
    for (int v = 0; v < 4; ++v)
      if (v != k) comp[c++] = v;
    for (int idx = 0; idx < 3; ++idx) {
      int m = comp[idx], n = comp[(idx + 1) % 3];
      ends[k].generators.emplace_back(edge_rotation(m, n));
    }
  }
  return ends;
}

ConfinementReport confinement_check(const Development& dev, double eps0) {
  ConfinementReport rep;
  rep.eps0 = eps0;
  if (dev.complex.placed.empty()) throw Error("confinement_check: empty complex");

  std::vector<Eigen::VectorXd> cloud;
  for (const auto& p : dev.complex.placed)
    for (int c = 0; c < 4; ++c) cloud.push_back(p.vertices.col(c).normalized());

  // Five seed vertices: the base frame and the second seed's free vertex.
  std::vector<Eigen::VectorXd> seeds;
  for (int k = 0; k < 4; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
    e(k) = 1.0;
    seeds.push_back(e);
  }
  if (dev.complex.placed.size() > 1) {
    seeds.push_back(dev.complex.placed[1].vertices.col(3).normalized());
  } else {
    Eigen::Matrix4d s3 = dev.data.substitution(0, 3);
    seeds.push_back(Eigen::VectorXd(s3.col(3).normalized()));
  }

  for (const auto& v : seeds) {
    // Margin-maximizing functional vanishing at v over the vertex cloud.
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4) - v * v.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
    Eigen::MatrixXd basis = svd.matrixU().leftCols(3);
    std::vector<Eigen::VectorXd> proj;
    for (const auto& x : cloud) {
      Eigen::VectorXd u = basis.transpose() * x;
      if (u.norm() > 1e-9) proj.push_back(u.normalized());
    }
    Eigen::MatrixXd pm(3, proj.size());
    for (size_t i = 0; i < proj.size(); ++i) pm.col(static_cast<int>(i)) = proj[i];
    MarginResult mr = best_margin(pm);
    Eigen::VectorXd ell = (basis * mr.phi).normalized();
    double viol = 0.0;
    for (const auto& x : cloud) viol = std::max(viol, -ell.dot(x));
    rep.max_violation = std::max(rep.max_violation, viol);
    rep.halfspaces.push_back(ell);
  }

  for (size_t i = 0; i < cloud.size(); ++i)
    for (size_t j = i + 1; j < cloud.size(); ++j) {
      double c = std::clamp(cloud[i].dot(cloud[j]), -1.0, 1.0);
      rep.max_chord = std::max(rep.max_chord, std::acos(c));
    }

  rep.pass = rep.max_violation <= 1e-8 && rep.max_chord <= M_PI - eps0;
  return rep;
}

namespace {

bool in_simplex(const Eigen::Matrix4d& verts, const Eigen::VectorXd& x,
                double tol) {
  Eigen::Vector4d y = verts.fullPivLu().solve(x);
  double mx = y.cwiseAbs().maxCoeff();
  if (mx < 1e-14) return false;
  double lo = y.minCoeff() / mx, hi = y.maxCoeff() / mx;
  return lo >= -tol || hi <= tol;  // all one sign within tolerance
}

}  // namespace

namespace {

// Angular interval of a tile around an edge: the two off-edge vertices seen
// in the quotient plane of the edge span.
struct Sector {
  double lo, hi;  // angles, hi - lo in (0, pi)
};

bool sectors_fill_contiguously(std::vector<Sector> secs) {
  // Merge on the circle; reject gaps between separated sectors and total
  // angle beyond a full turn (overlapping wrap).
  const double tol = 1e-7;
  double total = 0.0;
  for (const auto& s : secs) total += s.hi - s.lo;
  if (total > 2.0 * M_PI + tol) return false;
  std::sort(secs.begin(), secs.end(),
            [](const Sector& a, const Sector& b) { return a.lo < b.lo; });
  // Walk the merged union; count connected components on the circle.
  int components = 0;
  double cur_hi = -1e300;
  double first_lo = 0.0;
  for (const auto& s : secs) {
    if (s.lo > cur_hi + tol) {
      ++components;
      if (components == 1) first_lo = s.lo;
      cur_hi = s.hi;
    } else {
      cur_hi = std::max(cur_hi, s.hi);
    }
  }
  if (components <= 1) return true;
  // Two components may still be one interval across the 2 pi wrap.
  if (components == 2 && cur_hi >= first_lo + 2.0 * M_PI - tol) return true;
  return false;
}

}  // namespace

DevConvexity convexity_verdict(const Development& dev) {
  const auto& placed = dev.complex.placed;
  if (placed.empty()) throw Error("convexity_verdict: empty complex");

  // Tile interiors must not overlap (developing-map wrap detector).
  std::vector<Eigen::VectorXd> probes;
  for (const auto& p : placed) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
    for (int j = 0; j < 4; ++j) c += p.vertices.col(j).normalized();
    probes.push_back(c.normalized());
  }
  for (size_t i = 0; i < placed.size(); ++i) {
    int hits = 0;
    for (const auto& p : placed)
      if (in_simplex(p.vertices, probes[i], -1e-6)) ++hits;  // strict interior
    if (hits > 1) return DevConvexity::NotConvex;
  }

  // Local convexity around every edge: the union of the incident tiles'
  // angular sectors must be one contiguous wedge (or the complete turn).
  std::vector<Eigen::VectorXd> reps;  // projective vertex representatives
  auto vertex_id = [&](const Eigen::VectorXd& vcol) {
    Eigen::VectorXd v = vcol.normalized();
    for (size_t i = 0; i < reps.size(); ++i) {
      double c = std::abs(reps[i].dot(v));
      if (c > 1.0 - 1e-10) return static_cast<int>(i);
    }
    reps.push_back(v);
    return static_cast<int>(reps.size() - 1);
  };
  struct EdgeData {
    Eigen::VectorXd u, v;  // edge vertex lifts from the first incident tile
    std::vector<std::pair<int, std::pair<int, int>>> tiles;  // tile, off-edge cols
  };
  std::map<std::pair<int, int>, EdgeData> edges;
  for (size_t t = 0; t < placed.size(); ++t) {
    int ids[4];
    for (int c = 0; c < 4; ++c) ids[c] = vertex_id(placed[t].vertices.col(c));
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        auto key = std::minmax(ids[a], ids[b]);
        auto& ed = edges[{key.first, key.second}];
        if (ed.tiles.empty()) {
          ed.u = placed[t].vertices.col(a).normalized();
          ed.v = placed[t].vertices.col(b).normalized();
        }
        int offs[2];
        int c = 0;
        for (int j = 0; j < 4; ++j)
          if (j != a && j != b) offs[c++] = j;
        ed.tiles.push_back({static_cast<int>(t), {offs[0], offs[1]}});
      }
  }
  for (const auto& [key, ed] : edges) {
    if (ed.tiles.size() < 2) continue;
    // Basis of the quotient plane R^4 / span(u, v).
    Eigen::MatrixXd span(4, 2);
    span.col(0) = ed.u;
    span.col(1) = ed.v;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeFullU);
    Eigen::MatrixXd normal = svd.matrixU().rightCols(2);
    std::vector<Sector> secs;
    bool degenerate = false;
    for (const auto& [t, offpair] : ed.tiles) {
      Eigen::Vector2d pa = normal.transpose() * placed[t].vertices.col(offpair.first).normalized();
      Eigen::Vector2d pb = normal.transpose() * placed[t].vertices.col(offpair.second).normalized();
      if (pa.norm() < 1e-9 || pb.norm() < 1e-9) { degenerate = true; break; }
      double ta = std::atan2(pa.y(), pa.x());
      double tb = std::atan2(pb.y(), pb.x());
      double diff = tb - ta;
      while (diff <= -M_PI) diff += 2 * M_PI;
      while (diff > M_PI) diff -= 2 * M_PI;
      Sector s;
      if (diff >= 0) { s.lo = ta; s.hi = ta + diff; }
      else { s.lo = tb; s.hi = tb - diff; }
      secs.push_back(s);
    }
    if (degenerate) continue;
    if (!sectors_fill_contiguously(std::move(secs)))
      return DevConvexity::NotConvex;
  }

  // Strictness proxy: flats in the hull boundary outside single vertex stars.
  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(4);
  for (const auto& p : probes) centroid += p;
  centroid.normalize();
  std::vector<Eigen::VectorXd> cloud;
  for (const auto& p : placed)
    for (int c = 0; c < 4; ++c) {
      Eigen::VectorXd v = p.vertices.col(c).normalized();
      if (v.dot(centroid) < 0) v = -v;
      bool dup = false;
      for (const auto& w : cloud)
        if ((w - v).norm() < 1e-8) { dup = true; break; }
      if (!dup) cloud.push_back(v);
    }
  ConvexBody hull = ConvexBody::hull_of_points(3, cloud, centroid);
  for (const auto& h : hull.halfspaces) {
    std::vector<const Eigen::VectorXd*> on_facet;
    for (const auto& v : cloud)
      if (std::abs(h.dot(v)) < 1e-8) on_facet.push_back(&v);
    if (on_facet.size() < 3) continue;
    for (size_t a = 0; a < on_facet.size(); ++a)
      for (size_t b = a + 1; b < on_facet.size(); ++b)
        for (size_t c = b + 1; c < on_facet.size(); ++c) {
          Eigen::MatrixXd m(3, 4);
          m.row(0) = *on_facet[a];
          m.row(1) = *on_facet[b];
          m.row(2) = *on_facet[c];
          Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
          if (svd.singularValues()(2) < 1e-8)
            return DevConvexity::ConvexSoFar;  // collinear distinct triple
        }
  }
  return DevConvexity::StrictlyConvexSoFar;
}

EndClass classify_end(const EndDescriptor& end) {
  const Eigen::VectorXd v = end.vertex.coords();
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& g : end.generators) {
    const Eigen::MatrixXd& m = g.matrix();
    Eigen::VectorXd gv = m * v;
    double lambda = v.dot(gv);
    if ((gv - lambda * v).norm() > 1e-8 * gv.norm())
      throw VertexNotFixed("classify_end: generator does not fix the vertex");
    gens.push_back(lambda < 0 ? Eigen::MatrixXd(-m) : m);
  }

  // Horospherical: all eigenvalue moduli within 1e-6 of 1.
  bool all_unit = true;
  for (const auto& m : gens) {
    Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
    for (int i = 0; i < ev.size(); ++i)
      if (std::abs(std::abs(ev(i)) - 1.0) > 1e-6) all_unit = false;
  }
  if (all_unit) return EndClass::Horospherical;

  // Lens check on the nonelliptic generators.
  int nonelliptic = 0;
  std::vector<const Eigen::MatrixXd*> nonell_ptrs;
  for (const auto& m : gens) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXcd ev = es.eigenvalues();
    bool elliptic = true;
    for (int i = 0; i < ev.size(); ++i)
      if (std::abs(std::abs(ev(i)) - 1.0) > 1e-6) elliptic = false;
    if (elliptic) continue;
    ++nonelliptic;
    nonell_ptrs.push_back(&m);
    // Real positive spectrum.
    for (int i = 0; i < ev.size(); ++i) {
      if (std::abs(ev(i).imag()) > 1e-8 * std::abs(ev(i)) ||
          ev(i).real() <= 0)
        return EndClass::Unclassified;
    }
    // Diagonalizable: full eigenvector rank.
    Eigen::MatrixXcd vecs = es.eigenvectors();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vecs);
    if (svd.singularValues()(svd.singularValues().size() - 1) < 1e-8)
      return EndClass::Unclassified;
    // Vertex eigenvalue strictly between the extremes.
    double lambda0 = v.dot(m * v);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < ev.size(); ++i) {
      lo = std::min(lo, ev(i).real());
      hi = std::max(hi, ev(i).real());
    }
    if (!(lambda0 > lo * (1.0 + 1e-6) && lambda0 < hi * (1.0 - 1e-6)))
      return EndClass::Unclassified;
  }
  if (nonelliptic == 0) return EndClass::Unclassified;

  // Totally geodesic refinement: at least two independent nonelliptic
  // generators with a common transpose eigenvector w, w(vertex) != 0.
  if (nonell_ptrs.size() >= 2) {
    bool distinct = false;
    for (size_t i = 1; i < nonell_ptrs.size() && !distinct; ++i) {
      Eigen::MatrixXd a = *nonell_ptrs[0] / nonell_ptrs[0]->norm();
      Eigen::MatrixXd b = *nonell_ptrs[i] / nonell_ptrs[i]->norm();
      if ((a - b).norm() > 1e-8 && (a + b).norm() > 1e-8) distinct = true;
    }
    if (distinct) {
      const Eigen::MatrixXd& m0 = *nonell_ptrs[0];
      Eigen::EigenSolver<Eigen::MatrixXd> es(m0.transpose());
      for (int c = 0; c < es.eigenvectors().cols(); ++c) {
        if (std::abs(es.eigenvalues()(c).imag()) > 1e-10) continue;
        Eigen::VectorXd w = es.eigenvectors().col(c).real().normalized();
        if (std::abs(w.dot(v)) < 1e-6) continue;  // hyperplane hits the vertex
        bool common = true;
        for (const auto* mp : nonell_ptrs) {
          Eigen::VectorXd mw = mp->transpose() * w;
          if ((mw - w.dot(mw) * w).norm() > 1e-6 * mw.norm()) common = false;
        }
        if (common) return EndClass::TotallyGeodesicCompatible;
      }
    }
  }
  return EndClass::LensCompatible;
}

}  // namespace projconvex
