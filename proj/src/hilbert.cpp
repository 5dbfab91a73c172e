#include "projconvex/hilbert.hpp"

#include <cmath>
#include <limits>

namespace projconvex {

namespace {

// Sign-only constraint violation at a chart point (positive = outside).
double chart_violation(const ConvexBody& b, const Eigen::VectorXd& y) {
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& h : b.halfspaces) v = std::max(v, -h.dot(y));
  double yn = y.squaredNorm();
  for (const auto& q : b.quadrics) v = std::max(v, y.dot(q * y) / yn);
  return v;
}

}  // namespace

HilbertContext::HilbertContext(ConvexBody body) : body_(std::move(body)) {
  if (body_.samples.empty() && body_.halfspaces.empty() && body_.quadrics.empty())
    throw Error("HilbertContext: empty body");
  if (!body_.samples.empty() &&
      properly_convex_check(body_) != ConvexVerdict::ProperlyConvex)
    throw NotProperlyConvex("HilbertContext: body is not properly convex");
}

Eigen::VectorXd HilbertContext::to_chart(const ProjPoint& p) const {
  Eigen::VectorXd x = body_.lift(p);
  double t = body_.interior.dot(x);
  if (t <= 1e-12)
    throw PointOutsideDomain("hilbert: point leaves the affine chart");
  return x / t;
}

double HilbertContext::interior_margin(const Eigen::VectorXd& y) const {
  return -body_.violation(y);
}

std::pair<double, double> HilbertContext::chord_endpoints(
    const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  auto f = [&](double u) {
    return chart_violation(body_, (1.0 - u) * a + u * b);
  };
  if (f(0.0) > 0 || f(1.0) > 0)
    throw DegenerateChord("hilbert: chord base points not interior");

  auto solve = [&](double start, double dir) {
    // March outward until the constraint flips, then bisect.
    double lo = start, hi = start + dir;
    int guard = 0;
    while (f(hi) <= 0) {
      double w = hi - start;
      lo = hi;
      hi = start + 2.0 * w;
      if (++guard > 120)
        throw DegenerateChord("hilbert: chord never leaves the domain");
    }
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (std::abs(hi - lo) < 1e-13 * (1.0 + std::abs(mid))) break;
      (f(mid) <= 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  return {solve(0.0, -0.5), solve(1.0, 0.5)};
}

double HilbertContext::distance_chart(const Eigen::VectorXd& a,
                                      const Eigen::VectorXd& b) const {
  Eigen::VectorXd ah = a.normalized();
  Eigen::VectorXd bh = b.normalized();
  if ((ah - bh).norm() < 1e-14) return 0.0;

  // Angular parametrization of the chord inside the cone: z(theta) =
  // cos(theta) a + sin(theta) e, with p at 0 and q at theta_q in (0, pi).
  Eigen::VectorXd e = (bh - ah.dot(bh) * ah).normalized();
  double theta_q = std::atan2(e.dot(bh), ah.dot(bh));
  auto z = [&](double th) {
    return Eigen::VectorXd(std::cos(th) * ah + std::sin(th) * e);
  };
  auto viol = [&](double th) { return body_.violation(z(th)); };
  if (viol(0.0) > 0 || viol(theta_q) > 0)
    throw DegenerateChord("hilbert: chord base points not interior");

  // The cone meets the great circle in an arc shorter than pi: outward
  // marches terminate before the antipode.
  auto solve_dir = [&](double start, double dir) {
    double lo = start, hi = start + dir * 0.05;
    int guard = 0;
    while (viol(hi) <= 0) {
      lo = hi;
      hi += dir * 0.05;
      if (++guard > 80)
        throw DegenerateChord("hilbert: chord never leaves the domain");
    }
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (std::abs(hi - lo) < 1e-15) break;
      (viol(mid) <= 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  double theta_s = solve_dir(theta_q, +1.0);  // beyond q
  double theta_o = solve_dir(0.0, -1.0);      // behind p
  // d = log (o,s,q,p); in the angular chart the bracket reduces to sines of
  // angle differences.
  double cr = (std::sin(theta_o - theta_q) * std::sin(theta_s)) /
              (std::sin(theta_o) * std::sin(theta_s - theta_q));
  if (!(cr > 0)) throw DegenerateChord("hilbert: cross ratio not positive");
  return std::log(cr);
}

double HilbertContext::distance(const ProjPoint& p, const ProjPoint& q) const {
  Eigen::VectorXd a = body_.lift(p);
  Eigen::VectorXd b = body_.lift(q);
  if (interior_margin(a) <= 1e-9 || interior_margin(b) <= 1e-9)
    throw PointOutsideDomain("hilbert: point not strictly interior");
  return distance_chart(a, b);
}

ProjPoint HilbertContext::foot_of_perpendicular(const ProjPoint& x,
                                                const ProjLine& line) const {
  Eigen::VectorXd xc = to_chart(x);
  if (interior_margin(xc) <= 1e-9)
    throw PointOutsideDomain("hilbert: base point not strictly interior");

  // Find an interior point of the line by a projective sweep.
  const Eigen::VectorXd& pa = line.a().coords();
  const Eigen::VectorXd& pb = line.b().coords();
  double best_margin_found = -1.0;
  Eigen::VectorXd best;
  const int sweeps = 2048;
  for (int i = 0; i < sweeps; ++i) {
    double th = M_PI * (i + 0.5) / sweeps - M_PI / 2;
    Eigen::VectorXd y = std::cos(th) * pa + std::sin(th) * pb;
    if (y.norm() < 1e-12) continue;
    for (int sgn = 0; sgn < 2; ++sgn) {
      Eigen::VectorXd z = (sgn == 0) ? y : Eigen::VectorXd(-y);
      double t = body_.interior.dot(z);
      if (t <= 1e-12) continue;
      Eigen::VectorXd yc = z / t;
      double m = interior_margin(yc);
      if (m > best_margin_found) {
        best_margin_found = m;
        best = yc;
      }
    }
  }
  if (best_margin_found <= 1e-9)
    throw LineMissesDomain("hilbert: line misses the domain interior");

  // Chord of the line through `best` in chart coordinates.
  double t0 = body_.interior.dot(pa);
  double t1 = body_.interior.dot(pb);
  Eigen::VectorXd dir;
  if (std::abs(t0) > 1e-9 && std::abs(t1) > 1e-9) {
    dir = pb / t1 - pa / t0;
  } else {
    // One spanning point sits on the chart boundary; the chart direction of
    // the line is that point's direction up to projection.
    const Eigen::VectorXd& w = (std::abs(t1) <= 1e-9) ? pb : pa;
    dir = w - body_.interior.dot(w) * best;
  }
  if (dir.norm() < 1e-13) return ProjPoint(best);
  dir.normalize();

  auto fv = [&](double t) { return chart_violation(body_, best + t * dir); };
  auto clip = [&](double sgn) {
    double lo = 0.0, hi = sgn;
    int guard = 0;
    while (fv(hi) <= 0) {
      lo = hi;
      hi *= 2.0;
      if (++guard > 120) throw DegenerateChord("hilbert: unbounded chord");
    }
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (std::abs(hi - lo) < 1e-13 * (1.0 + std::abs(mid))) break;
      (fv(mid) <= 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  double tp = clip(1.0), tm = clip(-1.0);
  // Shrink strictly inside so distance evaluations stay defined.
  double span = tp - tm;
  double t_lo = tm + 1e-9 * span;
  double t_hi = tp - 1e-9 * span;

  auto fd = [&](double t) { return distance_chart(xc, best + t * dir); };

  // Golden-section on the convex distance profile.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = t_lo, b = t_hi;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = fd(c1), f2 = fd(c2);
  for (int i = 0; i < 120 && (b - a) > 1e-12 * span; ++i) {
    if (f1 <= f2) {
      b = c2; c2 = c1; f2 = f1;
      c1 = b - gr * (b - a); f1 = fd(c1);
    } else {
      a = c1; c1 = c2; f1 = f2;
      c2 = a + gr * (b - a); f2 = fd(c2);
    }
  }
  double t_star = 0.5 * (a + b);
  double f_star = fd(t_star);

  // Minimizing interval (flat within 1e-12), midpoint returned.
  auto expand = [&](double sgn) {
    double lo = t_star;
    double hi = (sgn > 0) ? t_hi : t_lo;
    if (fd(hi) <= f_star + 1e-12) return hi;
    for (int i = 0; i < 90; ++i) {
      double mid = 0.5 * (lo + hi);
      if (fd(mid) <= f_star + 1e-12) lo = mid; else hi = mid;
    }
    return lo;
  };
  double left = expand(-1.0), right = expand(1.0);
  return ProjPoint(best + 0.5 * (left + right) * dir);
}

}  // namespace projconvex
