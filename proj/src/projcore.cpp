#include "projconvex/projcore.hpp"

#include <algorithm>
#include <cmath>

namespace projconvex {

ProjPoint::ProjPoint(const Eigen::VectorXd& v, ProjMode mode) : mode_(mode) {
  double n = v.norm();
  if (!(n >= 1e-300)) throw ZeroVector("normalize: zero vector");
  coords_ = v / n;
  if (mode_ == ProjMode::RealProjective) {
    for (int i = 0; i < coords_.size(); ++i) {
      if (std::abs(coords_(i)) > 1e-14) {
        if (coords_(i) < 0) coords_ = -coords_;
        break;
      }
    }
  }
}

bool ProjPoint::approx_equal(const ProjPoint& other, double tol) const {
  if (coords_.size() != other.coords_.size()) return false;
  double d = std::min((coords_ - other.coords_).norm(),
                      (coords_ + other.coords_).norm());
  return d < tol;
}

ProjMap::ProjMap(const Eigen::MatrixXd& m, MapMode mode) : m_(m), mode_(mode) {
  if (m_.rows() != m_.cols()) throw Error("ProjMap: matrix not square");
  double det = m_.determinant();
  if (std::abs(det) < 1e-300) throw Error("ProjMap: singular matrix");
  if (mode_ == MapMode::SlPm && std::abs(std::abs(det) - 1.0) > 1e-12)
    throw Error("ProjMap: sl_pm mode requires det = +-1");
}

ProjMap ProjMap::inverse() const { return ProjMap(m_.inverse(), mode_); }

ProjMap ProjMap::operator*(const ProjMap& rhs) const {
  MapMode m = (mode_ == MapMode::SlPm && rhs.mode_ == MapMode::SlPm)
                  ? MapMode::SlPm
                  : MapMode::Pgl;
  return ProjMap(m_ * rhs.m_, m);
}

ProjLine::ProjLine(const ProjPoint& a, const ProjPoint& b) : a_(a), b_(b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("ProjLine: dims differ");
  Eigen::MatrixXd m(2, a.coords().size());
  m.row(0) = a.coords();
  m.row(1) = b.coords();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  if (svd.singularValues()(1) < 1e-9)
    throw DegeneratePoints("ProjLine: spanning points coincide");
}

ProjPoint ProjLine::point(double u) const {
  return ProjPoint((1.0 - u) * a_.coords() + u * b_.coords(), a_.mode());
}

ProjPoint normalize(const Eigen::VectorXd& v, ProjMode mode) {
  return ProjPoint(v, mode);
}

ProjPoint apply(const ProjMap& g, const ProjPoint& p) {
  if (g.dim() != p.dim()) throw DimensionMismatch("apply: dims differ");
  return ProjPoint(g.matrix() * p.coords(), p.mode());
}

double cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& d) {
  const int n1 = static_cast<int>(a.coords().size());
  Eigen::MatrixXd m(4, n1);
  m.row(0) = a.coords();
  m.row(1) = b.coords();
  m.row(2) = c.coords();
  m.row(3) = d.coords();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() > 2 && sv(2) > 1e-9 * sv(0))
    throw NotCollinear("cross_ratio: points do not lie on one line");

  const ProjPoint* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i]->approx_equal(*pts[j], 1e-12))
        throw DegeneratePoints("cross_ratio: coincident points");

  // Basis of the common 2-plane; each point becomes (x_i, y_i).
  Eigen::MatrixXd basis = svd.matrixV().leftCols(2);  // n1 x 2
  Eigen::Matrix<double, 4, 2> q;
  for (int i = 0; i < 4; ++i) q.row(i) = pts[i]->coords().transpose() * basis;

  auto det2 = [&](int i, int j) {
    return q(i, 0) * q(j, 1) - q(j, 0) * q(i, 1);
  };
  // (alpha_c - alpha_a)(alpha_d - alpha_b)/((alpha_d - alpha_a)(alpha_c - alpha_b))
  // with alpha = x/y; the chart denominators cancel in the determinant form.
  double num = det2(2, 0) * det2(3, 1);
  double den = det2(3, 0) * det2(2, 1);
  if (std::abs(den) < 1e-300) throw DegeneratePoints("cross_ratio: degenerate");
  return num / den;
}

ProjMap lift_to_slpm(const ProjMap& g, bool orientation_reversing) {
  const Eigen::MatrixXd& m = g.matrix();
  const int sz = static_cast<int>(m.rows());
  double det = m.determinant();
  double target = orientation_reversing ? -1.0 : 1.0;

  Eigen::MatrixXd out;
  if (sz % 2 == 1) {
    // Odd size: c^sz has the sign of c; unique real scale for either target.
    double c = std::copysign(std::pow(std::abs(target / det), 1.0 / sz),
                             target / det);
    out = c * m;
  } else {
    // Even size: the determinant sign of any lift is fixed by g.
    if (det * target < 0)
      throw Error("lift_to_slpm: requested determinant sign unattainable");
    double c = std::pow(std::abs(det), -1.0 / sz);
    out = c * m;
    // Both +-out have the requested determinant; fix the sign convention.
    for (int i = 0; i < sz; ++i) {
      if (std::abs(out(i, 0)) > 1e-14) {
        if (out(i, 0) < 0) out = -out;
        break;
      }
    }
  }
  return ProjMap(out, MapMode::SlPm);
}

double elliptic_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  double c = std::abs(p.normalized().dot(q.normalized()));
  return std::acos(std::clamp(c, 0.0, 1.0));
}

double elliptic_distance(const ProjPoint& p, const ProjPoint& q) {
  return elliptic_distance(p.coords(), q.coords());
}

}  // namespace projconvex
