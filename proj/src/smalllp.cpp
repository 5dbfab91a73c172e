#include "projconvex/smalllp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace projconvex {

namespace {
constexpr double kPivotEps = 1e-11;
}

// Two-phase tableau simplex on
//   max c.u  s.t.  T u <= t, u >= 0
// after the shift u = x - lo and upper bounds appended as rows.
LpResult lp_maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                     const Eigen::VectorXd& b, const Eigen::VectorXd& lo,
                     const Eigen::VectorXd& hi) {
  const int n = static_cast<int>(c.size());
  const int m0 = static_cast<int>(A.rows());

  Eigen::MatrixXd T(m0 + n, n);
  Eigen::VectorXd t(m0 + n);
  if (m0 > 0) {
    T.topRows(m0) = A;
    t.head(m0) = b - A * lo;
  }
  T.bottomRows(n) = Eigen::MatrixXd::Identity(n, n);
  t.tail(n) = hi - lo;

  const int m = m0 + n;
  // Columns: n structural + m slacks (+ artificials appended in phase 1).
  int n_art = 0;
  for (int i = 0; i < m; ++i)
    if (t(i) < 0) ++n_art;

  const int cols = n + m + n_art;
  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m, cols + 1);
  std::vector<int> basis(m);
  int art = n + m;
  for (int i = 0; i < m; ++i) {
    double sgn = (t(i) < 0) ? -1.0 : 1.0;
    tab.row(i).head(n) = sgn * T.row(i);
    tab(i, n + i) = sgn;  // slack
    tab(i, cols) = sgn * t(i);
    if (t(i) < 0) {
      tab(i, art) = 1.0;
      basis[i] = art++;
    } else {
      basis[i] = n + i;
    }
  }

  auto pivot = [&](int row, int col) {
    tab.row(row) /= tab(row, col);
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      double f = tab(i, col);
      if (f != 0.0) tab.row(i) -= f * tab.row(row);
    }
    basis[row] = col;
  };

  auto run_simplex = [&](const Eigen::VectorXd& obj, int active_cols) -> bool {
    // Reduced costs maintained from scratch each iteration (sizes are small).
    for (long iter = 0; iter < 20000; ++iter) {
      Eigen::VectorXd y = Eigen::VectorXd::Zero(active_cols);
      for (int i = 0; i < m; ++i)
        if (basis[i] < active_cols) y(basis[i]) = 0.0;
      // reduced cost r_j = obj_j - obj_B . B^{-1} A_j ; tableau rows are
      // already B^{-1} A, so r_j = obj_j - sum_i obj(basis[i]) tab(i,j).
      Eigen::VectorXd objB(m);
      for (int i = 0; i < m; ++i)
        objB(i) = (basis[i] < obj.size()) ? obj(basis[i]) : 0.0;
      int enter = -1;
      for (int j = 0; j < active_cols; ++j) {
        double oj = (j < obj.size()) ? obj(j) : 0.0;
        double r = oj - objB.dot(tab.col(j).head(m));
        if (r > kPivotEps) { enter = j; break; }  // Bland
      }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        double a = tab(i, enter);
        if (a > kPivotEps) {
          double ratio = tab(i, cols) / a;
          if (ratio < best - 1e-15 ||
              (ratio < best + 1e-15 && (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
    return true;  // iteration cap; treat current point as answer
  };

  if (n_art > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(cols);
    for (int j = n + m; j < cols; ++j) phase1(j) = -1.0;
    run_simplex(phase1, cols);
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= n + m) infeas += tab(i, cols);
    if (infeas > 1e-7) return {LpStatus::Infeasible, Eigen::VectorXd(), 0.0};
    // Drive remaining artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= n + m) {
        for (int j = 0; j < n + m; ++j) {
          if (std::abs(tab(i, j)) > 1e-9) { pivot(i, j); break; }
        }
      }
    }
  }

  Eigen::VectorXd obj = Eigen::VectorXd::Zero(n + m);
  obj.head(n) = c;
  bool bounded = run_simplex(obj, n + m);
  if (!bounded) return {LpStatus::Unbounded, Eigen::VectorXd(), 0.0};

  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) u(basis[i]) = tab(i, cols);
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x = u + lo;
  res.objective = c.dot(res.x);
  return res;
}

LpResult lp_maximize_boxed(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                           const Eigen::VectorXd& b, double box) {
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(c.size(), -box);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(c.size(), box);
  return lp_maximize(c, A, b, lo, hi);
}

namespace {

// Minimum-norm point over the affine hull of the corral, with barycentric
// coordinates. Solves the KKT system [2 P^T P  1; 1^T 0] [w; mu] = [0; 1].
Eigen::VectorXd affine_min_norm_weights(const Eigen::MatrixXd& S) {
  const int k = static_cast<int>(S.cols());
  Eigen::MatrixXd M(k + 1, k + 1);
  M.topLeftCorner(k, k) = 2.0 * S.transpose() * S;
  M.topRightCorner(k, 1).setOnes();
  M.bottomLeftCorner(1, k).setOnes();
  M(k, k) = 0.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  Eigen::VectorXd sol = M.fullPivLu().solve(rhs);
  return sol.head(k);
}

}  // namespace

Eigen::VectorXd min_norm_point(const Eigen::MatrixXd& P, double tol) {
  const int d = static_cast<int>(P.rows());
  const int m = static_cast<int>(P.cols());
  if (m == 0) return Eigen::VectorXd::Zero(d);

  // Start with the smallest-norm column.
  int start = 0;
  for (int j = 1; j < m; ++j)
    if (P.col(j).squaredNorm() < P.col(start).squaredNorm()) start = j;

  std::vector<int> corral{start};
  Eigen::VectorXd w = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd x = P.col(start);

  for (int iter = 0; iter < 200 * (d + 1); ++iter) {
    // Most violating vertex.
    int j_min = 0;
    double best = x.dot(P.col(0));
    for (int j = 1; j < m; ++j) {
      double v = x.dot(P.col(j));
      if (v < best) { best = v; j_min = j; }
    }
    if (best >= x.squaredNorm() - tol * (1.0 + x.squaredNorm())) break;
    bool present = false;
    for (int idx : corral)
      if (idx == j_min) { present = true; break; }
    if (!present) {
      corral.push_back(j_min);
      Eigen::VectorXd w2 = Eigen::VectorXd::Zero(corral.size());
      w2.head(w.size()) = w;
      w = w2;
    }

    // Inner loop: pull x toward the affine minimizer, dropping vertices that
    // hit zero weight.
    for (int inner = 0; inner < 2 * (d + 2); ++inner) {
      Eigen::MatrixXd S(d, corral.size());
      for (int i = 0; i < static_cast<int>(corral.size()); ++i)
        S.col(i) = P.col(corral[i]);
      Eigen::VectorXd v = affine_min_norm_weights(S);
      if (v.minCoeff() > 1e-13) {
        w = v;
        x = S * w;
        break;
      }
      // Line search from w to v stopping at the simplex boundary.
      double theta = 1.0;
      for (int i = 0; i < v.size(); ++i) {
        if (v(i) < 1e-13) {
          double t = w(i) / (w(i) - v(i));
          theta = std::min(theta, t);
        }
      }
      w = w + theta * (v - w);
      // Drop zeroed vertices.
      std::vector<int> keep_idx;
      for (int i = 0; i < w.size(); ++i)
        if (w(i) > 1e-12) keep_idx.push_back(i);
      if (keep_idx.size() == corral.size()) {
        // Numerical stall: force-drop the smallest weight.
        int drop = 0;
        for (int i = 1; i < w.size(); ++i)
          if (w(i) < w(drop)) drop = i;
        keep_idx.clear();
        for (int i = 0; i < w.size(); ++i)
          if (i != drop) keep_idx.push_back(i);
      }
      std::vector<int> nc;
      Eigen::VectorXd nw(keep_idx.size());
      for (size_t i = 0; i < keep_idx.size(); ++i) {
        nc.push_back(corral[keep_idx[i]]);
        nw(i) = w(keep_idx[i]);
      }
      nw /= nw.sum();
      corral = nc;
      w = nw;
      Eigen::MatrixXd S2(d, corral.size());
      for (int i = 0; i < static_cast<int>(corral.size()); ++i)
        S2.col(i) = P.col(corral[i]);
      x = S2 * w;
    }
  }
  return x;
}

MarginResult best_margin(const Eigen::MatrixXd& P) {
  Eigen::VectorXd x = min_norm_point(P);
  double nx = x.norm();
  MarginResult r;
  if (nx < 1e-14) {
    // 0 is in the hull: report the (non-positive) margin of an arbitrary
    // direction as a certificate substitute.
    r.phi = Eigen::VectorXd::Zero(P.rows());
    if (P.rows() > 0) r.phi(0) = 1.0;
    r.margin = (P.cols() > 0) ? (r.phi.transpose() * P).minCoeff() : 0.0;
    if (r.margin > 0) r.margin = 0.0;
    return r;
  }
  r.phi = x / nx;
  r.margin = (r.phi.transpose() * P).minCoeff();
  return r;
}

}  // namespace projconvex

