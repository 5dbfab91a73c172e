#ifndef PROJCONVEX_KV_HPP
#define PROJCONVEX_KV_HPP

#include <cstdint>
#include <vector>

#include "projconvex/convex.hpp"

namespace projconvex {

struct KvConfig {
  long long n_samples = 1000000;
  std::uint64_t seed = 0;
  // Finite-difference step factor for the log-Hessian (h = fd_step * |x|).
  double fd_step = 1e-3;
};

struct HessianPositivityReport {
  std::vector<double> min_eigenvalues;
  bool all_positive = false;
};

struct PerturbationDelta {
  double value_delta = 0.0;  // max |f1 - f2| over the probe ball
  double grad_delta = 0.0;   // max gradient difference (finite differences)
  double cone_hausdorff = 0.0;
};

// Characteristic-function evaluator for a properly convex open cone:
//   f(x) = integral over the dual cone of exp(-phi(x)) dphi,
// computed by factoring over rays of the dual through the bounded affine
// cross-section {phi : phi(x0) = 1} (x0 interior to the cone), with the
// radial part integrated exactly. Monte Carlo over the section is seeded and
// chunked: results are bit-identical for a given (seed, n_samples) regardless
// of thread count.
class KvContext {
 public:
  KvContext(Cone cone, KvConfig cfg = {},
            const Eigen::VectorXd& section_normal = Eigen::VectorXd());

  const Cone& cone() const { return cone_; }
  const Cone& dual() const { return dual_; }
  const KvConfig& config() const { return cfg_; }
  int ambient() const { return cone_.ambient; }

  bool contains_interior(const Eigen::VectorXd& x, double margin = 1e-12) const;

  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd log_gradient(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd log_hessian(const Eigen::VectorXd& x) const;

 private:
  Cone cone_;
  Cone dual_;
  Eigen::VectorXd x0_;
  KvConfig cfg_;

  // Accepted section samples, one row per accepted draw, chunk boundaries
  // recorded for deterministic pairwise reduction.
  Eigen::MatrixXd accepted_;
  std::vector<long long> chunk_offsets_;
  double box_measure_ = 0.0;
  long long n_drawn_ = 0;
  double prefactor_ = 0.0;  // (d-1)! / |x0|

  void build_samples();
};

HessianPositivityReport hessian_positivity_check(
    const KvContext& ctx, const std::vector<Eigen::VectorXd>& points);

PerturbationDelta kv_perturbation_delta(const KvContext& c1,
                                        const KvContext& c2,
                                        const Eigen::VectorXd& x);

}  // namespace projconvex

#endif
