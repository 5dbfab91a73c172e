#include "projconvex/kv.hpp"

#include <cmath>
#include <random>

#include "projconvex/common.hpp"
#include "projconvex/smalllp.hpp"

namespace projconvex {

namespace {
constexpr long long kChunk = 65536;

double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo == 0) return 0.0;
  if (hi - lo == 1) return v[lo];
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

Eigen::MatrixXd hyperplane_basis(const Eigen::VectorXd& x0) {
  const int d = static_cast<int>(x0.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d) -
                      x0.normalized() * x0.normalized().transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  return svd.matrixU().leftCols(d - 1);
}

}  // namespace

KvContext::KvContext(Cone cone, KvConfig cfg, const Eigen::VectorXd& section_normal)
    : cone_(std::move(cone)), cfg_(cfg) {
  cone_.ensure_generators();
  if (!cone_.properly_convex())
    throw NotProperlyConvex("kv: cone is not properly convex");
  dual_ = dual_cone(cone_);

  if (section_normal.size() > 0) {
    x0_ = section_normal;
  } else {
    x0_ = Eigen::VectorXd::Zero(cone_.ambient);
    for (const auto& g : cone_.generators) x0_ += g;
    x0_ /= static_cast<double>(cone_.generators.size());
  }
  build_samples();
}

bool KvContext::contains_interior(const Eigen::VectorXd& x, double margin) const {
  if (x.size() != cone_.ambient) return false;
  double nx = x.norm();
  if (nx < 1e-300) return false;
  if (cone_.has_halfspaces()) {
    for (const auto& h : cone_.halfspaces)
      if (h.dot(x) <= margin * nx) return false;
    return true;
  }
  // Sampled functionals of the dual cone separate the complement.
  for (long long i = 0; i < accepted_.rows(); ++i)
    if (accepted_.row(i).dot(x) <= margin * nx) return false;
  return accepted_.rows() > 0;
}

void KvContext::build_samples() {
  const int d = cone_.ambient;
  Eigen::MatrixXd basis = hyperplane_basis(x0_);
  Eigen::VectorXd p0 = x0_ / x0_.squaredNorm();  // psi . x0 = 1

  // Dual membership rows: psi . g >= 0 for every generator of the cone.
  const auto& gens = cone_.generators;
  const int m = static_cast<int>(gens.size());

  // Bounding box of the section in hyperplane coordinates, by LP.
  Eigen::MatrixXd A(m + 2, d);
  Eigen::VectorXd b(m + 2);
  for (int i = 0; i < m; ++i) {
    A.row(i) = -gens[i].transpose();
    b(i) = 0.0;
  }
  A.row(m) = x0_.transpose();
  b(m) = 1.0;
  A.row(m + 1) = -x0_.transpose();
  b(m + 1) = -1.0;

  Eigen::VectorXd lo(d - 1), hi(d - 1);
  for (int k = 0; k < d - 1; ++k) {
    for (int sgn = 0; sgn < 2; ++sgn) {
      Eigen::VectorXd c = (sgn == 0 ? 1.0 : -1.0) * basis.col(k);
      LpResult r = lp_maximize_boxed(c, A, b, 1e6);
      if (r.status == LpStatus::Infeasible)
        throw NotProperlyConvex("kv: dual cone section is empty");
      if (r.status == LpStatus::Unbounded || std::abs(r.objective) > 1e5)
        throw DualUnbounded("kv: section normal is not interior to the cone");
      double extent = c.dot(r.x) - c.dot(p0);
      if (sgn == 0) hi(k) = extent; else lo(k) = -extent;
    }
    double pad = 1e-9 + 0.02 * (hi(k) - lo(k));
    hi(k) += pad;
    lo(k) -= pad;
  }

  double measure = 1.0;
  for (int k = 0; k < d - 1; ++k) measure *= (hi(k) - lo(k));
  box_measure_ = measure;

  double fact = 1.0;
  for (int i = 2; i <= d - 1; ++i) fact *= i;
  prefactor_ = fact / x0_.norm();

  const long long n = cfg_.n_samples;
  const long long n_chunks = (n + kChunk - 1) / kChunk;
  n_drawn_ = n;

  std::vector<std::vector<Eigen::VectorXd>> per_chunk(n_chunks);
  Eigen::MatrixXd gen_mat(m, d);
  for (int i = 0; i < m; ++i) gen_mat.row(i) = gens[i];

  parallel_chunks(n_chunks, [&](long long c) {
    std::mt19937_64 rng(mix_seed(cfg_.seed, static_cast<std::uint64_t>(c)));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    long long count = std::min(kChunk, n - c * kChunk);
    auto& out = per_chunk[c];
    Eigen::VectorXd y(d - 1);
    for (long long i = 0; i < count; ++i) {
      for (int k = 0; k < d - 1; ++k) y(k) = lo(k) + (hi(k) - lo(k)) * u01(rng);
      Eigen::VectorXd psi = p0 + basis * y;
      if ((gen_mat * psi).minCoeff() >= 0.0) out.push_back(psi);
    }
  });

  long long total = 0;
  for (const auto& v : per_chunk) total += static_cast<long long>(v.size());
  accepted_.resize(total, d);
  chunk_offsets_.assign(1, 0);
  long long row = 0;
  for (const auto& v : per_chunk) {
    for (const auto& psi : v) accepted_.row(row++) = psi;
    chunk_offsets_.push_back(row);
  }
  if (total == 0)
    throw Error("kv: no dual samples accepted; increase n_samples");
}

double KvContext::value(const Eigen::VectorXd& x) const {
  if (!contains_interior(x)) throw OutsideCone("kv: point not inside the cone");
  const int d = cone_.ambient;
  Eigen::VectorXd w = accepted_ * x;
  const long long n_chunks = static_cast<long long>(chunk_offsets_.size()) - 1;
  std::vector<double> partial(n_chunks, 0.0);
  parallel_chunks(n_chunks, [&](long long c) {
    double s = 0.0;
    for (long long i = chunk_offsets_[c]; i < chunk_offsets_[c + 1]; ++i)
      s += std::pow(w(i), -d);
    partial[c] = s;
  });
  double total = pairwise_sum(partial, 0, partial.size());
  return prefactor_ * box_measure_ * total / static_cast<double>(n_drawn_);
}

Eigen::VectorXd KvContext::log_gradient(const Eigen::VectorXd& x) const {
  const int d = cone_.ambient;
  const double h = cfg_.fd_step * x.norm();
  Eigen::VectorXd g(d);
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e(i) = h;
    g(i) = (std::log(value(x + e)) - std::log(value(x - e))) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd KvContext::log_hessian(const Eigen::VectorXd& x) const {
  if (!contains_interior(x)) throw OutsideCone("kv: point not inside the cone");
  const int d = cone_.ambient;
  const double h = cfg_.fd_step * x.norm();
  Eigen::MatrixXd hess(d, d);
  double f0 = std::log(value(x));
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(d);
    ei(i) = h;
    hess(i, i) =
        (std::log(value(x + ei)) - 2.0 * f0 + std::log(value(x - ei))) / (h * h);
    for (int j = i + 1; j < d; ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(d);
      ej(j) = h;
      double v = (std::log(value(x + ei + ej)) - std::log(value(x + ei - ej)) -
                  std::log(value(x - ei + ej)) + std::log(value(x - ei - ej))) /
                 (4.0 * h * h);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return hess;
}

HessianPositivityReport hessian_positivity_check(
    const KvContext& ctx, const std::vector<Eigen::VectorXd>& points) {
  HessianPositivityReport rep;
  rep.all_positive = true;
  for (const auto& x : points) {
    Eigen::MatrixXd h = ctx.log_hessian(x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    double mn = es.eigenvalues().minCoeff();
    rep.min_eigenvalues.push_back(mn);
    if (!(mn > 0)) rep.all_positive = false;
  }
  return rep;
}

PerturbationDelta kv_perturbation_delta(const KvContext& c1, const KvContext& c2,
                                        const Eigen::VectorXd& x) {
  if (!c1.contains_interior(x) || !c2.contains_interior(x))
    throw OutsideCone("kv_perturbation_delta: point not interior to both cones");
  const int d = static_cast<int>(x.size());
  const double h = 1e-3 * x.norm();

  auto grad = [&](const KvContext& c, const Eigen::VectorXd& y) {
    Eigen::VectorXd g(d);
    for (int i = 0; i < d; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
      e(i) = h;
      g(i) = (c.value(y + e) - c.value(y - e)) / (2.0 * h);
    }
    return g;
  };

  PerturbationDelta out;
  std::mt19937_64 rng(mix_seed(c1.config().seed, 0x9e3779b9ULL));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int used = 0;
  for (int trial = 0; trial < 200 && used < 32; ++trial) {
    Eigen::VectorXd u(d);
    for (int i = 0; i < d; ++i) u(i) = gauss(rng);
    u.normalize();
    double r = 1e-2 * std::pow(u01(rng), 1.0 / d);
    Eigen::VectorXd y = x + r * u;
    if (!c1.contains_interior(y) || !c2.contains_interior(y)) continue;
    ++used;
    out.value_delta = std::max(out.value_delta, std::abs(c1.value(y) - c2.value(y)));
    out.grad_delta = std::max(out.grad_delta, (grad(c1, y) - grad(c2, y)).norm());
  }
  out.value_delta = std::max(out.value_delta, std::abs(c1.value(x) - c2.value(x)));
  out.grad_delta = std::max(out.grad_delta, (grad(c1, x) - grad(c2, x)).norm());
  out.cone_hausdorff = cone_section_hausdorff(c1.cone(), c2.cone());
  return out;
}

}  // namespace projconvex
