#include "projconvex/suspension.hpp"

#include <cmath>

namespace projconvex {

SuspensionCtx::SuspensionCtx(int base_dim,
                             std::map<std::string, ProjMap> holonomy_lift,
                             double dilation_factor)
    : base_dim_(base_dim),
      dilation_factor_(dilation_factor),
      lifts_(std::move(holonomy_lift)) {
  if (!(dilation_factor_ > 1.0))
    throw Error("suspension: dilation factor must exceed 1");
  for (const auto& [name, g] : lifts_) {
    if (g.dim() != base_dim_)
      throw DimensionMismatch("suspension: generator dimension mismatch");
    double det = g.matrix().determinant();
    if (std::abs(std::abs(det) - 1.0) > 1e-12)
      throw Error("suspension: lift '" + name + "' does not have det +-1");
  }
}

void SuspensionCtx::set_translation(const std::string& name,
                                    const Eigen::VectorXd& t) {
  if (!lifts_.count(name)) throw UnknownGenerator("suspension: " + name);
  translations_[name] = t;
}

Eigen::VectorXd SuspensionCtx::suspend_point(const ProjPoint& p, double t) const {
  if (!(t > 0)) throw NonpositiveParameter("suspension: t must be positive");
  return t * p.coords();  // coords() is the unit representative
}

std::pair<ProjPoint, double> SuspensionCtx::suspend_deck(const std::string& g_name,
                                                         const ProjPoint& p,
                                                         double t) const {
  auto it = lifts_.find(g_name);
  if (it == lifts_.end())
    throw UnknownGenerator("suspension: unknown generator '" + g_name + "'");
  if (!(t > 0)) throw NonpositiveParameter("suspension: t must be positive");
  const Eigen::MatrixXd& m = it->second.matrix();
  Eigen::VectorXd image = m * (t * p.coords());
  return {ProjPoint(image, p.mode()), image.norm()};
}

std::pair<ProjPoint, double> SuspensionCtx::suspend_dilation(const ProjPoint& p,
                                                             double t) const {
  if (!(t > 0)) throw NonpositiveParameter("suspension: t must be positive");
  return {p, dilation_factor_ * t};
}

Eigen::VectorXd SuspensionCtx::radiant_fixed_point() const {
  Eigen::VectorXd origin = Eigen::VectorXd::Zero(base_dim_ + 1);
  for (const auto& [name, g] : lifts_) {
    Eigen::VectorXd trans = origin;
    auto it = translations_.find(name);
    if (it != translations_.end()) trans = it->second;
    // Affine image of the origin is the translation part.
    if (trans.norm() > 1e-12)
      throw NotRadiant("suspension: generator '" + name +
                       "' does not fix the origin");
  }
  return origin;
}

}  // namespace projconvex
