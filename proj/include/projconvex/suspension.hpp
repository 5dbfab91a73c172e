#ifndef PROJCONVEX_SUSPENSION_HPP
#define PROJCONVEX_SUSPENSION_HPP

#include <map>
#include <string>

#include "projconvex/projcore.hpp"

namespace projconvex {

// Radiant affine bookkeeping for the cone over a projective structure: deck
// transformations act linearly through det +-1 lifts, the extra circle factor
// through a dilation.
class SuspensionCtx {
 public:
  SuspensionCtx(int base_dim, std::map<std::string, ProjMap> holonomy_lift,
                double dilation_factor = 2.0);

  int base_dim() const { return base_dim_; }
  double dilation_factor() const { return dilation_factor_; }
  const std::map<std::string, ProjMap>& lifts() const { return lifts_; }

  // Test hook: replace a generator by an affine map with a translation part.
  void set_translation(const std::string& name, const Eigen::VectorXd& t);

  // (x, t) -> t D'(x) on unit representatives.
  Eigen::VectorXd suspend_point(const ProjPoint& p, double t) const;

  // gamma'(x, t) = (gamma(x), |h'(gamma)(t D'(x))|).
  std::pair<ProjPoint, double> suspend_deck(const std::string& g_name,
                                            const ProjPoint& p, double t) const;

  // S_s: (x, t) -> (x, s t) with s the stored dilation factor.
  std::pair<ProjPoint, double> suspend_dilation(const ProjPoint& p, double t) const;

  // Common fixed point of the suspended affine action; verifies every
  // generator is linear with zero translation part. Throws NotRadiant.
  Eigen::VectorXd radiant_fixed_point() const;

 private:
  int base_dim_;
  double dilation_factor_;
  std::map<std::string, ProjMap> lifts_;
  std::map<std::string, Eigen::VectorXd> translations_;
};

}  // namespace projconvex

#endif
