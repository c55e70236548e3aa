#ifndef STEKLOV_POINCARE_STEKLOV_HPP
#define STEKLOV_POINCARE_STEKLOV_HPP

#include <optional>
#include <span>
#include <vector>

#include "steklov/analytic_core.hpp"
#include "steklov/conformal.hpp"
#include "steklov/semiflow.hpp"

namespace steklov {

/// Default ODE tolerance for boundary evolutions.
inline constexpr double kEvolveTol = 1e-10;

/// Evolution problem du/dt = g u + G du/dz on the boundary of the disk or of a
/// Jordan domain Omega = k^{-1}(D). Boundary data live on the disk-side grid
/// theta_j, i.e. at the tabulated points x_j = k^{-1}(e^{i theta_j}).
///
/// Analytic data (negative modes below 1e-10) admit any weight. Harmonic data
/// with negative modes are accepted only for unweighted problems, where
/// u o phi_t stays harmonic.
class RobinProblem {
 public:
  static RobinProblem on_disk(AnalyticFunction generator, std::optional<AnalyticFunction> weight,
                              BoundarySignal initial);
  static RobinProblem on_domain(ConformalMap map, AnalyticFunction generator,
                                std::optional<AnalyticFunction> weight, BoundarySignal initial);

  const std::optional<ConformalMap>& map() const { return map_; }
  const AnalyticFunction& generator() const { return generator_; }
  const std::optional<AnalyticFunction>& weight() const { return weight_; }
  const BoundarySignal& initial() const { return initial_; }
  bool analytic() const { return analytic_; }
  std::optional<double> sup_re_weight() const { return sup_re_weight_; }
  double angle_condition() const { return angle_condition_; }

  /// (k' G) o k^{-1}, the generator of the conjugated disk flow.
  const AnalyticFunction& disk_generator() const { return disk_generator_; }
  /// g o k^{-1}
  const std::optional<AnalyticFunction>& disk_weight() const { return disk_weight_; }

  /// Same problem with different initial data.
  RobinProblem with_initial(BoundarySignal initial) const;

 private:
  RobinProblem(std::optional<ConformalMap> map, AnalyticFunction generator,
               std::optional<AnalyticFunction> weight, BoundarySignal initial);

  std::optional<ConformalMap> map_;
  AnalyticFunction generator_;
  std::optional<AnalyticFunction> weight_;
  BoundarySignal initial_;
  AnalyticFunction disk_generator_;
  std::optional<AnalyticFunction> disk_weight_;
  bool analytic_ = true;
  std::optional<double> sup_re_weight_;
  double angle_condition_ = 0.0;
};

/// True when every negative mode is below 1e-10 relative to max(1, |h|_coef).
bool is_analytic_signal(const BoundarySignal& h);

/// h_n -> e^{-|n| t} h_n: the disk Dirichlet-to-Neumann semigroup.
BoundarySignal dtn_multiplier_evolve(const BoundarySignal& h, double t);

/// Lax semigroup T_t h(z) = u(z e^{-t}) with u the Poisson extension of h.
BoundarySignal lax_evolve(const BoundarySignal& h, double t);

/// Trace of the weighted composition semigroup m_t (u o phi_t) at the boundary
/// nodes, computed by one augmented flow per node.
BoundarySignal robin_evolve(const RobinProblem& problem, double t, double tol = kEvolveTol);

/// Tr(g u + G u'), the time derivative of robin_evolve at t = 0.
BoundarySignal robin_generator_apply(const RobinProblem& problem);

/// Node-wise gap between -d_nu u (disk multiplier scaled by |k'|) and
/// |k'| (G . grad u) with G = -k/k' (finite differences in Omega).
double dtn_domain_relation_residual(const ConformalMap& map, const BoundarySignal& h);

struct ConsistencyFit {
  /// NaN when every residual is below 1e-10.
  double slope;
  std::vector<double> residuals;
};

/// Slope of log ||(S_t u0 - u0)/t - Gamma u0||_inf against log t.
ConsistencyFit generator_consistency_order(const RobinProblem& problem,
                                           std::span<const double> times,
                                           double tol = 1e-12);

/// z -> m_t(z) f(phi_t(z)) with its complex derivative; the weight may be
/// absent.
AnalyticFunction weighted_composition(const AnalyticFunction& f, const AnalyticFunction& generator,
                                      std::optional<AnalyticFunction> weight, double t,
                                      double tol = kEvolveTol);

struct LittlewoodCheck {
  double norm;
  double bound;
};

/// norm = ||m_t (f o phi_t)||_{A^p};
/// bound = sup|m_t|^{1/p} (1 + |phi_t(0)|)/(1 - |phi_t(0)|) ||f||_{A^p}.
LittlewoodCheck littlewood_bound_check(const PowerSeries& f, const RobinProblem& problem, double t,
                                       double p, int radial_points = 24, int angular_points = 64,
                                       double tol = kEvolveTol);

}  // namespace steklov

#endif  // STEKLOV_POINCARE_STEKLOV_HPP
