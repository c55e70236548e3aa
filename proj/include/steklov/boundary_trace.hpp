#ifndef STEKLOV_BOUNDARY_TRACE_HPP
#define STEKLOV_BOUNDARY_TRACE_HPP

#include <vector>

#include "steklov/analytic_core.hpp"
#include "steklov/conformal.hpp"

namespace steklov {

/// Radius at which interior fields are sampled to approximate their traces.
inline constexpr double kTraceRadius = 1.0 - 1e-6;

/// f_r(x_j) = f(k^{-1}(r k(x_j))) at the boundary points x_j = k^{-1}(e^{i theta_j}).
BoundarySignal radial_boundary_function(const AnalyticFunction& f, const ConformalMap& map,
                                        double r, const BoundaryGrid& grid);

/// A Bergman-class series f with its antiderivative F and the radii along
/// which boundary pairings are taken.
struct BoundaryDistributionPairing {
  PowerSeries f;
  PowerSeries F;
  double p = 1.0;
  std::vector<double> radii;
};

inline const std::vector<double> kDefaultPairingRadii{0.9, 0.99, 0.999, 0.9999};

BoundaryDistributionPairing make_distribution_pairing(PowerSeries f, double p,
                                                      std::vector<double> radii = kDefaultPairingRadii);

struct PairingResult {
  /// Limit estimate at the last radius reached.
  Complex value;
  bool converged = false;
  std::vector<double> radii;
  /// (1/2pi) int f(r e^{it}) phi(t) dt
  std::vector<Complex> direct;
  /// The same integral after integration by parts against F.
  std::vector<Complex> by_parts;
  /// Per-mode radially compensated pairing sum_n (f_r)^_n r^{-n} phi^_{-n}.
  std::vector<Complex> compensated;
};

/// Pairing <T_f, phi> of the distributional boundary value of f with a
/// band-limited test function (degree <= N/4). Convergence is declared once
/// the compensated pairing changes by less than 1e-8 between successive radii.
PairingResult distributional_pairing(const BoundaryDistributionPairing& pairing,
                                     const BoundarySignal& test_function);

struct AntiderivativeBound {
  double lhs;            // M_p(r, F)
  double rhs;            // ((r^p/eps)^{1/p} + eps r) ||f||_{A^p}
  double displayed_rhs;  // (r^p/eps + (eps r)^p) ||f||_{A^p}
};

AntiderivativeBound antiderivative_bound_check(const PowerSeries& f, double p, double eps,
                                               double r, int radial_points = 96,
                                               int angular_points = 512);

/// Boundary trace of an interior field on Omega: samples at
/// k^{-1}(r_trace e^{i theta_j}), with mode n divided by r_trace^{|n|}.
BoundarySignal trace(const AnalyticFunction& field, const ConformalMap& map,
                     const BoundaryGrid& grid);

}  // namespace steklov

#endif  // STEKLOV_BOUNDARY_TRACE_HPP
