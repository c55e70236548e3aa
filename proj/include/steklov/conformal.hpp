#ifndef STEKLOV_CONFORMAL_HPP
#define STEKLOV_CONFORMAL_HPP

#include <functional>
#include <memory>

#include "steklov/analytic_core.hpp"

namespace steklov {

/// Tabulated boundary correspondence theta_j -> sigma_j -> x_j on a grid, where
/// x_j = k^{-1}(e^{i theta_j}) and sigma_j is the polar angle parameter of x_j.
struct BoundaryCorrespondence {
  BoundaryGrid grid;
  Eigen::VectorXd sigma;
  ComplexVector points;
};

struct MapDiagnostics {
  int iterations = 0;
  double last_update = 0.0;
};

/// Riemann map k: Omega -> D of a Jordan domain, represented by the series of
/// its inverse k^{-1}: D -> Omega. The forward map is evaluated by damped
/// Newton inversion of the series.
class ConformalMap {
 public:
  ConformalMap(PowerSeries inverse, BoundaryCorrespondence table, MapDiagnostics diagnostics = {});

  /// k(x)
  Complex forward(Complex x) const;
  /// k'(x) = 1 / (k^{-1})'(k(x))
  Complex forward_derivative(Complex x) const;
  Complex forward_second_derivative(Complex x) const;

  Complex inverse(Complex w) const { return impl_->inverse(w); }
  Complex inverse_derivative(Complex w) const { return impl_->inverse.derivative_at(w); }
  Complex inverse_second_derivative(Complex w) const {
    return impl_->inverse.second_derivative_at(w);
  }

  const PowerSeries& inverse_series() const { return impl_->inverse; }
  const BoundaryCorrespondence& table() const { return impl_->table; }
  const MapDiagnostics& diagnostics() const { return impl_->diagnostics; }

  /// Omega described by the gauge |k(x)| and parametrization k^{-1}.
  Domain domain() const;

  /// max_j |k(x_j) - e^{i theta_j}| over the tabulated boundary.
  double round_trip_error() const;

  bool is_identity() const;

 private:
  struct Impl {
    PowerSeries inverse;
    BoundaryCorrespondence table;
    MapDiagnostics diagnostics;
  };
  std::shared_ptr<const Impl> impl_;
};

ConformalMap identity_map(const BoundaryGrid& grid);

/// Inverse map k^{-1}(w) = w + sum_{j>=2} c_j w^j; coefficients are passed as
/// [c_2, c_3, ...]. Requires sum j|c_j| < 1, which makes k^{-1} univalent.
ConformalMap make_polynomial_map(const std::vector<Complex>& higher_coeffs,
                                 const BoundaryGrid& grid);

/// Map with k^{-1}(w) = scale * w.
ConformalMap make_scaling_map(double scale, const BoundaryGrid& grid);

/// Domain {rho(phi) e^{i phi}} with rho > 0 smooth and 2pi-periodic.
class StarLikeDomain {
 public:
  static StarLikeDomain from_function(std::function<double(double)> rho, int check_points = 1024);
  /// Samples rho(2 pi j / M); evaluated between samples by trigonometric
  /// interpolation.
  static StarLikeDomain from_samples(const Eigen::VectorXd& samples);

  double operator()(double phi) const { return rho_(phi); }

 private:
  explicit StarLikeDomain(std::function<double(double)> rho) : rho_(std::move(rho)) {}
  std::function<double(double)> rho_;
};

/// Boundary correspondence of a star-like domain by Theodorsen's fixed point
/// sigma = theta + K[log rho(sigma)], K the periodic conjugation. The interior
/// inverse map is the truncated Fourier series of the boundary table.
ConformalMap theodorsen_solve(const StarLikeDomain& domain, const BoundaryGrid& grid,
                              int max_iter = 200, double tol = 1e-14);

/// Periodic conjugation (Hilbert transform): multiplier -i sgn(n); the mean and
/// the Nyquist mode are dropped.
Eigen::VectorXd conjugate_function(const Eigen::VectorXd& samples);

/// Unit outward normal nu(x) = k(x)/k'(x) |k'(x)| at a boundary point x.
Complex unit_normal(const ConformalMap& map, Complex x);
/// nu at the tabulated node j, without Newton inversion.
Complex unit_normal_at_node(const ConformalMap& map, Index j);
/// The expression k/k' |k'| evaluated at x = k^{-1}(w) for |w| <= 1; it has
/// modulus |w| and equals the unit normal on the boundary.
Complex normal_field(const ConformalMap& map, Complex w);

}  // namespace steklov

#endif  // STEKLOV_CONFORMAL_HPP
