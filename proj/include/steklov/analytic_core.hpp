#ifndef STEKLOV_ANALYTIC_CORE_HPP
#define STEKLOV_ANALYTIC_CORE_HPP

#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "steklov/errors.hpp"

namespace steklov {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Uniform grid theta_j = 2*pi*j/N on the unit circle. N is a power of two
/// and at least 8.
class BoundaryGrid {
 public:
  explicit BoundaryGrid(Index n_points);

  Index size() const { return n_; }
  double angle(Index j) const { return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_); }
  Eigen::VectorXd angles() const;
  /// e^{i theta_j}
  Complex node(Index j) const { return std::polar(1.0, angle(j)); }

  /// Fourier modes carried by the grid are [min_mode, max_mode].
  Index min_mode() const { return -n_ / 2; }
  Index max_mode() const { return n_ / 2 - 1; }

  friend bool operator==(const BoundaryGrid& a, const BoundaryGrid& b) { return a.n_ == b.n_; }

 private:
  Index n_;
};

bool is_power_of_two(Index n);

/// Discrete Fourier coefficients h_n = (1/N) sum_j h(theta_j) e^{-i n theta_j},
/// returned in centered order: entry k holds mode n = k - N/2.
ComplexVector fourier_analyze(const ComplexVector& samples, const BoundaryGrid& grid);

/// Inverse of fourier_analyze; coefficients in centered order.
ComplexVector fourier_synthesize(const ComplexVector& coeffs, const BoundaryGrid& grid);

/// Complex samples on a BoundaryGrid together with their centered Fourier
/// coefficients. Both forms are computed at construction, so a signal is an
/// immutable value. Band limit is N/2 modes.
class BoundarySignal {
 public:
  static BoundarySignal from_samples(const BoundaryGrid& grid, ComplexVector samples);
  static BoundarySignal from_coefficients(const BoundaryGrid& grid, ComplexVector centered_coeffs);
  /// Samples h(theta_j) of a function of the angle.
  static BoundarySignal from_angle_function(const BoundaryGrid& grid,
                                            const std::function<Complex(double)>& h);
  /// Signal with a single mode n of amplitude c.
  static BoundarySignal mode(const BoundaryGrid& grid, Index n, Complex c = 1.0);

  const BoundaryGrid& grid() const { return grid_; }
  const ComplexVector& samples() const { return samples_; }
  const ComplexVector& coefficients() const { return coeffs_; }
  Complex coefficient(Index n) const;
  Index size() const { return grid_.size(); }

  /// max_j |h_j|
  double sup_norm() const;

 private:
  BoundarySignal(BoundaryGrid grid, ComplexVector samples, ComplexVector coeffs)
      : grid_(grid), samples_(std::move(samples)), coeffs_(std::move(coeffs)) {}

  BoundaryGrid grid_;
  ComplexVector samples_;
  ComplexVector coeffs_;
};

/// Taylor polynomial sum_{n=0}^{M} a_n z^n centred at the origin.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(ComplexVector::Zero(1)) {}
  explicit PowerSeries(ComplexVector coeffs);

  static PowerSeries monomial(Index n, Complex c = 1.0);
  /// sum_{n=0}^{degree} z^n
  static PowerSeries geometric(Index degree);

  const ComplexVector& coefficients() const { return coeffs_; }
  Complex coefficient(Index n) const { return n < coeffs_.size() ? coeffs_(n) : Complex{}; }
  Index degree() const { return coeffs_.size() - 1; }

  Complex operator()(Complex z) const;
  Complex derivative_at(Complex z) const;
  Complex second_derivative_at(Complex z) const;

  /// Coefficients (n+1) a_{n+1}.
  PowerSeries derivative() const;

 private:
  ComplexVector coeffs_;
};

/// F with F(0) = 0 and F' = f, coefficientwise F_{n+1} = a_n / (n+1).
PowerSeries antiderivative(const PowerSeries& f);

/// Where a holomorphic function lives. The gauge maps a point to a number that
/// is <= 1 exactly on the closed domain (|z| on the disk, |k(x)| on a Jordan
/// domain with Riemann map k). The parametrization maps the closed unit disk
/// onto the closed domain and is used to place sample points.
struct Domain {
  std::string name;
  bool is_unit_disk = true;
  std::function<double(Complex)> gauge;
  std::function<Complex(Complex)> parametrization;

  static Domain unit_disk();
};

/// Evaluable holomorphic function with its complex derivative.
class AnalyticFunction {
 public:
  using Rule = std::function<Complex(Complex)>;

  AnalyticFunction(Rule value, Rule derivative, Domain domain = Domain::unit_disk());

  static AnalyticFunction constant(Complex c);
  static AnalyticFunction identity();
  static AnalyticFunction monomial(int n, Complex c = 1.0);
  static AnalyticFunction from_series(PowerSeries series);
  /// exp(h) for holomorphic h.
  static AnalyticFunction exp_of(const AnalyticFunction& h);

  Complex operator()(Complex z) const { return value_(z); }
  Complex derivative(Complex z) const { return derivative_(z); }
  const Domain& domain() const { return domain_; }

  AnalyticFunction with_domain(Domain domain) const;

 private:
  Rule value_;
  Rule derivative_;
  Domain domain_;
};

AnalyticFunction operator+(const AnalyticFunction& a, const AnalyticFunction& b);
AnalyticFunction operator-(const AnalyticFunction& a, const AnalyticFunction& b);
AnalyticFunction operator*(const AnalyticFunction& a, const AnalyticFunction& b);
AnalyticFunction operator*(Complex c, const AnalyticFunction& a);

/// Harmonic extension u(r e^{i theta}) = sum_n h_n r^{|n|} e^{i n theta}.
Complex poisson_extend(const BoundarySignal& h, double r, double theta);

/// Integral mean M_p(r, f) = ((1/2pi) int |f(r e^{it})|^p dt)^{1/p} by the
/// trapezoid rule. Radii are clipped to 1 - 1e-6.
double hardy_norm_mp(const AnalyticFunction& f, double r, double p, int quad_points = 512);

/// (int_D |f|^p dA)^{1/p} with dA normalized to total mass 1. Gauss-Legendre
/// in the radius on [0, 1 - 1e-6], trapezoid in the angle.
double bergman_norm(const AnalyticFunction& f, double p, int radial_points = 64,
                    int angular_points = 256);

/// Gauss-Legendre nodes and weights on [a, b] (Golub-Welsch).
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Near-boundary cap for norm quadratures.
inline constexpr double kMaxNormRadius = 1.0 - 1e-6;

}  // namespace steklov

#endif  // STEKLOV_ANALYTIC_CORE_HPP
