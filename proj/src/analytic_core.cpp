#include "steklov/analytic_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace steklov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::size: return "size error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::quadrature: return "quadrature error";
    case ErrorKind::invalid_generator: return "invalid generator";
    case ErrorKind::probe: return "probe error";
    case ErrorKind::integration: return "integration error";
    case ErrorKind::invariance_violation: return "invariance violation";
    case ErrorKind::degenerate_map: return "degenerate map";
    case ErrorKind::invalid_map: return "invalid map";
    case ErrorKind::inversion: return "inversion error";
    case ErrorKind::mapping: return "mapping error";
    case ErrorKind::degenerate_weight: return "degenerate weight";
    case ErrorKind::unsupported_data: return "unsupported data";
  }
  return "error";
}

bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

BoundaryGrid::BoundaryGrid(Index n_points) : n_(n_points) {
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw Error(ErrorKind::size, "grid size must be a power of two >= 8, got " +
                                     std::to_string(n_points));
  }
}

Eigen::VectorXd BoundaryGrid::angles() const {
  Eigen::VectorXd theta(n_);
  for (Index j = 0; j < n_; ++j) theta(j) = angle(j);
  return theta;
}

namespace {

// Eigen::FFT keeps per-size twiddle tables, so one instance per thread.
Eigen::FFT<double>& thread_fft() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

ComplexVector fourier_analyze(const ComplexVector& samples, const BoundaryGrid& grid) {
  const Index n = grid.size();
  if (samples.size() != n) {
    throw Error(ErrorKind::size, "expected " + std::to_string(n) + " samples, got " +
                                     std::to_string(samples.size()));
  }
  std::vector<Complex> in(samples.data(), samples.data() + n);
  std::vector<Complex> out;
  thread_fft().fwd(out, in);

  ComplexVector centered(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (Index k = 0; k < n; ++k) {
    const Index mode = k - n / 2;
    centered(k) = out[static_cast<std::size_t>((mode + n) % n)] * scale;
  }
  return centered;
}

ComplexVector fourier_synthesize(const ComplexVector& coeffs, const BoundaryGrid& grid) {
  const Index n = grid.size();
  if (coeffs.size() != n) {
    throw Error(ErrorKind::size, "expected " + std::to_string(n) + " coefficients, got " +
                                     std::to_string(coeffs.size()));
  }
  std::vector<Complex> in(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    const Index mode = k - n / 2;
    in[static_cast<std::size_t>((mode + n) % n)] = coeffs(k) * static_cast<double>(n);
  }
  std::vector<Complex> out;
  thread_fft().inv(out, in);
  return Eigen::Map<const ComplexVector>(out.data(), n);
}

BoundarySignal BoundarySignal::from_samples(const BoundaryGrid& grid, ComplexVector samples) {
  ComplexVector coeffs = fourier_analyze(samples, grid);
  return BoundarySignal(grid, std::move(samples), std::move(coeffs));
}

BoundarySignal BoundarySignal::from_coefficients(const BoundaryGrid& grid,
                                                 ComplexVector centered_coeffs) {
  ComplexVector samples = fourier_synthesize(centered_coeffs, grid);
  return BoundarySignal(grid, std::move(samples), std::move(centered_coeffs));
}

BoundarySignal BoundarySignal::from_angle_function(const BoundaryGrid& grid,
                                                   const std::function<Complex(double)>& h) {
  ComplexVector samples(grid.size());
  for (Index j = 0; j < grid.size(); ++j) samples(j) = h(grid.angle(j));
  return from_samples(grid, std::move(samples));
}

BoundarySignal BoundarySignal::mode(const BoundaryGrid& grid, Index n, Complex c) {
  if (n < grid.min_mode() || n > grid.max_mode()) {
    throw Error(ErrorKind::size, "mode " + std::to_string(n) + " outside grid band");
  }
  ComplexVector coeffs = ComplexVector::Zero(grid.size());
  coeffs(n + grid.size() / 2) = c;
  return from_coefficients(grid, std::move(coeffs));
}

Complex BoundarySignal::coefficient(Index n) const {
  if (n < grid_.min_mode() || n > grid_.max_mode()) return {};
  return coeffs_(n + grid_.size() / 2);
}

double BoundarySignal::sup_norm() const { return samples_.cwiseAbs().maxCoeff(); }

PowerSeries::PowerSeries(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) coeffs_ = ComplexVector::Zero(1);
}

PowerSeries PowerSeries::monomial(Index n, Complex c) {
  ComplexVector a = ComplexVector::Zero(n + 1);
  a(n) = c;
  return PowerSeries(std::move(a));
}

PowerSeries PowerSeries::geometric(Index degree) {
  return PowerSeries(ComplexVector::Ones(degree + 1));
}

Complex PowerSeries::operator()(Complex z) const {
  Complex acc{};
  for (Index n = coeffs_.size() - 1; n >= 0; --n) acc = acc * z + coeffs_(n);
  return acc;
}

Complex PowerSeries::derivative_at(Complex z) const {
  Complex acc{};
  for (Index n = coeffs_.size() - 1; n >= 1; --n) {
    acc = acc * z + static_cast<double>(n) * coeffs_(n);
  }
  return acc;
}

Complex PowerSeries::second_derivative_at(Complex z) const {
  Complex acc{};
  for (Index n = coeffs_.size() - 1; n >= 2; --n) {
    acc = acc * z + static_cast<double>(n * (n - 1)) * coeffs_(n);
  }
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (coeffs_.size() <= 1) return PowerSeries();
  ComplexVector d(coeffs_.size() - 1);
  for (Index n = 0; n < d.size(); ++n) d(n) = static_cast<double>(n + 1) * coeffs_(n + 1);
  return PowerSeries(std::move(d));
}

PowerSeries antiderivative(const PowerSeries& f) {
  const ComplexVector& a = f.coefficients();
  ComplexVector big(a.size() + 1);
  big(0) = 0.0;
  for (Index n = 0; n < a.size(); ++n) big(n + 1) = a(n) / static_cast<double>(n + 1);
  return PowerSeries(std::move(big));
}

Domain Domain::unit_disk() {
  return Domain{"unit disk", true, [](Complex z) { return std::abs(z); },
                [](Complex w) { return w; }};
}

AnalyticFunction::AnalyticFunction(Rule value, Rule derivative, Domain domain)
    : value_(std::move(value)), derivative_(std::move(derivative)), domain_(std::move(domain)) {}

AnalyticFunction AnalyticFunction::constant(Complex c) {
  return {[c](Complex) { return c; }, [](Complex) { return Complex{}; }};
}

AnalyticFunction AnalyticFunction::identity() {
  return {[](Complex z) { return z; }, [](Complex) { return Complex{1.0}; }};
}

AnalyticFunction AnalyticFunction::monomial(int n, Complex c) {
  if (n == 0) return constant(c);
  return {[n, c](Complex z) { return c * std::pow(z, n); },
          [n, c](Complex z) { return c * static_cast<double>(n) * std::pow(z, n - 1); }};
}

AnalyticFunction AnalyticFunction::from_series(PowerSeries series) {
  return {[series](Complex z) { return series(z); },
          [series](Complex z) { return series.derivative_at(z); }};
}

AnalyticFunction AnalyticFunction::exp_of(const AnalyticFunction& h) {
  return {[h](Complex z) { return std::exp(h(z)); },
          [h](Complex z) { return h.derivative(z) * std::exp(h(z)); }, h.domain()};
}

AnalyticFunction AnalyticFunction::with_domain(Domain domain) const {
  return {value_, derivative_, std::move(domain)};
}

AnalyticFunction operator+(const AnalyticFunction& a, const AnalyticFunction& b) {
  return {[a, b](Complex z) { return a(z) + b(z); },
          [a, b](Complex z) { return a.derivative(z) + b.derivative(z); }, a.domain()};
}

AnalyticFunction operator-(const AnalyticFunction& a, const AnalyticFunction& b) {
  return {[a, b](Complex z) { return a(z) - b(z); },
          [a, b](Complex z) { return a.derivative(z) - b.derivative(z); }, a.domain()};
}

AnalyticFunction operator*(const AnalyticFunction& a, const AnalyticFunction& b) {
  return {[a, b](Complex z) { return a(z) * b(z); },
          [a, b](Complex z) { return a.derivative(z) * b(z) + a(z) * b.derivative(z); },
          a.domain()};
}

AnalyticFunction operator*(Complex c, const AnalyticFunction& a) {
  return {[a, c](Complex z) { return c * a(z); },
          [a, c](Complex z) { return c * a.derivative(z); }, a.domain()};
}

Complex poisson_extend(const BoundarySignal& h, double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw Error(ErrorKind::domain, "Poisson extension needs 0 <= r < 1");
  }
  const BoundaryGrid& grid = h.grid();
  Complex u = h.coefficient(0);
  if (r == 0.0) return u;
  const Complex step = std::polar(r, theta);
  const Complex back = std::polar(r, -theta);
  Complex fwd = step;
  Complex bwd = back;
  for (Index n = 1; n <= grid.size() / 2; ++n) {
    if (n <= grid.max_mode()) u += h.coefficient(n) * fwd;
    u += h.coefficient(-n) * bwd;
    fwd *= step;
    bwd *= back;
  }
  return u;
}

double hardy_norm_mp(const AnalyticFunction& f, double r, double p, int quad_points) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "M_p needs 0 < r < 1");
  if (!(p >= 1.0)) throw Error(ErrorKind::domain, "M_p needs p >= 1");
  if (quad_points < 1) throw Error(ErrorKind::domain, "M_p needs at least one node");
  r = std::min(r, kMaxNormRadius);
  double acc = 0.0;
  for (int j = 0; j < quad_points; ++j) {
    const double theta = 2.0 * kPi * j / quad_points;
    const double v = std::pow(std::abs(f(std::polar(r, theta))), p);
    if (!std::isfinite(v)) throw Error(ErrorKind::quadrature, "non-finite integrand in M_p");
    acc += v;
  }
  return std::pow(acc / quad_points, 1.0 / p);
}

double bergman_norm(const AnalyticFunction& f, double p, int radial_points, int angular_points) {
  if (!(p >= 1.0)) throw Error(ErrorKind::domain, "Bergman norm needs p >= 1");
  if (radial_points < 1 || angular_points < 1) {
    throw Error(ErrorKind::domain, "Bergman norm needs positive node counts");
  }
  const QuadratureRule rule = gauss_legendre(radial_points, 0.0, kMaxNormRadius);
  // ||f||^p = 2 int_0^1 r M_p(r, f)^p dr
  double acc = 0.0;
  for (Index i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes(i);
    double ring = 0.0;
    for (int j = 0; j < angular_points; ++j) {
      const double theta = 2.0 * kPi * j / angular_points;
      ring += std::pow(std::abs(f(std::polar(r, theta))), p);
    }
    ring /= angular_points;
    if (!std::isfinite(ring)) {
      throw Error(ErrorKind::quadrature, "non-finite integrand at r = " + std::to_string(r));
    }
    acc += 2.0 * rule.weights(i) * r * ring;
  }
  return std::pow(acc, 1.0 / p);
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw Error(ErrorKind::domain, "Gauss-Legendre needs n >= 1");
  // Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  QuadratureRule rule;
  rule.nodes = (solver.eigenvalues().array() * half + mid).matrix();
  rule.weights = (2.0 * solver.eigenvectors().row(0).array().square() * half).matrix().transpose();
  return rule;
}

}  // namespace steklov
