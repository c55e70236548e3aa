#include "steklov/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace steklov {

namespace {

constexpr int kNewtonMaxIter = 50;
constexpr double kNewtonTol = 1e-13;
constexpr double kMinDerivative = 1e-10;

Complex newton_invert(const PowerSeries& inverse, Complex x) {
  const Complex scale = inverse.coefficient(1);
  Complex w = x / scale;
  if (std::abs(w) > 1.0) w /= std::abs(w);

  Complex residual = inverse(w) - x;
  for (int iter = 0; iter < kNewtonMaxIter; ++iter) {
    const Complex slope = inverse.derivative_at(w);
    if (std::abs(slope) < 1e-14) {
      throw Error(ErrorKind::inversion, "vanishing derivative during Newton inversion");
    }
    const Complex step = residual / slope;
    // damped: halve until the residual does not grow
    double lambda = 1.0;
    Complex trial = w - step;
    Complex trial_residual = inverse(trial) - x;
    for (int halvings = 0; halvings < 30 && std::abs(trial_residual) > std::abs(residual);
         ++halvings) {
      lambda *= 0.5;
      trial = w - lambda * step;
      trial_residual = inverse(trial) - x;
    }
    w = trial;
    residual = trial_residual;
    if (std::abs(lambda * step) <= kNewtonTol * std::max(1.0, std::abs(w))) return w;
  }
  throw Error(ErrorKind::inversion, "Newton inversion did not converge; residual " +
                                        std::to_string(std::abs(residual)));
}

BoundaryCorrespondence tabulate(const PowerSeries& inverse, const BoundaryGrid& grid) {
  BoundaryCorrespondence table{grid, Eigen::VectorXd(grid.size()), ComplexVector(grid.size())};
  double unwrap = 0.0;
  double previous = 0.0;
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex x = inverse(grid.node(j));
    table.points(j) = x;
    double arg = std::arg(x);
    // continuous branch starting near theta_0 = 0
    if (j > 0) {
      while (arg + unwrap - previous > kPi) unwrap -= 2.0 * kPi;
      while (arg + unwrap - previous < -kPi) unwrap += 2.0 * kPi;
    }
    previous = arg + unwrap;
    table.sigma(j) = previous;
  }
  return table;
}

}  // namespace

ConformalMap::ConformalMap(PowerSeries inverse, BoundaryCorrespondence table,
                           MapDiagnostics diagnostics)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(inverse), std::move(table), diagnostics})) {}

Complex ConformalMap::forward(Complex x) const {
  if (is_identity()) return x;
  return newton_invert(impl_->inverse, x);
}

Complex ConformalMap::forward_derivative(Complex x) const {
  const Complex slope = inverse_derivative(forward(x));
  if (std::abs(slope) < 1e-300) throw Error(ErrorKind::degenerate_map, "k^{-1}' vanishes");
  return 1.0 / slope;
}

Complex ConformalMap::forward_second_derivative(Complex x) const {
  const Complex w = forward(x);
  const Complex d1 = inverse_derivative(w);
  const Complex d2 = inverse_second_derivative(w);
  return -d2 / (d1 * d1 * d1);
}

Domain ConformalMap::domain() const {
  if (is_identity()) return Domain::unit_disk();
  ConformalMap self = *this;
  return Domain{"Jordan domain", false,
                [self](Complex x) {
                  try {
                    return std::abs(self.forward(x));
                  } catch (const Error&) {
                    return std::numeric_limits<double>::infinity();
                  }
                },
                [self](Complex w) { return self.inverse(w); }};
}

double ConformalMap::round_trip_error() const {
  const BoundaryCorrespondence& t = impl_->table;
  double worst = 0.0;
  for (Index j = 0; j < t.grid.size(); ++j) {
    worst = std::max(worst, std::abs(forward(t.points(j)) - t.grid.node(j)));
  }
  return worst;
}

bool ConformalMap::is_identity() const {
  const ComplexVector& c = impl_->inverse.coefficients();
  if (c.size() < 2 || c(1) != Complex{1.0}) return false;
  if (c(0) != Complex{}) return false;
  for (Index n = 2; n < c.size(); ++n) {
    if (c(n) != Complex{}) return false;
  }
  return true;
}

ConformalMap identity_map(const BoundaryGrid& grid) {
  PowerSeries inverse = PowerSeries::monomial(1);
  BoundaryCorrespondence table = tabulate(inverse, grid);
  return ConformalMap(std::move(inverse), std::move(table));
}

ConformalMap make_polynomial_map(const std::vector<Complex>& higher_coeffs,
                                 const BoundaryGrid& grid) {
  double criterion = 0.0;
  ComplexVector coeffs = ComplexVector::Zero(static_cast<Index>(higher_coeffs.size()) + 2);
  coeffs(1) = 1.0;
  for (std::size_t i = 0; i < higher_coeffs.size(); ++i) {
    const Index j = static_cast<Index>(i) + 2;
    coeffs(j) = higher_coeffs[i];
    criterion += static_cast<double>(j) * std::abs(higher_coeffs[i]);
  }
  if (!(criterion < 1.0)) {
    throw Error(ErrorKind::invalid_map,
                "sum j|c_j| = " + std::to_string(criterion) + " violates the univalence bound 1");
  }
  PowerSeries inverse(std::move(coeffs));
  BoundaryCorrespondence table = tabulate(inverse, grid);
  return ConformalMap(std::move(inverse), std::move(table));
}

ConformalMap make_scaling_map(double scale, const BoundaryGrid& grid) {
  if (!(scale > 0.0)) throw Error(ErrorKind::invalid_map, "scale must be positive");
  PowerSeries inverse = PowerSeries::monomial(1, scale);
  BoundaryCorrespondence table = tabulate(inverse, grid);
  return ConformalMap(std::move(inverse), std::move(table));
}

StarLikeDomain StarLikeDomain::from_function(std::function<double(double)> rho, int check_points) {
  for (int j = 0; j < check_points; ++j) {
    const double value = rho(2.0 * kPi * j / check_points);
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::domain, "radius function must be positive");
    }
  }
  return StarLikeDomain(std::move(rho));
}

StarLikeDomain StarLikeDomain::from_samples(const Eigen::VectorXd& samples) {
  Eigen::VectorXd s = samples;
  if (s.size() >= 2 && std::abs(s(s.size() - 1) - s(0)) <= 1e-12 * std::abs(s(0))) {
    s.conservativeResize(s.size() - 1);
  }
  const Index m = s.size();
  if (m < 3) throw Error(ErrorKind::size, "star-like domain needs at least 3 radius samples");
  if (!(s.minCoeff() > 0.0)) throw Error(ErrorKind::domain, "radius samples must be positive");

  // direct DFT: M is arbitrary here
  const Index half = m / 2;
  ComplexVector coeffs(2 * half + 1);
  for (Index n = -half; n <= half; ++n) {
    Complex acc{};
    for (Index j = 0; j < m; ++j) {
      acc += s(j) * std::polar(1.0, -2.0 * kPi * static_cast<double>(n * j) / static_cast<double>(m));
    }
    acc /= static_cast<double>(m);
    if (m % 2 == 0 && (n == half || n == -half)) acc *= 0.5;
    coeffs(n + half) = acc;
  }
  return StarLikeDomain([coeffs, half](double phi) {
    Complex acc{};
    for (Index n = -half; n <= half; ++n) {
      acc += coeffs(n + half) * std::polar(1.0, static_cast<double>(n) * phi);
    }
    return acc.real();
  });
}

Eigen::VectorXd conjugate_function(const Eigen::VectorXd& samples) {
  const BoundaryGrid grid(samples.size());
  ComplexVector coeffs = fourier_analyze(samples.cast<Complex>(), grid);
  const Index n = grid.size();
  for (Index k = 0; k < n; ++k) {
    const Index mode = k - n / 2;
    if (mode == 0 || mode == grid.min_mode()) {
      coeffs(k) = 0.0;
    } else {
      coeffs(k) *= mode > 0 ? -kI : kI;
    }
  }
  return fourier_synthesize(coeffs, grid).real();
}

ConformalMap theodorsen_solve(const StarLikeDomain& domain, const BoundaryGrid& grid,
                              int max_iter, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  const Eigen::VectorXd theta = grid.angles();
  Eigen::VectorXd sigma = theta;
  Eigen::VectorXd log_rho(grid.size());
  double update = std::numeric_limits<double>::infinity();
  int iter = 0;
  while (iter < max_iter) {
    for (Index j = 0; j < grid.size(); ++j) log_rho(j) = std::log(domain(sigma(j)));
    Eigen::VectorXd next = theta + conjugate_function(log_rho);
    update = (next - sigma).cwiseAbs().maxCoeff();
    sigma = std::move(next);
    ++iter;
    if (update < tol) break;
  }
  if (!(update < tol)) {
    throw Error(ErrorKind::mapping, "Theodorsen iteration did not converge in " +
                                        std::to_string(max_iter) + " iterations; last update " +
                                        std::to_string(update));
  }

  BoundaryCorrespondence table{grid, sigma, ComplexVector(grid.size())};
  for (Index j = 0; j < grid.size(); ++j) {
    table.points(j) = std::polar(domain(sigma(j)), sigma(j));
  }
  const ComplexVector coeffs = fourier_analyze(table.points, grid);
  ComplexVector taylor(grid.max_mode() + 1);
  for (Index n = 0; n <= grid.max_mode(); ++n) taylor(n) = coeffs(n + grid.size() / 2);
  return ConformalMap(PowerSeries(std::move(taylor)), std::move(table),
                      MapDiagnostics{iter, update});
}

Complex normal_field(const ConformalMap& map, Complex w) {
  const Complex d = map.inverse_derivative(w);
  if (std::abs(d) < kMinDerivative) {
    throw Error(ErrorKind::degenerate_map, "vanishing map derivative");
  }
  // k/k' |k'| with k = w and k' = 1/d
  return w * d / std::abs(d);
}

Complex unit_normal(const ConformalMap& map, Complex x) {
  const Complex w = map.forward(x);
  const Complex k_prime = map.forward_derivative(x);
  if (std::abs(k_prime) < kMinDerivative) {
    throw Error(ErrorKind::degenerate_map, "|k'| below 1e-10 at boundary point");
  }
  return w / k_prime * std::abs(k_prime);
}

Complex unit_normal_at_node(const ConformalMap& map, Index j) {
  return normal_field(map, map.table().grid.node(j));
}

}  // namespace steklov
