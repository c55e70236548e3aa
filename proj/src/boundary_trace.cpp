#include "steklov/boundary_trace.hpp"

#include <algorithm>
#include <cmath>

namespace steklov {

namespace {

Index next_power_of_two(Index n) {
  Index p = 8;
  while (p < n) p *= 2;
  return p;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

BoundarySignal radial_boundary_function(const AnalyticFunction& f, const ConformalMap& map,
                                        double r, const BoundaryGrid& grid) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "radius must lie in (0, 1)");
  ComplexVector samples(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    samples(j) = f(map.inverse(r * grid.node(j)));
    if (!finite(samples(j))) {
      throw Error(ErrorKind::probe, "f_r not finite at node " + std::to_string(j));
    }
  }
  return BoundarySignal::from_samples(grid, std::move(samples));
}

BoundaryDistributionPairing make_distribution_pairing(PowerSeries f, double p,
                                                      std::vector<double> radii) {
  if (!(p >= 1.0)) throw Error(ErrorKind::domain, "integrability exponent must be >= 1");
  if (radii.empty()) throw Error(ErrorKind::domain, "radius sequence is empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw Error(ErrorKind::domain, "radii must increase strictly inside (0, 1)");
    }
  }
  PowerSeries F = antiderivative(f);
  return BoundaryDistributionPairing{std::move(f), std::move(F), p, std::move(radii)};
}

PairingResult distributional_pairing(const BoundaryDistributionPairing& pairing,
                                     const BoundarySignal& test_function) {
  const BoundaryGrid& grid = test_function.grid();
  const Index band = grid.size() / 4;
  const double scale = std::max(1.0, test_function.coefficients().cwiseAbs().maxCoeff());
  for (Index n = grid.min_mode(); n <= grid.max_mode(); ++n) {
    if (std::abs(n) > band && std::abs(test_function.coefficient(n)) > 1e-12 * scale) {
      throw Error(ErrorKind::domain, "test function must have degree <= N/4");
    }
  }

  // quadrature grid on which f_r, F_r and the test function multiply without
  // aliasing
  const Index degree = pairing.F.degree();
  const BoundaryGrid quad(next_power_of_two(std::max(grid.size(), 2 * (degree + 2) + 2 * band)));
  const Index nq = quad.size();

  ComplexVector phi(nq);
  ComplexVector dpsi_r(nq);  // r * d/dt [phi(t) e^{-it} / (i r)]
  for (Index j = 0; j < nq; ++j) {
    const double t = quad.angle(j);
    Complex value{};
    Complex derivative{};
    for (Index m = -band; m <= band; ++m) {
      const Complex c = test_function.coefficient(m);
      value += c * std::polar(1.0, static_cast<double>(m) * t);
      derivative += static_cast<double>(m - 1) * c * std::polar(1.0, static_cast<double>(m - 1) * t);
    }
    phi(j) = value;
    dpsi_r(j) = derivative;
  }

  PairingResult result;
  for (double r : pairing.radii) {
    ComplexVector f_r(nq);
    ComplexVector F_r(nq);
    for (Index j = 0; j < nq; ++j) {
      const Complex z = r * quad.node(j);
      f_r(j) = pairing.f(z);
      F_r(j) = pairing.F(z);
    }
    const double inv_n = 1.0 / static_cast<double>(nq);
    const Complex direct = f_r.cwiseProduct(phi).sum() * inv_n;
    const Complex by_parts = -(F_r.cwiseProduct(dpsi_r).sum() * inv_n) / r;

    const ComplexVector coeffs = fourier_analyze(f_r, quad);
    Complex compensated{};
    double radial = 1.0;
    for (Index n = 0; n <= band; ++n) {
      compensated += coeffs(n + nq / 2) / radial * test_function.coefficient(-n);
      radial *= r;
    }
    if (!finite(direct) || !finite(by_parts) || !finite(compensated)) {
      throw Error(ErrorKind::quadrature, "non-finite pairing at r = " + std::to_string(r));
    }
    result.radii.push_back(r);
    result.direct.push_back(direct);
    result.by_parts.push_back(by_parts);
    result.compensated.push_back(compensated);
  }
  const std::size_t count = result.compensated.size();
  result.value = result.compensated.back();
  result.converged =
      count >= 2 && std::abs(result.compensated[count - 1] - result.compensated[count - 2]) < 1e-8;
  return result;
}

AntiderivativeBound antiderivative_bound_check(const PowerSeries& f, double p, double eps,
                                               double r, int radial_points, int angular_points) {
  if (!(p >= 1.0)) throw Error(ErrorKind::domain, "p must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::domain, "eps must lie in (0, 1)");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "r must lie in (0, 1)");
  const AnalyticFunction F = AnalyticFunction::from_series(antiderivative(f));
  const double lhs = hardy_norm_mp(F, r, p, angular_points);
  const double norm = bergman_norm(AnalyticFunction::from_series(f), p, radial_points,
                                   angular_points);
  const double rp = std::pow(r, p);
  return AntiderivativeBound{lhs, (std::pow(rp / eps, 1.0 / p) + eps * r) * norm,
                             (rp / eps + std::pow(eps * r, p)) * norm};
}

BoundarySignal trace(const AnalyticFunction& field, const ConformalMap& map,
                     const BoundaryGrid& grid) {
  ComplexVector samples(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    samples(j) = field(map.inverse(kTraceRadius * grid.node(j)));
    if (!finite(samples(j))) {
      throw Error(ErrorKind::probe, "field not finite at node " + std::to_string(j));
    }
  }
  ComplexVector coeffs = fourier_analyze(samples, grid);
  for (Index k = 0; k < grid.size(); ++k) {
    const Index mode = k - grid.size() / 2;
    coeffs(k) /= std::pow(kTraceRadius, static_cast<double>(std::abs(mode)));
  }
  return BoundarySignal::from_coefficients(grid, std::move(coeffs));
}

}  // namespace steklov
