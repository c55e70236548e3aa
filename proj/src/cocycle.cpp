#include "steklov/cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace steklov {

namespace {

constexpr double kMinOmega = 1e-12;

Complex checked_omega(const AnalyticFunction& omega, Complex z) {
  const Complex value = omega(z);
  if (!(std::abs(value) >= kMinOmega)) {
    throw Error(ErrorKind::degenerate_weight, "|omega| below 1e-12");
  }
  return value;
}

}  // namespace

std::vector<Complex> interior_sample_points(const Domain& domain) {
  std::vector<Complex> points;
  points.reserve(500);
  for (int i = 0; i < 20; ++i) {
    const double r = 0.999 * (i + 1) / 20.0;
    for (int j = 0; j < 25; ++j) {
      points.push_back(domain.parametrization(std::polar(r, 2.0 * kPi * (j + 0.25 * i) / 25.0)));
    }
  }
  return points;
}

double sampled_sup_real_part(const AnalyticFunction& g) {
  double sup = -std::numeric_limits<double>::infinity();
  for (Complex z : interior_sample_points(g.domain())) sup = std::max(sup, g(z).real());
  if (!std::isfinite(sup)) throw Error(ErrorKind::probe, "weight is not finite on the domain");
  return sup;
}

CocycleSpec CocycleSpec::exponential(AnalyticFunction generator, AnalyticFunction g) {
  const double sup = sampled_sup_real_part(g);
  return CocycleSpec(CocycleKind::exponential, std::move(generator), std::move(g), sup);
}

CocycleSpec CocycleSpec::coboundary(AnalyticFunction generator, AnalyticFunction omega) {
  return CocycleSpec(CocycleKind::coboundary, std::move(generator), std::move(omega),
                     std::nullopt);
}

CocycleSpec CocycleSpec::derivative(AnalyticFunction generator) {
  return CocycleSpec(CocycleKind::derivative, std::move(generator), std::nullopt, std::nullopt);
}

Complex cocycle_eval(const CocycleSpec& spec, Complex z, double t, double tol) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "cocycle time must be nonnegative");
  if (t == 0.0) return 1.0;
  switch (spec.kind()) {
    case CocycleKind::exponential: {
      FlowOptions options;
      options.weight = spec.function();
      const FlowResult flow = flow_integrate(spec.generator(), z, t, tol, options);
      return std::exp(flow.weight_integral);
    }
    case CocycleKind::coboundary: {
      const Complex denominator = checked_omega(*spec.function(), z);
      const FlowResult flow = flow_integrate(spec.generator(), z, t, tol);
      return checked_omega(*spec.function(), flow.endpoint) / denominator;
    }
    case CocycleKind::derivative:
      return flow_integrate(spec.generator(), z, t, tol).derivative;
  }
  return 1.0;
}

double cocycle_identity_residual(const CocycleSpec& spec, double s, double t,
                                 std::span<const Complex> points, double tol) {
  double worst = 0.0;
  for (Complex z : points) {
    const Complex whole = cocycle_eval(spec, z, s + t, tol);
    const Complex mid = flow_integrate(spec.generator(), z, t, tol).endpoint;
    const Complex split = cocycle_eval(spec, mid, s, tol) * cocycle_eval(spec, z, t, tol);
    worst = std::max(worst, std::abs(whole - split));
  }
  return worst;
}

double derivative_vs_exponential_check(const AnalyticFunction& generator, Complex z, double t,
                                       double tol) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be nonnegative");
  if (t == 0.0) return 0.0;
  const Complex variational = flow_integrate(generator, z, t, tol).derivative;

  // composite Gauss-Legendre of G'(phi_s(z)) over [0, t], walking the
  // trajectory node to node
  constexpr int kPanels = 16;
  constexpr int kNodes = 12;
  const QuadratureRule rule = gauss_legendre(kNodes, 0.0, 1.0);
  Complex integral{};
  Complex position = z;
  double clock = 0.0;
  for (int panel = 0; panel < kPanels; ++panel) {
    const double a = t * panel / kPanels;
    const double width = t / kPanels;
    for (int i = 0; i < kNodes; ++i) {
      const double node = a + width * rule.nodes(i);
      position = flow_integrate(generator, position, node - clock, tol).endpoint;
      clock = node;
      integral += width * rule.weights(i) * generator.derivative(position);
    }
  }
  return std::abs(variational - std::exp(integral));
}

}  // namespace steklov
