#include "steklov/poincare_steklov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "steklov/cocycle.hpp"
#include "steklov/parallel.hpp"

namespace steklov {

namespace {

constexpr double kAngleTolerance = 1e-3;
constexpr double kAngleProbe = 0.999;

/// Disk-side extension u(w) = U+(w) + U-(conj w) of boundary data, U+ from the
/// modes n >= 0 and U- from n < 0.
class DiskExtension {
 public:
  explicit DiskExtension(const BoundarySignal& h) {
    const BoundaryGrid& grid = h.grid();
    const Index half = grid.size() / 2;
    plus_ = PowerSeries(h.coefficients().tail(half));
    ComplexVector minus = ComplexVector::Zero(half + 1);
    for (Index n = 1; n <= half; ++n) minus(n) = h.coefficient(-n);
    minus_ = PowerSeries(std::move(minus));
  }

  Complex value(Complex w) const { return plus_(w) + minus_(std::conj(w)); }
  Complex holomorphic_derivative(Complex w) const { return plus_.derivative_at(w); }
  Complex antiholomorphic_derivative(Complex w) const { return minus_.derivative_at(std::conj(w)); }

 private:
  PowerSeries plus_;
  PowerSeries minus_;
};

AnalyticFunction pull_back_weight(const AnalyticFunction& g, const ConformalMap& map) {
  return AnalyticFunction([g, map](Complex w) { return g(map.inverse(w)); },
                          [g, map](Complex w) {
                            return g.derivative(map.inverse(w)) * map.inverse_derivative(w);
                          });
}

void require_supported(const RobinProblem& problem) {
  if (!problem.analytic() && problem.weight()) {
    throw Error(ErrorKind::unsupported_data,
                "weighted evolution needs analytic data (negative modes below 1e-10)");
  }
}

}  // namespace

bool is_analytic_signal(const BoundarySignal& h) {
  const double scale = std::max(1.0, h.coefficients().cwiseAbs().maxCoeff());
  for (Index n = 1; n <= h.size() / 2; ++n) {
    if (std::abs(h.coefficient(-n)) > 1e-10 * scale) return false;
  }
  return true;
}

RobinProblem::RobinProblem(std::optional<ConformalMap> map, AnalyticFunction generator,
                           std::optional<AnalyticFunction> weight, BoundarySignal initial)
    : map_(std::move(map)),
      generator_(std::move(generator)),
      weight_(std::move(weight)),
      initial_(std::move(initial)),
      disk_generator_(generator_) {
  const BoundaryGrid& grid = initial_.grid();
  if (map_) {
    generator_ = generator_.with_domain(map_->domain());
    if (weight_) weight_ = weight_->with_domain(map_->domain());
    disk_generator_ = pull_back_generator(generator_, *map_);
    if (weight_) disk_weight_ = pull_back_weight(*weight_, *map_);
    angle_condition_ = boundary_angle_check_domain(generator_, *map_, grid, kAngleProbe);
  } else {
    disk_weight_ = weight_;
    angle_condition_ = angle_condition_check(generator_, grid, kAngleProbe);
  }
  if (!(angle_condition_ <= kAngleTolerance)) {
    throw Error(ErrorKind::invalid_generator,
                "boundary angle condition fails: max Re(G conj(nu)) = " +
                    std::to_string(angle_condition_));
  }
  if (weight_) sup_re_weight_ = sampled_sup_real_part(*weight_);
  analytic_ = is_analytic_signal(initial_);
}

RobinProblem RobinProblem::on_disk(AnalyticFunction generator,
                                   std::optional<AnalyticFunction> weight, BoundarySignal initial) {
  return RobinProblem(std::nullopt, std::move(generator), std::move(weight), std::move(initial));
}

RobinProblem RobinProblem::on_domain(ConformalMap map, AnalyticFunction generator,
                                     std::optional<AnalyticFunction> weight,
                                     BoundarySignal initial) {
  if (!(map.table().grid == initial.grid())) {
    throw Error(ErrorKind::size, "initial data and boundary table use different grids");
  }
  return RobinProblem(std::move(map), std::move(generator), std::move(weight), std::move(initial));
}

RobinProblem RobinProblem::with_initial(BoundarySignal initial) const {
  RobinProblem copy = *this;
  if (!(initial.grid() == copy.initial_.grid())) {
    throw Error(ErrorKind::size, "replacement data must use the same grid");
  }
  copy.initial_ = std::move(initial);
  copy.analytic_ = is_analytic_signal(copy.initial_);
  return copy;
}

BoundarySignal dtn_multiplier_evolve(const BoundarySignal& h, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be nonnegative");
  ComplexVector coeffs = h.coefficients();
  const Index n = h.size();
  for (Index k = 0; k < n; ++k) {
    coeffs(k) *= std::exp(-static_cast<double>(std::abs(k - n / 2)) * t);
  }
  return BoundarySignal::from_coefficients(h.grid(), std::move(coeffs));
}

BoundarySignal lax_evolve(const BoundarySignal& h, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be nonnegative");
  if (t == 0.0) return h;
  const double r = std::exp(-t);
  ComplexVector samples(h.size());
  for (Index j = 0; j < h.size(); ++j) samples(j) = poisson_extend(h, r, h.grid().angle(j));
  return BoundarySignal::from_samples(h.grid(), std::move(samples));
}

BoundarySignal robin_evolve(const RobinProblem& problem, double t, double tol) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be nonnegative");
  require_supported(problem);
  if (t == 0.0) return problem.initial();

  const BoundaryGrid& grid = problem.initial().grid();
  const DiskExtension u(problem.initial());
  FlowOptions options;
  options.weight = problem.disk_weight();
  ComplexVector samples(grid.size());
  parallel_for(grid.size(), [&](Index j) {
    FlowResult flow;
    try {
      flow = flow_integrate(problem.disk_generator(), grid.node(j), t, tol, options);
    } catch (const IntegrationError& e) {
      throw IntegrationError(e.kind(), "boundary node " + std::to_string(j) + ": " + e.what(),
                             e.partial());
    }
    samples(j) = std::exp(flow.weight_integral) * u.value(flow.endpoint);
  });
  return BoundarySignal::from_samples(grid, std::move(samples));
}

BoundarySignal robin_generator_apply(const RobinProblem& problem) {
  require_supported(problem);
  const BoundarySignal& h = problem.initial();
  const double scale = std::max(1.0, h.coefficients().cwiseAbs().maxCoeff());
  const Index quarter = h.size() / 4;
  for (Index n = quarter; n <= h.size() / 2; ++n) {
    if (std::abs(h.coefficient(n)) > 1e-8 * scale || std::abs(h.coefficient(-n)) > 1e-8 * scale) {
      throw Error(ErrorKind::unsupported_data,
                  "data needs the top quarter of its spectrum below 1e-8 to be differentiated");
    }
  }
  const DiskExtension u(h);
  const BoundaryGrid& grid = h.grid();
  const AnalyticFunction& G = problem.disk_generator();
  ComplexVector samples(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex w = grid.node(j);
    const Complex flow = G(w);
    Complex value = flow * u.holomorphic_derivative(w) + std::conj(flow) * u.antiholomorphic_derivative(w);
    if (problem.disk_weight()) value += (*problem.disk_weight())(w) * u.value(w);
    samples(j) = value;
  }
  return BoundarySignal::from_samples(grid, std::move(samples));
}

double dtn_domain_relation_residual(const ConformalMap& map, const BoundarySignal& h) {
  const BoundaryGrid& grid = h.grid();
  const Index n = grid.size();

  // -d_nu u = -|k'| * (disk DtN multiplier |n|) applied to h
  ComplexVector multiplied = h.coefficients();
  for (Index k = 0; k < n; ++k) multiplied(k) *= static_cast<double>(std::abs(k - n / 2));
  const ComplexVector disk_normal = fourier_synthesize(multiplied, grid);

  const DiskExtension u(h);
  auto field = [&](Complex x) { return u.value(map.forward(x)); };
  constexpr double kStep = 1e-4;

  double worst = 0.0;
  for (Index j = 0; j < n; ++j) {
    const Complex w = grid.node(j);
    const Complex d = map.inverse_derivative(w);
    if (std::abs(d) < 1e-10) throw Error(ErrorKind::degenerate_map, "vanishing map derivative");
    const double k_prime_abs = 1.0 / std::abs(d);
    const Complex lhs = -k_prime_abs * disk_normal(j);

    // G = -k/k' points inward; one-sided second-order difference along it
    const Complex x = map.inverse(w);
    const Complex G = -w * d;
    const Complex directional =
        (-3.0 * u.value(w) + 4.0 * field(x + kStep * G) - field(x + 2.0 * kStep * G)) / (2.0 * kStep);
    const Complex rhs = directional * k_prime_abs;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ConsistencyFit generator_consistency_order(const RobinProblem& problem,
                                           std::span<const double> times, double tol) {
  if (times.size() < 3) throw Error(ErrorKind::domain, "need at least three times");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0 && times[i] <= 0.1) || (i > 0 && !(times[i] < times[i - 1]))) {
      throw Error(ErrorKind::domain, "times must decrease inside (0, 0.1]");
    }
  }
  const BoundarySignal gamma = robin_generator_apply(problem);
  const ComplexVector& u0 = problem.initial().samples();

  ConsistencyFit fit{std::numeric_limits<double>::quiet_NaN(), {}};
  for (double t : times) {
    const BoundarySignal evolved = robin_evolve(problem, t, tol);
    const ComplexVector quotient = (evolved.samples() - u0) / t - gamma.samples();
    fit.residuals.push_back(quotient.cwiseAbs().maxCoeff());
  }
  if (*std::max_element(fit.residuals.begin(), fit.residuals.end()) <= 1e-10) return fit;

  const Index m = static_cast<Index>(times.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd rhs(m);
  for (Index i = 0; i < m; ++i) {
    design(i, 0) = std::log(times[static_cast<std::size_t>(i)]);
    design(i, 1) = 1.0;
    rhs(i) = std::log(std::max(fit.residuals[static_cast<std::size_t>(i)], 1e-300));
  }
  fit.slope = design.colPivHouseholderQr().solve(rhs)(0);
  return fit;
}

AnalyticFunction weighted_composition(const AnalyticFunction& f, const AnalyticFunction& generator,
                                      std::optional<AnalyticFunction> weight, double t,
                                      double tol) {
  FlowOptions options;
  options.weight = std::move(weight);
  return AnalyticFunction(
      [=](Complex z) {
        const FlowResult flow = flow_integrate(generator, z, t, tol, options);
        return std::exp(flow.weight_integral) * f(flow.endpoint);
      },
      [=](Complex z) {
        const FlowResult flow = flow_integrate(generator, z, t, tol, options);
        return std::exp(flow.weight_integral) *
               (flow.weight_gradient * f(flow.endpoint) + f.derivative(flow.endpoint) * flow.derivative);
      },
      generator.domain());
}

LittlewoodCheck littlewood_bound_check(const PowerSeries& f, const RobinProblem& problem, double t,
                                       double p, int radial_points, int angular_points,
                                       double tol) {
  if (problem.map()) {
    throw Error(ErrorKind::unsupported_data, "Littlewood check is implemented on the disk");
  }
  if (!(p >= 1.0)) throw Error(ErrorKind::domain, "p must be >= 1");
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "time must be nonnegative");
  const AnalyticFunction series = AnalyticFunction::from_series(f);
  const AnalyticFunction composed =
      weighted_composition(series, problem.generator(), problem.weight(), t, tol);

  const double norm = bergman_norm(composed, p, radial_points, angular_points);

  double sup_m = 0.0;
  FlowOptions options;
  options.weight = problem.weight();
  for (Complex z : interior_sample_points(Domain::unit_disk())) {
    const FlowResult flow = flow_integrate(problem.generator(), z, t, tol, options);
    sup_m = std::max(sup_m, std::exp(flow.weight_integral.real()));
  }
  const double origin = std::abs(flow_integrate(problem.generator(), 0.0, t, tol).endpoint);
  const double ratio = (1.0 + origin) / (1.0 - origin);
  const double bound = std::pow(sup_m, 1.0 / p) * ratio *
                       bergman_norm(series, p, radial_points, angular_points);
  return LittlewoodCheck{norm, bound};
}

}  // namespace steklov
