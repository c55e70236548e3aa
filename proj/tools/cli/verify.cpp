#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "run.hpp"

namespace steklov::cli {

namespace {

using Check = std::function<double()>;

struct Battery {
  std::vector<CheckResult> results;

  void add(const std::string& name, double tolerance, const Check& check) {
    CheckResult r{name, std::numeric_limits<double>::infinity(), tolerance, false, {}};
    try {
      r.residual = check();
      r.pass = std::isfinite(r.residual) && r.residual <= tolerance;
    } catch (const std::exception& e) {
      r.message = e.what();
    }
    results.push_back(std::move(r));
  }
};

struct Fixtures {
  explicit Fixtures(const RunConfig& config)
      : grid(config.grid_size), tol(config.tol), band(std::min<Index>(16, config.grid_size / 4)) {}

  Complex random_complex() {
    std::normal_distribution<double> normal;
    return {normal(engine), normal(engine)};
  }

  std::vector<Complex> disk_points(int count, double r_max) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> points;
    for (int i = 0; i < count; ++i) {
      const double r = r_max * std::sqrt(unit(engine));
      points.push_back(std::polar(r, 2.0 * kPi * unit(engine)));
    }
    return points;
  }

  BoundarySignal band_limited(Index modes, bool negative) {
    ComplexVector c = ComplexVector::Zero(grid.size());
    for (Index n = negative ? -modes : 0; n <= modes; ++n) {
      c(n + grid.size() / 2) = random_complex() / (1.0 + 0.01 * static_cast<double>(n * n));
    }
    return BoundarySignal::from_coefficients(grid, std::move(c));
  }

  BoundaryGrid grid;
  double tol;
  Index band;
  std::mt19937_64 engine{20261015};
};

double coeff_error(const BoundarySignal& a, const BoundarySignal& b) {
  return (a.coefficients() - b.coefficients()).cwiseAbs().maxCoeff();
}

AnalyticFunction one() { return AnalyticFunction::constant(1.0); }
AnalyticFunction z() { return AnalyticFunction::identity(); }
AnalyticFunction dilation() { return bp_generator(one(), 0.0); }
AnalyticFunction parabolic() { return bp_generator(one(), 1.0); }
AnalyticFunction rotation() { return Complex{0.0, 1.0} * z(); }
AnalyticFunction interior_bp() { return bp_generator(one() + 0.5 * z(), Complex{0.3, 0.2}); }

std::vector<AnalyticFunction> disk_zoo() {
  return {dilation(), rotation(), parabolic(), bp_generator(one() + z(), 0.0), interior_bp()};
}

}  // namespace

std::vector<CheckResult> run_verify_battery(const RunConfig& config) {
  Fixtures fx(config);
  Battery battery;
  const BoundaryGrid& grid = fx.grid;
  const double tol = fx.tol;
  const ConformalMap poly = make_polynomial_map({0.3}, grid);
  const StarLikeDomain bump =
      StarLikeDomain::from_function([](double phi) { return 1.0 + 0.2 * std::cos(phi); });

  battery.add("fourier_round_trip", 1e-12, [&] {
    const BoundarySignal h = fx.band_limited(grid.size() / 2 - 1, true);
    const ComplexVector back = fourier_synthesize(fourier_analyze(h.samples(), grid), grid);
    return (back - h.samples()).norm() / h.samples().norm();
  });
  battery.add("poisson_mean_value", 1e-13, [&] {
    const BoundarySignal h = fx.band_limited(fx.band, true);
    return std::abs(poisson_extend(h, 0.0, 1.0) - h.coefficient(0));
  });
  battery.add("lax_vs_multiplier", 1e-9, [&] {
    const BoundarySignal h = fx.band_limited(grid.size() / 4, true);
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      worst = std::max(worst, coeff_error(lax_evolve(h, t), dtn_multiplier_evolve(h, t)));
    }
    return worst;
  });
  battery.add("robin_dtn_oracle", 1e-7, [&] {
    const BoundarySignal h = fx.band_limited(fx.band / 2, true);
    const auto problem = RobinProblem::on_disk(dilation(), std::nullopt, h);
    double worst = 0.0;
    for (double t : {0.5, 1.0}) {
      worst = std::max(worst, coeff_error(robin_evolve(problem, t, tol), dtn_multiplier_evolve(h, t)));
    }
    return worst;
  });
  battery.add("robin_shift_law", 1e-7, [&] {
    const Index n = std::min<Index>(3, fx.band);
    const auto problem =
        RobinProblem::on_disk(dilation(), AnalyticFunction::constant(0.5), BoundarySignal::mode(grid, n));
    const double expected = std::exp((0.5 - static_cast<double>(n)) * 0.5);
    return coeff_error(robin_evolve(problem, 0.5, tol), BoundarySignal::mode(grid, n, expected));
  });
  battery.add("robin_initial_value", 1e-10, [&] {
    const BoundarySignal h = fx.band_limited(fx.band, false);
    return coeff_error(robin_evolve(RobinProblem::on_disk(parabolic(), z(), h), 0.0, tol), h);
  });
  battery.add("semigroup_law", 1e-7, [&] {
    const auto points = fx.disk_points(10, 0.9);
    double worst = 0.0;
    for (const auto& G : disk_zoo()) {
      for (double s : {0.1, 0.5, 1.0}) {
        for (double t : {0.1, 0.5, 1.0}) worst = std::max(worst, semigroup_residual(G, s, t, points, tol));
      }
    }
    return worst;
  });
  battery.add("disk_invariance", 1e-9, [&] {
    double worst = 0.0;
    for (const auto& G : disk_zoo()) {
      for (Index j = 0; j < grid.size(); j += std::max<Index>(1, grid.size() / 16)) {
        flow_integrate(G, grid.node(j), 2.0, tol, {}, [&](double, const FlowResult& r) {
          worst = std::max(worst, std::abs(r.endpoint) - 1.0);
        });
      }
    }
    return std::max(worst, 0.0);
  });
  battery.add("cocycle_identity", 1e-7, [&] {
    const auto points = fx.disk_points(8, 0.9);
    double worst = 0.0;
    for (const auto& G : disk_zoo()) {
      for (const auto& spec : {CocycleSpec::exponential(G, z()), CocycleSpec::exponential(G, one()),
                               CocycleSpec::coboundary(G, AnalyticFunction::exp_of(z())),
                               CocycleSpec::derivative(G)}) {
        worst = std::max(worst, cocycle_identity_residual(spec, 0.5, 0.3, points, tol));
      }
    }
    return worst;
  });
  battery.add("derivative_vs_exponential", 1e-8, [&] {
    double worst = 0.0;
    for (const auto& G : disk_zoo()) {
      for (Complex p : fx.disk_points(3, 0.9)) {
        worst = std::max(worst, derivative_vs_exponential_check(G, p, 1.0, tol));
      }
    }
    return worst;
  });
  battery.add("coboundary_vs_exponential", 1e-8, [&] {
    double worst = 0.0;
    const AnalyticFunction h = AnalyticFunction::monomial(2, Complex{0.3, 0.4});
    const AnalyticFunction h_prime = AnalyticFunction::monomial(1, Complex{0.6, 0.8});
    for (const auto& G : disk_zoo()) {
      const CocycleSpec cob = CocycleSpec::coboundary(G, AnalyticFunction::exp_of(h));
      const CocycleSpec expo = CocycleSpec::exponential(G, G * h_prime);
      for (Complex p : fx.disk_points(3, 0.9)) {
        worst = std::max(worst, std::abs(cocycle_eval(cob, p, 1.0, tol) - cocycle_eval(expo, p, 1.0, tol)));
      }
    }
    return worst;
  });
  battery.add("angle_condition_disk", 1e-3, [&] {
    double worst = -1.0;
    for (const auto& G : disk_zoo()) worst = std::max(worst, angle_condition_check(G, grid, 0.999));
    return worst;
  });
  battery.add("angle_condition_domain", 1e-3, [&] {
    return std::max(boundary_angle_check_domain(transplant_generator(dilation(), poly), poly, grid),
                    boundary_angle_check_domain(transplant_generator(parabolic(), poly), poly, grid));
  });
  battery.add("conformal_conjugacy", 1e-6, [&] {
    const AnalyticFunction G = transplant_generator(interior_bp(), poly);
    double worst = 0.0;
    for (Complex w : fx.disk_points(10, 0.9)) {
      const Complex direct = flow_integrate(G, poly.inverse(w), 1.0, tol).endpoint;
      const Complex via_disk = poly.inverse(flow_integrate(interior_bp(), w, 1.0, tol).endpoint);
      worst = std::max(worst, std::abs(direct - via_disk));
    }
    return worst;
  });
  battery.add("theodorsen_round_trip", 1e-6, [&] {
    return theodorsen_solve(bump, grid).round_trip_error();
  });
  battery.add("map_interior_consistency", 1e-8, [&] {
    const ConformalMap star = theodorsen_solve(bump, grid);
    double worst = 0.0;
    for (Complex w : fx.disk_points(20, 0.95)) {
      worst = std::max(worst, std::abs(star.forward(star.inverse(w)) - w));
      worst = std::max(worst, std::abs(poly.forward(poly.inverse(w)) - w));
    }
    return worst;
  });
  battery.add("unit_normal_modulus", 1e-9, [&] {
    double worst = 0.0;
    for (Index j = 0; j < grid.size(); ++j) {
      worst = std::max(worst, std::abs(std::abs(unit_normal_at_node(poly, j)) - 1.0));
    }
    return worst;
  });
  battery.add("conjugate_involution", 1e-10, [&] {
    Eigen::VectorXd signal = fx.band_limited(fx.band, true).samples().real();
    signal.array() -= signal.mean();
    return (conjugate_function(conjugate_function(signal)) + signal).cwiseAbs().maxCoeff();
  });
  battery.add("hardy_monotone", 1e-9, [&] {
    const AnalyticFunction f([](Complex w) { return 1.0 / (1.2 - w); },
                             [](Complex w) { return 1.0 / ((1.2 - w) * (1.2 - w)); });
    double worst = 0.0;
    double previous = 0.0;
    for (double r = 0.1; r < 1.0; r += 0.1) {
      const double value = hardy_norm_mp(f, r, 2.0);
      worst = std::max(worst, previous - value);
      previous = value;
    }
    return worst;
  });
  battery.add("trace_of_poisson", 1e-8, [&] {
    const BoundarySignal h = fx.band_limited(fx.band, true);
    const AnalyticFunction u([h](Complex w) { return poisson_extend(h, std::abs(w), std::arg(w)); },
                             [](Complex) { return Complex{}; });
    return coeff_error(trace(u, identity_map(grid), grid), h);
  });
  battery.add("pairing_limit", 1e-6, [&] {
    const auto pairing = make_distribution_pairing(PowerSeries::geometric(511), 1.0);
    double worst = 0.0;
    for (Index k = 0; k <= std::min<Index>(8, grid.size() / 4); ++k) {
      const PairingResult r = distributional_pairing(pairing, BoundarySignal::mode(grid, -k));
      worst = std::max(worst, r.converged ? std::abs(r.value - 1.0) : 1.0);
    }
    return worst;
  });
  battery.add("pairing_by_parts", 1e-8, [&] {
    const auto pairing = make_distribution_pairing(PowerSeries::geometric(511), 1.0);
    const PairingResult r = distributional_pairing(pairing, fx.band_limited(grid.size() / 4, true));
    double worst = 0.0;
    for (std::size_t i = 0; i < r.radii.size(); ++i) worst = std::max(worst, std::abs(r.direct[i] - r.by_parts[i]));
    return worst;
  });
  battery.add("antiderivative_bound", 0.0, [&] {
    double worst = 0.0;
    for (const auto& f : {PowerSeries::monomial(0), PowerSeries::geometric(200)}) {
      for (double p : {1.0, 2.0}) {
        const AntiderivativeBound b = antiderivative_bound_check(f, p, 0.5, 0.9, 48, 256);
        worst = std::max(worst, b.lhs - b.rhs);
      }
    }
    return std::max(worst, 0.0);
  });
  battery.add("littlewood_bound", 1e-3, [&] {
    const auto problem = RobinProblem::on_disk(parabolic(), std::nullopt, BoundarySignal::mode(grid, 0));
    const LittlewoodCheck c = littlewood_bound_check(PowerSeries::monomial(1), problem, 1.0, 2.0);
    return std::max(c.norm / c.bound - 1.0, 0.0);
  });
  battery.add("generator_consistency", 0.3, [&] {
    const std::array<double, 3> times{1e-2, 1e-3, 1e-4};
    const auto problem = RobinProblem::on_disk(parabolic(), z(), BoundarySignal::mode(grid, 1));
    return std::abs(generator_consistency_order(problem, times).slope - 1.0);
  });
  battery.add("dtn_domain_relation", 1e-5, [&] {
    return dtn_domain_relation_residual(poly, BoundarySignal::mode(grid, 1));
  });
  battery.add("dtn_positivity", 1e-12, [&] {
    const BoundarySignal h = BoundarySignal::from_samples(
        grid, fx.band_limited(fx.band, true).samples().real().cast<Complex>());
    const BoundarySignal gamma = robin_generator_apply(RobinProblem::on_disk(dilation(), std::nullopt, h));
    const double pairing = -(h.coefficients().conjugate().cwiseProduct(gamma.coefficients())).sum().real();
    return std::max(-pairing, 0.0);
  });
  battery.add("denjoy_wolff_interior", 1e-6, [&] {
    const auto estimate = estimate_denjoy_wolff(interior_bp());
    return estimate ? std::abs(*estimate - Complex{0.3, 0.2}) : std::numeric_limits<double>::infinity();
  });
  return battery.results;
}

}  // namespace steklov::cli
