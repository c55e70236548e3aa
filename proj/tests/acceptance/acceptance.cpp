// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "steklov/steklov.hpp"

using namespace steklov;

namespace {

constexpr double kTol = 1e-10;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

std::mt19937_64& rng() {
  static std::mt19937_64 engine(7919);
  return engine;
}

Complex random_complex() {
  std::normal_distribution<double> normal;
  return {normal(rng()), normal(rng())};
}

std::vector<Complex> disk_points(int count, double r_max) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<Complex> points;
  for (int i = 0; i < count; ++i) points.push_back(std::polar(std::sqrt(radius(rng())) * r_max, angle(rng())));
  return points;
}

BoundarySignal band_limited(const BoundaryGrid& grid, Index band, bool negative) {
  ComplexVector c = ComplexVector::Zero(grid.size());
  for (Index n = negative ? -band : 0; n <= band; ++n) {
    c(n + grid.size() / 2) = random_complex() / (1.0 + 0.01 * static_cast<double>(n * n));
  }
  return BoundarySignal::from_coefficients(grid, std::move(c));
}

double coeff_error(const BoundarySignal& a, const BoundarySignal& b) {
  return (a.coefficients() - b.coefficients()).cwiseAbs().maxCoeff();
}

AnalyticFunction one() { return AnalyticFunction::constant(1.0); }
AnalyticFunction z() { return AnalyticFunction::identity(); }
AnalyticFunction dilation() { return bp_generator(one(), 0.0); }
AnalyticFunction parabolic() { return bp_generator(one(), 1.0); }
AnalyticFunction rotation() { return Complex{0.0, 1.0} * z(); }
AnalyticFunction interior_bp() { return bp_generator(one() + 0.5 * z(), Complex{0.3, 0.2}); }

struct ZooEntry {
  std::string name;
  AnalyticFunction G;
  std::optional<ConformalMap> map;
};

std::vector<ZooEntry> generator_zoo(const BoundaryGrid& grid) {
  const ConformalMap poly = make_polynomial_map({0.3}, grid);
  return {{"-z", dilation(), std::nullopt},
          {"iz", rotation(), std::nullopt},
          {"(z-1)^2", parabolic(), std::nullopt},
          {"-z(1+z)", bp_generator(one() + z(), 0.0), std::nullopt},
          {"transplanted -z", transplant_generator(dilation(), poly), poly}};
}

std::vector<Complex> zoo_points(const ZooEntry& entry, int count) {
  std::vector<Complex> points = disk_points(count, 0.9);
  if (entry.map) {
    for (auto& p : points) p = entry.map->inverse(p);
  }
  return points;
}

Outcome disk_dtn_oracle() {
  const auto start = std::chrono::steady_clock::now();
  const BoundaryGrid grid(256);
  double worst = 0.0;
  for (Index n = -32; n <= 32; ++n) {
    const BoundarySignal h = BoundarySignal::mode(grid, n);
    const auto problem = RobinProblem::on_disk(dilation(), std::nullopt, h);
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      worst = std::max(worst, coeff_error(robin_evolve(problem, t), dtn_multiplier_evolve(h, t)));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-7 && seconds <= 10.0,
          fmt("max coefficient error %.3e (tol 1e-7), runtime %.2f s (limit 10 s)", worst, seconds)};
}

Outcome lax_formula() {
  const BoundaryGrid grid(256);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const BoundarySignal h = band_limited(grid, 64, true);
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      worst = std::max(worst, coeff_error(lax_evolve(h, t), dtn_multiplier_evolve(h, t)));
    }
  }
  return {worst <= 1e-9, fmt("max coefficient error %.3e over 20 signals (tol 1e-9)", worst)};
}

Outcome robin_shift_law() {
  const BoundaryGrid grid(256);
  double worst = 0.0;
  for (double c : {-1.0, 0.5, 1.0}) {
    for (Index n = 0; n <= 16; ++n) {
      const auto problem =
          RobinProblem::on_disk(dilation(), AnalyticFunction::constant(c), BoundarySignal::mode(grid, n));
      for (double t : {0.1, 0.5, 1.0}) {
        const BoundarySignal expected =
            BoundarySignal::mode(grid, n, std::exp((c - static_cast<double>(n)) * t));
        worst = std::max(worst, coeff_error(robin_evolve(problem, t), expected));
      }
    }
  }
  return {worst <= 1e-7, fmt("max coefficient error %.3e (tol 1e-7)", worst)};
}

Outcome semiflow_law() {
  const BoundaryGrid grid(256);
  double worst = 0.0;
  for (const auto& entry : generator_zoo(grid)) {
    const auto points = zoo_points(entry, 20);
    for (double s : {0.1, 0.5, 1.0}) {
      for (double t : {0.1, 0.5, 1.0}) {
        worst = std::max(worst, semigroup_residual(entry.G, s, t, points, kTol));
      }
    }
  }
  return {worst <= 1e-7, fmt("max semigroup residual %.3e over 5 generators (tol 1e-7)", worst)};
}

Outcome cocycle_law() {
  const BoundaryGrid grid(256);
  double worst = 0.0;
  for (const auto& entry : generator_zoo(grid)) {
    const auto points = zoo_points(entry, 20);
    const std::vector<CocycleSpec> specs{
        CocycleSpec::exponential(entry.G, AnalyticFunction::constant({-0.5, 0.3})),
        CocycleSpec::exponential(entry.G, z()),
        CocycleSpec::coboundary(entry.G, AnalyticFunction::exp_of(z())),
        CocycleSpec::derivative(entry.G)};
    for (const auto& spec : specs) {
      for (double s : {0.1, 0.5, 1.0}) {
        for (double t : {0.1, 0.5, 1.0}) {
          worst = std::max(worst, cocycle_identity_residual(spec, s, t, points, kTol));
        }
      }
    }
  }
  return {worst <= 1e-7, fmt("max cocycle residual %.3e over 4 kinds x 5 generators (tol 1e-7)", worst)};
}

Outcome angle_conditions() {
  const BoundaryGrid grid(256);
  const std::vector<std::pair<AnalyticFunction, Complex>> bp_data{
      {one(), 0.0},
      {one(), 1.0},
      {one() + z(), 0.0},
      {one() + 0.5 * z(), Complex{0.3, 0.2}},
      {AnalyticFunction::constant(2.0) - z(), std::polar(1.0, kPi / 3)},
      {AnalyticFunction::constant(Complex{1.0, 3.0}), Complex{-0.6, 0.0}},
      {AnalyticFunction::exp_of(0.2 * z()), Complex{0.0, -0.9}},
  };
  double disk = -1e300;
  for (const auto& [F, b] : bp_data) {
    disk = std::max(disk, angle_condition_check(bp_generator(F, b), grid, 0.999));
  }
  const ConformalMap poly = make_polynomial_map({0.3}, grid);
  const std::vector<AnalyticFunction> domain_generators{
      transplant_generator(dilation(), poly),
      transplant_generator(parabolic(), poly),
      conformal_bp_generator(one(), poly.inverse({0.2, -0.1}), poly),
      conformal_bp_generator(one() + 0.5 * z(), poly.inverse(std::polar(1.0, 2.0)), poly)};
  double domain = -1e300;
  for (const auto& G : domain_generators) {
    domain = std::max(domain, boundary_angle_check_domain(G, poly, grid, 0.999));
  }
  return {disk <= 1e-3 && domain <= 1e-3,
          fmt("max disk angle value %.3e, max domain angle value %.3e (tol 1e-3)", disk, domain)};
}

double conjugacy_residual(const ConformalMap& map, const AnalyticFunction& disk_generator) {
  const AnalyticFunction G = transplant_generator(disk_generator, map);
  double worst = 0.0;
  for (Complex w : disk_points(20, 0.9)) {
    const Complex x = map.inverse(w);
    const Complex in_domain = flow_integrate(G, x, 1.0, kTol).endpoint;
    const Complex via_disk = map.inverse(flow_integrate(disk_generator, w, 1.0, kTol).endpoint);
    worst = std::max(worst, std::abs(in_domain - via_disk));
  }
  return worst;
}

Outcome conformal_conjugacy() {
  const BoundaryGrid grid(256);
  const ConformalMap poly = make_polynomial_map({0.3}, grid);
  const ConformalMap star = theodorsen_solve(
      StarLikeDomain::from_function([](double phi) { return 1.0 + 0.2 * std::cos(phi); }), grid);
  double a = 0.0;
  double b = 0.0;
  for (const auto& G : {dilation(), parabolic(), interior_bp()}) {
    a = std::max(a, conjugacy_residual(poly, G));
    b = std::max(b, conjugacy_residual(star, G));
  }
  return {a <= 1e-6 && b <= 1e-6,
          fmt("polynomial domain %.3e, star-like domain %.3e (tol 1e-6)", a, b)};
}

Outcome littlewood_bound() {
  const BoundaryGrid grid(64);
  const BoundarySignal u0 = BoundarySignal::mode(grid, 0);
  struct Combo {
    PowerSeries f;
    AnalyticFunction G;
    std::optional<AnalyticFunction> g;
    double t, p;
  };
  ComplexVector shifted(4);
  shifted << 0.3, 0.0, 1.0, 0.0;
  const PowerSeries geometric_half(
      (ComplexVector(12) << 1, 0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125, 0.00390625,
       0.001953125, 0.0009765625, 0.00048828125)
          .finished());
  const std::vector<Combo> combos{
      {PowerSeries::monomial(0), dilation(), std::nullopt, 0.5, 2.0},
      {PowerSeries::monomial(1), parabolic(), std::nullopt, 1.0, 2.0},
      {PowerSeries(shifted), parabolic(), std::nullopt, 0.5, 3.0},
      {geometric_half, interior_bp(), std::nullopt, 1.0, 2.0},
      {PowerSeries::monomial(1), interior_bp(), AnalyticFunction::constant(-0.5), 0.5, 4.0},
      {PowerSeries(shifted), rotation(), AnalyticFunction::constant(-1.0), 1.0, 2.0},
      {geometric_half, parabolic(), z() - one(), 0.5, 3.0},
      {PowerSeries::monomial(2), bp_generator(one() + z(), 0.0), std::nullopt, 1.0, 4.0},
      {PowerSeries::monomial(0), interior_bp(), z() - one(), 1.0, 2.0},
      {PowerSeries(shifted), bp_generator(one(), std::polar(1.0, 1.0)), std::nullopt, 0.7, 2.0},
  };
  double worst_ratio = 0.0;
  for (const auto& c : combos) {
    const auto problem = RobinProblem::on_disk(c.G, c.g, u0);
    const LittlewoodCheck check = littlewood_bound_check(c.f, problem, c.t, c.p);
    worst_ratio = std::max(worst_ratio, check.norm / check.bound);
  }
  return {worst_ratio <= 1.0 + 1e-3,
          fmt("max norm/bound %.6f over 10 combinations (limit 1.001)", worst_ratio)};
}

Outcome distributional_boundary_values() {
  const BoundaryGrid grid(64);
  const auto pairing = make_distribution_pairing(PowerSeries::geometric(2047), 1.0);
  double value_error = 0.0;
  double form_gap = 0.0;
  bool converged = true;
  for (Index k = 0; k <= 8; ++k) {
    const PairingResult r = distributional_pairing(pairing, BoundarySignal::mode(grid, -k));
    converged = converged && r.converged;
    value_error = std::max(value_error, std::abs(r.value - 1.0));
    for (std::size_t i = 0; i < r.radii.size(); ++i) {
      form_gap = std::max(form_gap, std::abs(r.direct[i] - r.by_parts[i]));
    }
  }
  return {converged && value_error <= 1e-6 && form_gap <= 1e-8,
          fmt("max |pairing - a_k| %.3e (tol 1e-6), max direct/by-parts gap %.3e (tol 1e-8)",
              value_error, form_gap)};
}

Outcome antiderivative_bound() {
  ComplexVector random(8);
  for (Index n = 0; n < 8; ++n) random(n) = random_complex();
  const std::vector<PowerSeries> fs{PowerSeries::monomial(0), PowerSeries::monomial(3, 2.0),
                                    PowerSeries::geometric(300), PowerSeries(random)};
  const std::vector<std::array<double, 3>> settings{
      {1.0, 0.5, 0.9}, {2.0, 0.5, 0.9}, {3.0, 0.1, 0.5}, {2.0, 0.9, 0.99}, {1.5, 0.3, 0.7}};
  int satisfied = 0;
  int total = 0;
  double worst = 0.0;
  for (const auto& f : fs) {
    for (const auto& [p, eps, r] : settings) {
      const AntiderivativeBound b = antiderivative_bound_check(f, p, eps, r);
      ++total;
      if (b.lhs <= b.rhs) ++satisfied;
      worst = std::max(worst, b.lhs / b.rhs);
    }
  }
  return {satisfied == total && total == 20,
          fmt("%.0f of %.0f tuples satisfy lhs <= rhs, max lhs/rhs %.4f", satisfied, total, worst)};
}

Outcome generator_consistency() {
  const BoundaryGrid grid(64);
  const std::array<double, 3> times{1e-2, 1e-3, 1e-4};
  ComplexVector mixed = ComplexVector::Zero(64);
  mixed(32 + 1) = 1.0;
  mixed(32 + 3) = 0.5;
  const std::vector<RobinProblem> problems{
      RobinProblem::on_disk(dilation(), std::nullopt, BoundarySignal::mode(grid, 2)),
      RobinProblem::on_disk(parabolic(), z(), BoundarySignal::mode(grid, 1)),
      RobinProblem::on_disk(interior_bp(), AnalyticFunction::constant(-0.5),
                            BoundarySignal::from_coefficients(grid, mixed))};
  double worst = 0.0;
  std::string slopes;
  for (const auto& problem : problems) {
    const double slope = generator_consistency_order(problem, times).slope;
    worst = std::isnan(slope) ? 1e300 : std::max(worst, std::abs(slope - 1.0));
    slopes += fmt(" %.4f", slope);
  }
  return {worst <= 0.3, "slopes" + slopes + " (target 1.0 +- 0.3)"};
}

Outcome theodorsen_round_trip() {
  const BoundaryGrid grid(256);
  const ConformalMap map = theodorsen_solve(
      StarLikeDomain::from_function([](double phi) { return 1.0 + 0.2 * std::cos(phi); }), grid,
      200);
  const double error = map.round_trip_error();
  const int iterations = map.diagnostics().iterations;
  return {error <= 1e-6 && iterations <= 200,
          fmt("round-trip error %.3e (tol 1e-6) after %.0f iterations (limit 200)", error,
              iterations)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"disk DtN oracle equivalence", disk_dtn_oracle},
      {"Lax formula", lax_formula},
      {"Robin shift law", robin_shift_law},
      {"semiflow law", semiflow_law},
      {"cocycle law", cocycle_law},
      {"angle conditions", angle_conditions},
      {"conformal conjugacy", conformal_conjugacy},
      {"Littlewood bound", littlewood_bound},
      {"distributional boundary values", distributional_boundary_values},
      {"antiderivative bound", antiderivative_bound},
      {"generator consistency", generator_consistency},
      {"Theodorsen round-trip", theodorsen_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s  %2zu %-32s %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
