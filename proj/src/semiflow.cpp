#include "steklov/semiflow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace steklov {

namespace {

using State = Eigen::Matrix<Complex, 4, 1>;

// Dormand-Prince 5(4) tableau
constexpr std::array<double, 7> kC{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr std::array<double, 7> kB{35.0 / 384,     0.0,           500.0 / 1113, 125.0 / 192,
                                   -2187.0 / 6784, 11.0 / 84,     0.0};
constexpr std::array<double, 7> kBStar{5179.0 / 57600,    0.0,          7571.0 / 16695,
                                       393.0 / 640,       -92097.0 / 339200, 187.0 / 2100,
                                       1.0 / 40};

constexpr double kOvershootClip = 1e-9;
constexpr double kOvershootFatal = 1e-6;

struct Rhs {
  const AnalyticFunction& generator;
  const std::optional<AnalyticFunction>& weight;

  State operator()(const State& y) const {
    State dy;
    const Complex z = y(0);
    dy(0) = generator(z);
    dy(1) = generator.derivative(z) * y(1);
    if (weight) {
      dy(2) = (*weight)(z);
      dy(3) = weight->derivative(z) * y(1);
    } else {
      dy(2) = 0.0;
      dy(3) = 0.0;
    }
    return dy;
  }
};

FlowResult to_result(const State& y, long steps, double est_error) {
  return FlowResult{y(0), y(1), y(2), y(3), steps, est_error};
}

bool all_finite(const State& y) {
  for (Index i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y(i).real()) || !std::isfinite(y(i).imag())) return false;
  }
  return true;
}

// 200 points: 8 radii x 25 angles
std::vector<Complex> positivity_probe_points() {
  constexpr std::array<double, 8> radii{0.0, 0.3, 0.6, 0.8, 0.9, 0.99, 0.999, 0.9999};
  std::vector<Complex> points;
  points.reserve(200);
  for (double r : radii) {
    for (int j = 0; j < 25; ++j) points.push_back(std::polar(r, 2.0 * kPi * (j + 0.5) / 25.0));
  }
  return points;
}

}  // namespace

FlowResult flow_integrate(const AnalyticFunction& generator, Complex z0, double t, double tol,
                          const FlowOptions& options, const FlowObserver& observer) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "flow time must be nonnegative");
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  const Domain& domain = generator.domain();
  const double start_gauge = domain.gauge(z0);
  if (!(start_gauge <= 1.0 + kOvershootFatal)) {
    throw Error(ErrorKind::domain, "starting point outside the closed domain");
  }
  if (domain.is_unit_disk && std::abs(z0) > 1.0) z0 /= std::abs(z0);

  State y;
  y << z0, 1.0, 0.0, 0.0;
  if (t == 0.0) return to_result(y, 0, 0.0);

  const Rhs rhs{generator, options.weight};
  double time = 0.0;
  double h = std::min(t, 1e-3);
  const double h_min = 1e-14 * std::max(1.0, t);
  long steps = 0;
  double est_error = 0.0;
  std::array<State, 7> k;

  while (time < t) {
    if (steps >= options.max_steps) {
      throw IntegrationError(ErrorKind::integration, "step budget exhausted",
                             to_result(y, steps, est_error));
    }
    const bool last = time + h >= t;
    if (last) h = t - time;

    State y_new = y;
    State err = State::Zero();
    bool finite = true;
    k[0] = rhs(y);
    for (int s = 1; s < 7 && finite; ++s) {
      State stage = y;
      for (int j = 0; j < s; ++j) stage += h * kA[s][j] * k[static_cast<std::size_t>(j)];
      k[static_cast<std::size_t>(s)] = rhs(stage);
      finite = all_finite(k[static_cast<std::size_t>(s)]);
    }
    double err_norm = std::numeric_limits<double>::infinity();
    if (finite && all_finite(k[0])) {
      for (std::size_t s = 0; s < 7; ++s) {
        y_new += h * kB[s] * k[s];
        err += h * (kB[s] - kBStar[s]) * k[s];
      }
      err_norm = 0.0;
      for (Index i = 0; i < 4; ++i) {
        const double scale = tol * (1.0 + std::max(std::abs(y(i)), std::abs(y_new(i))));
        err_norm = std::max(err_norm, std::abs(err(i)) / scale);
      }
      if (!std::isfinite(err_norm)) err_norm = std::numeric_limits<double>::infinity();
    }

    bool accept = err_norm <= 1.0;
    if (accept) {
      const double gauge = domain.gauge(y_new(0));
      if (!(gauge <= 1.0 + kOvershootFatal)) {
        throw IntegrationError(ErrorKind::invariance_violation,
                               "flow left the closed domain (gauge " + std::to_string(gauge) + ")",
                               to_result(y, steps, est_error));
      }
      if (gauge > 1.0 + kOvershootClip) {
        accept = false;
        err_norm = 32.0;  // forces a halving below
      } else if (domain.is_unit_disk && std::abs(y_new(0)) > 1.0) {
        y_new(0) /= std::abs(y_new(0));
      }
    }

    const double factor =
        err_norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
    if (accept) {
      time = last ? t : time + h;
      y = y_new;
      ++steps;
      est_error = std::max(est_error, err_norm * tol);
      if (observer) observer(time, to_result(y, steps, est_error));
      h *= factor;
    } else {
      h *= std::min(factor, 0.5);
      if (h < h_min) {
        throw IntegrationError(ErrorKind::integration,
                               "step size underflow at t = " + std::to_string(time),
                               to_result(y, steps, est_error));
      }
    }
  }
  return to_result(y, steps, est_error);
}

BPGenerator make_bp_generator(const AnalyticFunction& F, Complex b) {
  if (!(std::abs(b) <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::invalid_generator, "Denjoy-Wolff point must lie in the closed disk");
  }
  for (Complex z : positivity_probe_points()) {
    const Complex value = F(z);
    if (!(value.real() >= -1e-10)) {
      throw Error(ErrorKind::invalid_generator,
                  "Re F < 0 at a sample point (Re F = " + std::to_string(value.real()) + ")");
    }
  }
  const Complex bc = std::conj(b);
  AnalyticFunction G(
      [F, b, bc](Complex z) { return F(z) * (bc * z - 1.0) * (z - b); },
      [F, b, bc](Complex z) {
        return F.derivative(z) * (bc * z - 1.0) * (z - b) + F(z) * (bc * (z - b) + (bc * z - 1.0));
      });
  return BPGenerator{F, b, std::move(G)};
}

AnalyticFunction bp_generator(const AnalyticFunction& F, Complex b) {
  return make_bp_generator(F, b).G;
}

double angle_condition_check(const AnalyticFunction& generator, const BoundaryGrid& grid,
                             double r_probe) {
  if (!(r_probe > 0.0 && r_probe < 1.0)) {
    throw Error(ErrorKind::domain, "probe radius must lie in (0, 1)");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex z = r_probe * grid.node(j);
    const double value = (generator(z) * std::conj(z)).real();
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::probe, "generator not finite at probe node " + std::to_string(j));
    }
    worst = std::max(worst, value);
  }
  return worst;
}

double semigroup_residual(const AnalyticFunction& generator, double s, double t,
                          std::span<const Complex> points, double tol) {
  double worst = 0.0;
  for (Complex z : points) {
    const Complex direct = flow_integrate(generator, z, s + t, tol).endpoint;
    const Complex mid = flow_integrate(generator, z, t, tol).endpoint;
    const Complex composed = flow_integrate(generator, mid, s, tol).endpoint;
    worst = std::max(worst, std::abs(direct - composed));
  }
  return worst;
}

AnalyticFunction transplant_generator(const AnalyticFunction& disk_generator,
                                      const ConformalMap& map) {
  auto disk_point = [map](Complex x) {
    const Complex w = map.forward(x);
    const Complex d = map.inverse_derivative(w);
    if (!(std::abs(d) * 1e-12 < 1.0)) {
      throw Error(ErrorKind::degenerate_map, "|k'| below 1e-12");
    }
    return std::pair{w, d};
  };
  return AnalyticFunction(
      [disk_generator, disk_point](Complex x) {
        const auto [w, d] = disk_point(x);
        return disk_generator(w) * d;
      },
      [disk_generator, disk_point, map](Complex x) {
        const auto [w, d] = disk_point(x);
        return disk_generator.derivative(w) +
               disk_generator(w) * map.inverse_second_derivative(w) / d;
      },
      map.domain());
}

AnalyticFunction pull_back_generator(const AnalyticFunction& domain_generator,
                                     const ConformalMap& map) {
  auto check = [](Complex d) {
    if (std::abs(d) < 1e-12) throw Error(ErrorKind::degenerate_map, "|(k^{-1})'| below 1e-12");
  };
  return AnalyticFunction(
      [domain_generator, map, check](Complex w) {
        const Complex d = map.inverse_derivative(w);
        check(d);
        return domain_generator(map.inverse(w)) / d;
      },
      [domain_generator, map, check](Complex w) {
        const Complex d = map.inverse_derivative(w);
        check(d);
        const Complex x = map.inverse(w);
        return domain_generator.derivative(x) -
               domain_generator(x) * map.inverse_second_derivative(w) / (d * d);
      });
}

ConformalBPGenerator make_conformal_bp_generator(const AnalyticFunction& F, Complex tau,
                                                 const ConformalMap& map) {
  const Complex b = map.forward(tau);
  if (!(std::abs(b) <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::domain, "tau must lie in the closure of the domain");
  }
  const BPGenerator disk = make_bp_generator(F, b);
  return ConformalBPGenerator{F, tau, map, transplant_generator(disk.G, map)};
}

AnalyticFunction conformal_bp_generator(const AnalyticFunction& F, Complex tau,
                                        const ConformalMap& map) {
  return make_conformal_bp_generator(F, tau, map).G;
}

double boundary_angle_check_domain(const AnalyticFunction& generator, const ConformalMap& map,
                                   const BoundaryGrid& grid, double r_probe) {
  if (!(r_probe > 0.0 && r_probe < 1.0)) {
    throw Error(ErrorKind::domain, "probe radius must lie in (0, 1)");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex w = r_probe * grid.node(j);
    const Complex x = map.inverse(w);
    const double value = (generator(x) * std::conj(normal_field(map, w))).real();
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::probe, "generator not finite at probe node " + std::to_string(j));
    }
    worst = std::max(worst, value);
  }
  return worst;
}

std::optional<Complex> estimate_denjoy_wolff(const AnalyticFunction& generator, double t_max,
                                             double tol) {
  const std::array<Complex, 5> seeds{Complex{0.0, 0.0}, Complex{0.5, 0.0}, Complex{0.0, -0.5},
                                     Complex{0.3, 0.4}, Complex{-0.6, 0.2}};
  std::array<Complex, 5> points;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    points[i] = generator.domain().parametrization(seeds[i]);
  }
  FlowOptions options;
  options.max_steps = 200'000;

  double elapsed = 0.0;
  double chunk = 1.0;
  std::array<Complex, 5> previous = points;
  while (elapsed < t_max) {
    try {
      for (auto& p : points) p = flow_integrate(generator, p, chunk, tol, options).endpoint;
    } catch (const IntegrationError&) {
      return std::nullopt;
    }
    elapsed += chunk;
    double spread = 0.0;
    double drift = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      spread = std::max(spread, std::abs(points[i] - points[0]));
      drift = std::max(drift, std::abs(points[i] - previous[i]));
    }
    if (spread < 1e-6 && drift < 1e-6) {
      Complex mean{};
      for (Complex p : points) mean += p;
      return mean / static_cast<double>(points.size());
    }
    previous = points;
    chunk = elapsed * 3.0;  // total time quadruples each round
  }
  return std::nullopt;
}

}  // namespace steklov
