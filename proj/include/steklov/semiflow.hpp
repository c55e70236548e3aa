#ifndef STEKLOV_SEMIFLOW_HPP
#define STEKLOV_SEMIFLOW_HPP

#include <functional>
#include <optional>
#include <span>

#include "steklov/analytic_core.hpp"
#include "steklov/conformal.hpp"

namespace steklov {

/// State of the flow z' = G(z) after time t, with the variational solution
/// v = phi_t'(z) and, when a weight g is attached, W = int_0^t g(phi_s(z)) ds
/// and its z-derivative.
struct FlowResult {
  Complex endpoint;
  Complex derivative{1.0};
  Complex weight_integral{};
  Complex weight_gradient{};
  long steps_taken = 0;
  double est_error = 0.0;
};

class IntegrationError : public Error {
 public:
  IntegrationError(ErrorKind kind, const std::string& what, FlowResult partial)
      : Error(kind, what), partial_(partial) {}
  const FlowResult& partial() const { return partial_; }

 private:
  FlowResult partial_;
};

struct FlowOptions {
  std::optional<AnalyticFunction> weight;
  long max_steps = 1'000'000;
};

/// Called after every accepted step with the current time and state.
using FlowObserver = std::function<void(double, const FlowResult&)>;

/// Dormand-Prince 5(4) integration of z' = G(z), v' = G'(z) v, W' = g(z),
/// W_z' = g'(z) v from z0 over [0, t]. The scaled local error
/// |e| / (1 + |y|) of every accepted step is below tol. Disk flows are kept in
/// the closed disk by radial projection of overshoots up to 1e-9.
FlowResult flow_integrate(const AnalyticFunction& generator, Complex z0, double t, double tol,
                          const FlowOptions& options = {}, const FlowObserver& observer = {});

struct BPGenerator {
  AnalyticFunction F;
  Complex b;
  AnalyticFunction G;
};

/// G(z) = F(z) (conj(b) z - 1)(z - b). Checks Re F >= -1e-10 on 200 sample
/// points and |b| <= 1.
BPGenerator make_bp_generator(const AnalyticFunction& F, Complex b);
AnalyticFunction bp_generator(const AnalyticFunction& F, Complex b);

/// max_j Re(G(r e^{i theta_j}) conj(r e^{i theta_j})). A value <= tol
/// certifies the sampled boundary angle condition.
double angle_condition_check(const AnalyticFunction& generator, const BoundaryGrid& grid,
                             double r_probe = 0.999);

/// max over points of |phi_{s+t}(z) - phi_s(phi_t(z))|.
double semigroup_residual(const AnalyticFunction& generator, double s, double t,
                          std::span<const Complex> points, double tol);

/// G_Omega(x) = G_disk(k(x)) / k'(x); k conjugates the two flows.
AnalyticFunction transplant_generator(const AnalyticFunction& disk_generator,
                                      const ConformalMap& map);

/// Disk-side generator (k' G) o k^{-1} of a generator on Omega, evaluated
/// without Newton inversion.
AnalyticFunction pull_back_generator(const AnalyticFunction& domain_generator,
                                     const ConformalMap& map);

struct ConformalBPGenerator {
  AnalyticFunction F;
  Complex tau;
  ConformalMap map;
  AnalyticFunction G;
};

/// G(x) = F(k(x)) (conj(k(tau)) k(x) - 1)(k(x) - k(tau)) / k'(x).
ConformalBPGenerator make_conformal_bp_generator(const AnalyticFunction& F, Complex tau,
                                                 const ConformalMap& map);
AnalyticFunction conformal_bp_generator(const AnalyticFunction& F, Complex tau,
                                        const ConformalMap& map);

/// max_j Re(G(x_j) conj(nu(x_j))) at x_j = k^{-1}(r_probe e^{i theta_j}).
double boundary_angle_check_domain(const AnalyticFunction& generator, const ConformalMap& map,
                                   const BoundaryGrid& grid, double r_probe = 0.999);

/// Long-time flow from five seeds; returns the common limit if the seeds agree
/// within 1e-6 before t_max.
std::optional<Complex> estimate_denjoy_wolff(const AnalyticFunction& generator,
                                             double t_max = 1e8, double tol = 1e-10);

}  // namespace steklov

#endif  // STEKLOV_SEMIFLOW_HPP
