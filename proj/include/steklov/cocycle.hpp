#ifndef STEKLOV_COCYCLE_HPP
#define STEKLOV_COCYCLE_HPP

#include <optional>
#include <span>

#include "steklov/semiflow.hpp"

namespace steklov {

enum class CocycleKind { exponential, coboundary, derivative };

/// A cocycle m_t attached to the semiflow of a generator G:
///   exponential  m_t(z) = exp(int_0^t g(phi_s(z)) ds)
///   coboundary   m_t(z) = omega(phi_t(z)) / omega(z)
///   derivative   m_t(z) = phi_t'(z)
class CocycleSpec {
 public:
  static CocycleSpec exponential(AnalyticFunction generator, AnalyticFunction g);
  static CocycleSpec coboundary(AnalyticFunction generator, AnalyticFunction omega);
  static CocycleSpec derivative(AnalyticFunction generator);

  CocycleKind kind() const { return kind_; }
  const AnalyticFunction& generator() const { return generator_; }
  /// g for the exponential kind, omega for the coboundary kind.
  const std::optional<AnalyticFunction>& function() const { return function_; }
  /// Sampled sup Re g over 500 interior points (exponential kind only).
  std::optional<double> sup_re_weight() const { return sup_re_weight_; }

 private:
  CocycleSpec(CocycleKind kind, AnalyticFunction generator, std::optional<AnalyticFunction> f,
              std::optional<double> sup)
      : kind_(kind), generator_(std::move(generator)), function_(std::move(f)),
        sup_re_weight_(sup) {}

  CocycleKind kind_;
  AnalyticFunction generator_;
  std::optional<AnalyticFunction> function_;
  std::optional<double> sup_re_weight_;
};

/// 500 deterministic interior points of the generator's domain (20 radii up
/// to 0.999 times 25 angles, mapped through the domain parametrization).
std::vector<Complex> interior_sample_points(const Domain& domain);

/// sup over interior_sample_points of Re g.
double sampled_sup_real_part(const AnalyticFunction& g);

Complex cocycle_eval(const CocycleSpec& spec, Complex z, double t, double tol);

/// max over points of |m_{s+t}(z) - m_s(phi_t(z)) m_t(z)|.
double cocycle_identity_residual(const CocycleSpec& spec, double s, double t,
                                 std::span<const Complex> points, double tol);

/// |phi_t'(z) - exp(int_0^t G'(phi_s(z)) ds)|: the variational solution
/// against Gauss-Legendre quadrature of G' along the trajectory.
double derivative_vs_exponential_check(const AnalyticFunction& generator, Complex z, double t,
                                       double tol);

}  // namespace steklov

#endif  // STEKLOV_COCYCLE_HPP
