#include <doctest.h>

#include <cmath>

#include "steklov/conformal.hpp"
#include "test_support.hpp"

using namespace steklov;
using steklov::testing::random_disk_points;

namespace {

StarLikeDomain cosine_bump() {
  return StarLikeDomain::from_function([](double phi) { return 1.0 + 0.2 * std::cos(phi); });
}

void check_interior_consistency(const ConformalMap& map) {
  for (Complex w : random_disk_points(100, 0.95)) {
    CHECK(std::abs(map.forward(map.inverse(w)) - w) <= 1e-8);
  }
}

}  // namespace

TEST_CASE("empty coefficient list gives the identity map") {
  const BoundaryGrid grid(64);
  const ConformalMap map = make_polynomial_map({}, grid);
  CHECK(map.is_identity());
  for (Complex x : random_disk_points(10)) {
    CHECK(map.forward(x) == x);
    CHECK(std::abs(map.forward_derivative(x) - 1.0) == 0.0);
  }
}

TEST_CASE("polynomial map with c2 = 0.3") {
  const BoundaryGrid grid(128);
  const ConformalMap map = make_polynomial_map({0.3}, grid);
  CHECK(std::abs(map.inverse(1.0) - 1.3) < 1e-15);
  CHECK(std::abs(map.forward(1.3) - 1.0) <= 1e-12);
  CHECK(std::abs(map.forward_derivative(map.inverse(0.0)) - 1.0) < 1e-15);
  CHECK(map.round_trip_error() <= 1e-6);
  check_interior_consistency(map);
  // second derivative of k against differences of k'
  const Complex x{0.2, 0.1};
  const Complex fd = (map.forward_derivative(x + 1e-6) - map.forward_derivative(x - 1e-6)) / 2e-6;
  CHECK(std::abs(fd - map.forward_second_derivative(x)) < 1e-6);
}

TEST_CASE("polynomial map rejects coefficients violating the univalence bound") {
  const BoundaryGrid grid(64);
  CHECK_THROWS_AS(make_polynomial_map({0.5}, grid), Error);
  CHECK_THROWS_AS(make_polynomial_map({0.2, 0.2}, grid), Error);
  try {
    make_polynomial_map({0.6}, grid);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_map);
  }
}

TEST_CASE("theodorsen on the unit circle is the identity") {
  const BoundaryGrid grid(64);
  const ConformalMap map =
      theodorsen_solve(StarLikeDomain::from_function([](double) { return 1.0; }), grid, 200, 1e-13);
  CHECK((map.table().sigma - grid.angles()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(map.inverse_series().coefficient(1) - 1.0) < 1e-14);
  for (Index n = 2; n <= map.inverse_series().degree(); ++n) {
    CHECK(std::abs(map.inverse_series().coefficient(n)) < 1e-14);
  }
}

TEST_CASE("theodorsen on the circle of radius 2 is a scaling") {
  const BoundaryGrid grid(64);
  const ConformalMap map =
      theodorsen_solve(StarLikeDomain::from_function([](double) { return 2.0; }), grid, 200, 1e-13);
  CHECK((map.table().sigma - grid.angles()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(map.inverse({0.3, 0.4}) - Complex{0.6, 0.8}) < 1e-13);
  CHECK(std::abs(map.forward(2.0) - 1.0) < 1e-13);
}

TEST_CASE("theodorsen on rho = 1 + 0.2 cos converges and round-trips") {
  const BoundaryGrid grid(256);
  const ConformalMap map = theodorsen_solve(cosine_bump(), grid, 200, 1e-13);
  CHECK(map.diagnostics().iterations <= 200);
  CHECK(map.round_trip_error() <= 1e-6);
  check_interior_consistency(map);
  // sampled radius function describes the same domain
  Eigen::VectorXd samples(64);
  for (Index j = 0; j < 64; ++j) samples(j) = 1.0 + 0.2 * std::cos(2.0 * kPi * j / 64.0);
  const ConformalMap sampled = theodorsen_solve(StarLikeDomain::from_samples(samples), grid);
  CHECK((sampled.table().points - map.table().points).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("theodorsen reports non-convergence") {
  const BoundaryGrid grid(64);
  try {
    theodorsen_solve(cosine_bump(), grid, 2, 1e-13);
    FAIL("expected a mapping error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::mapping);
  }
}

TEST_CASE("star-like domains need a positive radius") {
  CHECK_THROWS_AS(StarLikeDomain::from_function([](double phi) { return std::cos(phi); }), Error);
  Eigen::VectorXd bad(8);
  bad << 1, 1, 1, -1, 1, 1, 1, 1;
  CHECK_THROWS_AS(StarLikeDomain::from_samples(bad), Error);
}

TEST_CASE("unit normal examples") {
  const BoundaryGrid grid(64);
  const ConformalMap id = identity_map(grid);
  for (double theta : {0.0, 1.0, 2.5, 4.0}) {
    const Complex x = std::polar(1.0, theta);
    CHECK(std::abs(unit_normal(id, x) - x) < 1e-15);
  }
  CHECK(std::abs(unit_normal(make_scaling_map(2.0, grid), 2.0) - 1.0) < 1e-14);

  const ConformalMap poly = make_polynomial_map({0.3}, grid);
  CHECK(std::abs(unit_normal(poly, 1.3) - 1.0) < 1e-12);
}

TEST_CASE("unit normals have modulus one on every tabulated node") {
  const BoundaryGrid grid(128);
  const std::vector<ConformalMap> maps{identity_map(grid), make_polynomial_map({0.3}, grid),
                                       make_polynomial_map({Complex{0.1, 0.1}, 0.15}, grid),
                                       theodorsen_solve(cosine_bump(), grid)};
  for (const auto& map : maps) {
    for (Index j = 0; j < grid.size(); ++j) {
      CHECK(std::abs(std::abs(unit_normal_at_node(map, j)) - 1.0) <= 1e-9);
      CHECK(std::abs(std::abs(unit_normal(map, map.table().points(j))) - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("conjugate function examples") {
  const BoundaryGrid grid(32);
  const Eigen::VectorXd theta = grid.angles();
  const Eigen::VectorXd c1 = conjugate_function(theta.array().cos().matrix());
  CHECK((c1 - theta.array().sin().matrix()).cwiseAbs().maxCoeff() < 1e-14);
  const Eigen::VectorXd c0 = conjugate_function(Eigen::VectorXd::Constant(32, 3.0));
  CHECK(c0.cwiseAbs().maxCoeff() < 1e-14);
  const Eigen::VectorXd c3 = conjugate_function((3.0 * theta).array().cos().matrix());
  CHECK((c3 - (3.0 * theta).array().sin().matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("conjugating twice negates mean-zero trigonometric polynomials") {
  const BoundaryGrid grid(128);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd signal = Eigen::VectorXd::Zero(128);
    for (int n = 1; n <= 40; ++n) {
      const Complex c = steklov::testing::random_complex();
      signal += (c.real() * (n * grid.angles()).array().cos() +
                 c.imag() * (n * grid.angles()).array().sin())
                    .matrix();
    }
    const Eigen::VectorXd twice = conjugate_function(conjugate_function(signal));
    CHECK((twice + signal).cwiseAbs().maxCoeff() <= 1e-10);
  }
}
