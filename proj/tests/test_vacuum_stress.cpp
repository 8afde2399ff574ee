#include <doctest.h>

#include <cmath>

#include "fisheye/finite_difference.hpp"
#include "fisheye/vacuum_stress.hpp"
#include "test_support.hpp"

using namespace fisheye;
using testsup::rel_err;

namespace {

constexpr double kTau05 = 0.4002812193277542;      // tau - tau0 eigenvalue at r = 0.5
constexpr double kSigma0 = -0.05066059182116889;   // -1/(2 pi^2)
constexpr double kSigma05 = -0.2001406096638771;   // -160/(81 pi^2)
constexpr double kForce05 = -1.2275290726051127;   // ds/dr at r = 0.5

}  // namespace

TEST_CASE("tau_regularized: closed-form values") {
  const Mat3 t0 = tau_regularized(0.0).m;
  CHECK(rel_err(t0(0, 0), 1.0 / (M_PI * M_PI)) < 1e-15);
  CHECK((t0 - Mat3::identity() * t0(0, 0)).max_abs() == 0.0);

  CHECK(rel_err(tau_regularized(0.5).m(0, 0), kTau05) < 1e-14);
  CHECK_THROWS_AS(tau_regularized(1.0), std::domain_error);
  CHECK_THROWS_AS(tau_regularized(-0.1), std::domain_error);
}

TEST_CASE("tau quadrature route matches the closed form") {
  QuadratureConfig cfg;
  for (int i = 1; i <= 9; ++i) {
    const double r = 0.1 * i;
    CHECK(rel_err(tau_regularized_quad(r, cfg).m, tau_regularized(r).m) < 1e-8);
  }
  CHECK_THROWS_AS(tau_regularized_quad(0.0, cfg), std::domain_error);
}

TEST_CASE("tau_full_tensor: isotropic off-axis, reproduces the closed form") {
  const Point3 p{0.3, 0.4, 0.0};
  const auto tau = tau_full_tensor(p);
  const auto ev = eigenvalues_symmetric(tau.m);
  const double mean = (ev[0] + ev[1] + ev[2]) / 3.0;
  CHECK((ev[2] - ev[0]) / std::abs(mean) < 1e-7);
  CHECK(rel_err(mean, tau_regularized(0.5).m(0, 0)) < 1e-7);
}

TEST_CASE("stress_from_tau: trace algebra") {
  const Mat3 iso = stress_from_tau({Mat3::identity() * 2.0}).m;
  CHECK((iso - Mat3::identity() * -1.0).max_abs() == 0.0);

  const Mat3 aniso = stress_from_tau({Mat3::diagonal(1.0, 0.0, 0.0)}).m;
  CHECK((aniso - Mat3::diagonal(0.5, -0.5, -0.5)).max_abs() == 0.0);

  CHECK(stress_from_tau({Mat3::zero()}).m.max_abs() == 0.0);
}

TEST_CASE("casimir_stress: values, sign, monotonicity") {
  CHECK(rel_err(casimir_stress(0.0).eigenvalue(), kSigma0) < 1e-14);
  CHECK(rel_err(casimir_stress(0.5).eigenvalue(), kSigma05) < 1e-14);

  double prev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = 0.99 * i / 99.0;
    const double s = casimir_stress(r).eigenvalue();
    CHECK(s < 0.0);
    if (i > 0) CHECK(s < prev);
    prev = s;
  }

  CHECK_THROWS_AS(casimir_stress(1.0), std::domain_error);
  CHECK_THROWS_AS(casimir_stress(2.5, {2.0, 1.0}), std::domain_error);
}

TEST_CASE("pipeline equality: stress from tau equals the direct closed form") {
  for (int i = 0; i <= 33; ++i) {
    const double r = 0.99 * i / 33.0;
    const StressTensor via_tau = stress_from_tau(tau_regularized(r));
    CHECK(rel_err(via_tau.m, casimir_stress(r).m) < 1e-12);
  }
  // quadrature route end to end
  QuadratureConfig cfg;
  for (double r : {0.2, 0.5, 0.8}) {
    const StressTensor via_quad = stress_from_tau(tau_regularized_quad(r, cfg));
    CHECK(rel_err(via_quad.m, casimir_stress(r).m) < 1e-8);
  }
}

TEST_CASE("rescale and the scaling invariant sigma a^4 n1") {
  const StressTensor reduced = casimir_stress(0.0);
  CHECK(rel_err(rescale(reduced, 0.0, {2.0, 1.0}).eigenvalue(), -1.0 / (32.0 * M_PI * M_PI)) <
        1e-14);
  CHECK(rel_err(rescale(reduced, 0.0, {1.0, 3.0}).eigenvalue(), -1.0 / (6.0 * M_PI * M_PI)) <
        1e-14);
  CHECK((rescale(reduced, 0.0, {1.0, 1.0}).m - reduced.m).max_abs() == 0.0);

  for (double x : {0.2, 0.5, 0.8}) {
    const double reference = casimir_stress(x).eigenvalue();
    for (double a : {0.5, 1.0, 2.0})
      for (double n1 : {0.5, 1.0, 3.0}) {
        const MediumParams params{a, n1};
        const double invariant = casimir_stress(x * a, params).eigenvalue() * std::pow(a, 4) * n1;
        CHECK(rel_err(invariant, reference) < 1e-12);
        // casimir_stress must factor through rescale of the reduced result
        const double via_rescale = rescale(casimir_stress(x), x, params).eigenvalue();
        CHECK(rel_err(casimir_stress(x * a, params).eigenvalue(), via_rescale) < 1e-12);
      }
  }
}

TEST_CASE("force_density: center, frozen value, sign, FD consistency") {
  CHECK(force_density(0.0) == 0.0);
  CHECK(!std::signbit(force_density(0.0)));
  CHECK(rel_err(force_density(0.5), kForce05) < 1e-12);

  for (int i = 1; i <= 9; ++i) CHECK(force_density(0.1 * i) < 0.0);

  for (int i = 0; i <= 17; ++i) {
    const double r = 0.05 + (0.9 - 0.05) * i / 17.0;
    FDConfig cfg;
    cfg.step_scale = 1e-3 * (1.0 - r * r);
    const double fd =
        fd_derivative([](double x) { return casimir_stress(x).eigenvalue(); }, r, 1, cfg);
    CHECK(rel_err(force_density(r), fd) < 1e-7);
  }

  // physical units: 1/(a^5 n1) at fixed r/a
  CHECK(rel_err(force_density(1.0, {2.0, 1.0}) * 32.0, kForce05) < 1e-12);
  CHECK(rel_err(force_density(0.5, {1.0, 2.0}) * 2.0, kForce05) < 1e-12);
  CHECK_THROWS_AS(force_density(1.0), std::domain_error);
}

TEST_CASE("divergence law at the mirror") {
  auto boundary_product = [](double r) {
    const double om = 1.0 - r * r;
    return casimir_stress(r).eigenvalue() * om * om * om * om;
  };
  // sigma (1-r^2)^4 = -1/(pi^2 n(r)) exactly, also at extreme radii
  CHECK(rel_err(boundary_product(0.999), -1.0 / (M_PI * M_PI * refractive_index(0.999))) < 1e-6);
  // and it approaches -1/pi^2 as r -> 1
  auto deviation = [&](double r) { return std::abs(boundary_product(r) * M_PI * M_PI + 1.0); };
  CHECK(deviation(0.9999) < deviation(0.999));
  CHECK(deviation(0.999) < deviation(0.99));
}
