#include <doctest.h>

#include <cmath>

#include "fisheye/finite_difference.hpp"
#include "fisheye/mat3.hpp"
#include "fisheye/multidual.hpp"
#include "fisheye/quadrature.hpp"
#include "fisheye/scalar_green.hpp"
#include "fisheye/medium.hpp"
#include "test_support.hpp"

using namespace fisheye;
using testsup::rel_err;

TEST_CASE("quadrature: analytic integrals") {
  QuadratureConfig cfg;

  const auto exp_decay = integrate_semi_infinite([](double k) { return std::exp(-k); }, 1.0, cfg);
  CHECK(rel_err(exp_decay.value, 1.0) < 1e-12);
  CHECK(exp_decay.error_estimate >= std::abs(exp_decay.value - 1.0));  // conservative

  const auto gamma3 = integrate_semi_infinite(
      [](double k) { return k * k * std::exp(-2.0 * k); }, 2.0, cfg);
  CHECK(rel_err(gamma3.value, 0.25) < 1e-12);
  CHECK(gamma3.error_estimate >= std::abs(gamma3.value - 0.25));

  // scalar Green function at r' = 1 decays at rate pi - 2 arccot 1 = pi/2
  const auto dker = integrate_semi_infinite(
      [](double k) { return scalar_D({1.0, k}); }, M_PI / 2.0, cfg);
  CHECK(rel_err(dker.value, 1.0 / (8.0 * M_PI)) < 1e-11);
}

TEST_CASE("quadrature: determinism and failure reporting") {
  QuadratureConfig cfg;
  auto f = [](double k) { return std::exp(-k) * std::cos(3.0 * k); };
  const auto a = integrate_semi_infinite(f, 1.0, cfg);
  const auto b = integrate_semi_infinite(f, 1.0, cfg);
  CHECK(a.value == b.value);  // bit-stable
  CHECK(a.subdivisions == b.subdivisions);

  QuadratureConfig tight;
  tight.rel_tol = 1e-15;
  tight.max_subdivisions = 2;
  try {
    integrate_semi_infinite([](double k) { return 1.0 / (1.0 + k * k * k * k); }, 0.5, tight);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.achieved_error > 0.0);
  }

  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, 0.0), std::domain_error);
  QuadratureConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, 1.0, bad),
                  std::invalid_argument);
}

TEST_CASE("finite differences: stencils and convergence order") {
  const auto cube = [](double x) { return x * x * x; };
  CHECK(std::abs(fd_derivative(cube, 2.0, 1) - 12.0) < 1e-9);

  const auto sine = [](double x) { return std::sin(x); };
  CHECK(std::abs(fd_derivative(sine, 0.0, 2)) < 1e-8);

  // order-4 stencil: halving the step divides the error by about 16
  const auto f = [](double x) { return std::exp(2.0 * x); };
  FDConfig cfg;
  cfg.step_scale = 2e-2;
  const double e1 = std::abs(fd_derivative(f, 0.3, 1, cfg) - 2.0 * std::exp(0.6));
  cfg.step_scale = 1e-2;
  const double e2 = std::abs(fd_derivative(f, 0.3, 1, cfg) - 2.0 * std::exp(0.6));
  const double ratio = e1 / e2;
  CHECK(ratio > 10.0);
  CHECK(ratio < 24.0);

  CHECK_THROWS_AS(fd_derivative(cube, 0.0, 1, FDConfig{}, -1e-4, 1.0), std::domain_error);
  FDConfig bad;
  bad.order = 3;
  CHECK_THROWS_AS(fd_derivative(cube, 1.0, 1, bad), std::invalid_argument);
}

TEST_CASE("fd_curl: linear field with known curl") {
  // M columns are vector fields; take M(:,j) = a_j x r with curl 2 a_j
  const Vec3 a0{1.0, 0.0, 0.0}, a1{0.3, -0.2, 0.5}, a2{0.0, 1.0, 2.0};
  auto field = [&](const Vec3& p) {
    Mat3 m;
    const Vec3 c0 = cross(a0, p), c1 = cross(a1, p), c2 = cross(a2, p);
    for (int i = 0; i < 3; ++i) {
      m(i, 0) = c0[i];
      m(i, 1) = c1[i];
      m(i, 2) = c2[i];
    }
    return m;
  };
  const Mat3 got = fd_curl(field, Vec3{0.2, -0.1, 0.4});
  Mat3 want;
  for (int i = 0; i < 3; ++i) {
    want(i, 0) = 2.0 * a0[i];
    want(i, 1) = 2.0 * a1[i];
    want(i, 2) = 2.0 * a2[i];
  }
  CHECK((got - want).max_abs() < 1e-9);
}

TEST_CASE("multidual: exact first and second derivatives") {
  const auto square = [](auto x) { return x * x; };
  const auto d = dual_evaluate(square, 3.0);
  CHECK(d.value == 9.0);
  CHECK(d.first == 6.0);
  CHECK(d.second == 2.0);

  const auto ac = dual_evaluate([](auto x) { return arccot(x); }, 1.0);
  CHECK(rel_err(ac.first, -0.5) < 1e-15);

  // composite through the Moebius separation along the axis, against the
  // finite-difference oracle
  auto composite = [](auto x) {
    using T = std::decay_t<decltype(x)>;
    const T rp = mobius_separation_t(x, T(0.0), T(0.0), T(0.1), T(0.05), T(0.02));
    return detail::scalar_green_kernel(rp, 1.0);
  };
  const auto cd = dual_evaluate(composite, 0.5);
  const double fd1 = testsup::richardson_fd([&](double x) { return composite(x); }, 0.5, 1, 1e-4);
  const double fd2 = testsup::richardson_fd([&](double x) { return composite(x); }, 0.5, 2, 1e-3);
  CHECK(rel_err(cd.first, fd1) < 1e-6);
  CHECK(rel_err(cd.second, fd2) < 1e-5);
}

TEST_CASE("multidual: directional mixed partials") {
  // f(r) = x y^2 z, check d^2 f / du dv for coordinate directions
  auto f = [](const std::array<MultiDual<2>, 3>& r) { return r[0] * r[1] * r[1] * r[2]; };
  const Vec3 p{0.7, -0.4, 1.2};
  const auto d = dual_evaluate(f, p, Vec3{1, 0, 0}, Vec3{0, 1, 0});
  CHECK(rel_err(d.value, p.x * p.y * p.y * p.z) < 1e-15);
  CHECK(rel_err(d.d_u, p.y * p.y * p.z) < 1e-15);
  CHECK(rel_err(d.d_v, 2.0 * p.x * p.y * p.z) < 1e-15);
  CHECK(rel_err(d.d_uv, 2.0 * p.y * p.z) < 1e-15);
}

TEST_CASE("multidual: fourth-order mixed partial against nested stencils") {
  // g = (x + 2 y0)^2 (y + x0)^2 has d4 g / dx dy dx0 dy0 = 8
  auto g = [](auto x, auto y, auto x0, auto y0) {
    auto u = x + 2.0 * y0;
    auto v = y + x0;
    return u * u * v * v;
  };
  MultiDual<4> x = MultiDual<4>::seeded(0.3, 0);
  MultiDual<4> y = MultiDual<4>::seeded(-0.2, 1);
  MultiDual<4> x0 = MultiDual<4>::seeded(0.5, 2);
  MultiDual<4> y0 = MultiDual<4>::seeded(0.1, 3);
  CHECK(rel_err(g(x, y, x0, y0).c[0b1111], 8.0) < 1e-15);
}

TEST_CASE("rotate_tensor and symmetric eigenvalues") {
  const Mat3 t = Mat3::diagonal(1.0, 2.0, 2.0);
  CHECK((rotate_tensor(t, Mat3::identity()) - t).max_abs() == 0.0);

  const Mat3 rz = rotation_about(Vec3{0, 0, 1}, M_PI / 2.0);
  const Mat3 rotated = rotate_tensor(t, rz);
  CHECK((rotated - Mat3::diagonal(2.0, 1.0, 2.0)).max_abs() < 1e-14);

  testsup::Rng rng(2024);
  const Mat3 separated = Mat3::diagonal(1.0, 2.0, 5.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat3 r = rng.rotation();
    CHECK((rotate_tensor(Mat3::identity(), r) - Mat3::identity()).max_abs() < 1e-14);

    const auto es = eigenvalues_symmetric(rotate_tensor(separated, r));
    CHECK(std::abs(es[0] - 1.0) < 1e-12);
    CHECK(std::abs(es[1] - 2.0) < 1e-12);
    CHECK(std::abs(es[2] - 5.0) < 1e-12);

    // the closed-form solver resolves a degenerate pair only to ~sqrt(eps)
    const auto ed = eigenvalues_symmetric(rotate_tensor(t, r));
    CHECK(std::abs(ed[0] - 1.0) < 5e-8);
    CHECK(std::abs(ed[1] - 2.0) < 5e-8);
    CHECK(std::abs(ed[2] - 2.0) < 5e-8);
  }

  Mat3 skew = Mat3::identity();
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(rotate_tensor(t, skew), std::invalid_argument);
}
