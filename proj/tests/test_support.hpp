#pragma once

// Shared helpers for the test suites: relative error, Richardson-extrapolated
// finite differences (the independent oracle for hand-derived derivatives),
// and deterministic random sampling.

#include <cmath>
#include <random>

#include "fisheye/finite_difference.hpp"
#include "fisheye/mat3.hpp"

namespace testsup {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

inline double rel_err(const fisheye::Mat3& got, const fisheye::Mat3& want) {
  return (got - want).max_abs() / want.max_abs();
}

// fourth-order central stencil with one Richardson step (effective order 6)
template <class F>
double richardson_fd(F&& f, double x, int deriv_order, double h) {
  fisheye::FDConfig cfg;
  cfg.order = 4;
  const double scale = std::max(std::abs(x), 1.0);
  cfg.step_scale = h / scale;
  const double coarse = fisheye::fd_derivative(f, x, deriv_order, cfg);
  cfg.step_scale = 0.5 * h / scale;
  const double fine = fisheye::fd_derivative(f, x, deriv_order, cfg);
  return fine + (fine - coarse) / 15.0;
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  fisheye::Vec3 point_in_ball(double radius) {
    for (;;) {
      fisheye::Vec3 v{uniform(-radius, radius), uniform(-radius, radius),
                      uniform(-radius, radius)};
      if (fisheye::norm(v) < radius) return v;
    }
  }

  fisheye::Vec3 direction() {
    for (;;) {
      fisheye::Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
      const double n = fisheye::norm(v);
      if (n > 0.1 && n < 1.0) return v / n;
    }
  }

  fisheye::Mat3 rotation() {
    return fisheye::rotation_about(direction(), uniform(0.0, 2.0 * M_PI));
  }

 private:
  std::mt19937 gen_;
};

}  // namespace testsup
