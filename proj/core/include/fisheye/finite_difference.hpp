#pragma once

// Central finite-difference stencils of order 2 and 4. These are the
// independent oracles for every hand-derived derivative in the library
// (scalar Green derivatives, force density, magnetic Green function), so the
// weights live here once rather than scattered through the tests.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fisheye/mat3.hpp"

namespace fisheye {

struct FDConfig {
  int order = 4;            // stencil order, 2 or 4
  double step_scale = 1e-3; // step = step_scale * max(|x|, 1), must be in (0, 0.1)
};

namespace detail {

inline void validate_fd(const FDConfig& cfg, int deriv_order) {
  if (cfg.order != 2 && cfg.order != 4)
    throw std::invalid_argument("fd_derivative: order must be 2 or 4");
  if (!(cfg.step_scale > 0.0) || cfg.step_scale >= 0.1)
    throw std::invalid_argument("fd_derivative: step_scale must be in (0, 0.1)");
  if (deriv_order != 1 && deriv_order != 2)
    throw std::invalid_argument("fd_derivative: derivative order must be 1 or 2");
}

}  // namespace detail

template <class F>
double fd_derivative(F&& f, double x, int deriv_order, FDConfig cfg = {},
                     double lo = -std::numeric_limits<double>::infinity(),
                     double hi = std::numeric_limits<double>::infinity()) {
  detail::validate_fd(cfg, deriv_order);
  const double h = cfg.step_scale * std::max(std::abs(x), 1.0);
  const double reach = (cfg.order == 4) ? 2.0 * h : h;
  if (x - reach < lo || x + reach > hi)
    throw std::domain_error("fd_derivative: stencil leaves the valid domain");

  if (deriv_order == 1) {
    if (cfg.order == 2) return (f(x + h) - f(x - h)) / (2.0 * h);
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
  }
  if (cfg.order == 2) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

// left curl of a matrix field, (curl M)_ij = eps_{ipq} d_p M_qj
template <class Field>
Mat3 fd_curl(Field&& field, const Vec3& at, FDConfig cfg = {}) {
  detail::validate_fd(cfg, 1);
  const double h = cfg.step_scale * std::max(norm(at), 1.0);

  Mat3 grad[3];  // grad[p] = d_p M
  for (int p = 0; p < 3; ++p) {
    Vec3 e{};
    e[p] = 1.0;
    if (cfg.order == 2) {
      grad[p] = (field(at + e * h) - field(at - e * h)) * (1.0 / (2.0 * h));
    } else {
      grad[p] = (-field(at + e * (2 * h)) + field(at + e * h) * 8.0 -
                 field(at - e * h) * 8.0 + field(at - e * (2 * h))) *
                (1.0 / (12.0 * h));
    }
  }

  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
          const int e = levi_civita(i, p, q);
          if (e != 0) s += e * grad[p](q, j);
        }
      out(i, j) = s;
    }
  return out;
}

}  // namespace fisheye
