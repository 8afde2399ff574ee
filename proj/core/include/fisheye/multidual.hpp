#pragma once

// Forward-mode differentiation numbers with N independent nilpotent
// generators e_0..e_{N-1} (e_i^2 = 0). c[mask] carries the mixed partial
// of the computed expression with respect to the directions in `mask`, so a
// single evaluation yields the value together with every mixed first-order
// partial of the seeded directions, exact to rounding.
//
// Seeding the same input variable with two generators turns the e_i e_j
// coefficient into a second derivative: f(x + e0 + e1) has c[0b11] = f''(x).
// The Green-function assembly seeds four generators (two per argument) to
// obtain the mixed fourth derivatives of the scalar kernel in one pass.

#include <array>
#include <cmath>
#include <stdexcept>

#include "fisheye/mat3.hpp"

namespace fisheye {

template <unsigned N>
struct MultiDual {
  static constexpr unsigned kSize = 1u << N;
  std::array<double, kSize> c{};

  constexpr MultiDual() = default;
  constexpr MultiDual(double v) { c[0] = v; }

  static MultiDual seeded(double v, unsigned dir) {
    MultiDual d(v);
    d.c[1u << dir] = 1.0;
    return d;
  }

  double value() const { return c[0]; }
  double partial(unsigned mask) const { return c[mask]; }
};

template <unsigned N>
MultiDual<N> operator+(const MultiDual<N>& a, const MultiDual<N>& b) {
  MultiDual<N> r;
  for (unsigned m = 0; m < MultiDual<N>::kSize; ++m) r.c[m] = a.c[m] + b.c[m];
  return r;
}

template <unsigned N>
MultiDual<N> operator-(const MultiDual<N>& a, const MultiDual<N>& b) {
  MultiDual<N> r;
  for (unsigned m = 0; m < MultiDual<N>::kSize; ++m) r.c[m] = a.c[m] - b.c[m];
  return r;
}

template <unsigned N>
MultiDual<N> operator-(const MultiDual<N>& a) {
  MultiDual<N> r;
  for (unsigned m = 0; m < MultiDual<N>::kSize; ++m) r.c[m] = -a.c[m];
  return r;
}

// subset convolution: only disjoint index sets survive the nilpotency
template <unsigned N>
MultiDual<N> operator*(const MultiDual<N>& a, const MultiDual<N>& b) {
  MultiDual<N> r;
  for (unsigned m = 0; m < MultiDual<N>::kSize; ++m) {
    double s = 0.0;
    unsigned sub = m;
    for (;;) {
      s += a.c[sub] * b.c[m ^ sub];
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
    r.c[m] = s;
  }
  return r;
}

template <unsigned N>
MultiDual<N> operator+(const MultiDual<N>& a, double b) {
  MultiDual<N> r = a;
  r.c[0] += b;
  return r;
}
template <unsigned N>
MultiDual<N> operator+(double a, const MultiDual<N>& b) { return b + a; }
template <unsigned N>
MultiDual<N> operator-(const MultiDual<N>& a, double b) { return a + (-b); }
template <unsigned N>
MultiDual<N> operator-(double a, const MultiDual<N>& b) { return (-b) + a; }

template <unsigned N>
MultiDual<N> operator*(const MultiDual<N>& a, double b) {
  MultiDual<N> r;
  for (unsigned m = 0; m < MultiDual<N>::kSize; ++m) r.c[m] = a.c[m] * b;
  return r;
}
template <unsigned N>
MultiDual<N> operator*(double a, const MultiDual<N>& b) { return b * a; }
template <unsigned N>
MultiDual<N> operator/(const MultiDual<N>& a, double b) { return a * (1.0 / b); }

// f(u) from the Taylor coefficients tc[k] = f^(k)(u0)/k!; the nilpotent part
// of u truncates the series at order N exactly.
template <unsigned N>
MultiDual<N> apply_taylor(const MultiDual<N>& u, const std::array<double, N + 1>& tc) {
  MultiDual<N> h = u;
  h.c[0] = 0.0;
  MultiDual<N> out(tc[0]);
  MultiDual<N> hk(1.0);
  for (unsigned k = 1; k <= N; ++k) {
    hk = hk * h;
    out = out + hk * tc[k];
  }
  return out;
}

template <unsigned N>
MultiDual<N> reciprocal(const MultiDual<N>& u) {
  const double v = u.c[0];
  std::array<double, N + 1> tc{};
  double t = 1.0 / v;
  for (unsigned k = 0; k <= N; ++k) {
    tc[k] = t;
    t = -t / v;
  }
  return apply_taylor(u, tc);
}

template <unsigned N>
MultiDual<N> operator/(const MultiDual<N>& a, const MultiDual<N>& b) {
  return a * reciprocal(b);
}
template <unsigned N>
MultiDual<N> operator/(double a, const MultiDual<N>& b) {
  return reciprocal(b) * a;
}

template <unsigned N>
MultiDual<N> exp(const MultiDual<N>& u) {
  const double e = std::exp(u.c[0]);
  std::array<double, N + 1> tc{};
  double f = 1.0;
  for (unsigned k = 0; k <= N; ++k) {
    tc[k] = e / f;
    f *= static_cast<double>(k + 1);
  }
  return apply_taylor(u, tc);
}

template <unsigned N>
MultiDual<N> expm1(const MultiDual<N>& u) {
  const double e = std::exp(u.c[0]);
  std::array<double, N + 1> tc{};
  tc[0] = std::expm1(u.c[0]);
  double f = 1.0;
  for (unsigned k = 1; k <= N; ++k) {
    tc[k] = e / f;
    f *= static_cast<double>(k + 1);
  }
  return apply_taylor(u, tc);
}

template <unsigned N>
MultiDual<N> sqrt(const MultiDual<N>& u) {
  const double v = u.c[0];
  if (v <= 0.0) throw std::domain_error("MultiDual sqrt: non-positive argument");
  std::array<double, N + 1> tc{};
  tc[0] = std::sqrt(v);
  for (unsigned k = 1; k <= N; ++k)
    tc[k] = tc[k - 1] * (0.5 - static_cast<double>(k - 1)) / (static_cast<double>(k) * v);
  return apply_taylor(u, tc);
}

template <unsigned N>
MultiDual<N> atan(const MultiDual<N>& u) {
  static_assert(N <= 4, "atan Taylor coefficients tabulated up to order 4");
  const double v = u.c[0];
  const double w = 1.0 / (1.0 + v * v);
  std::array<double, N + 1> tc{};
  tc[0] = std::atan(v);
  if constexpr (N >= 1) tc[1] = w;
  if constexpr (N >= 2) tc[2] = -v * w * w;
  if constexpr (N >= 3) tc[3] = (v * v - 1.0 / 3.0) * w * w * w;
  if constexpr (N >= 4) tc[4] = v * (1.0 - v * v) * w * w * w * w;
  return apply_taylor(u, tc);
}

// arccot on (0, pi) principal branch; overloads keep generic kernels usable
// with both plain doubles and differentiation numbers.
inline double arccot(double x) { return std::atan2(1.0, x); }

template <unsigned N>
MultiDual<N> arccot(const MultiDual<N>& u) {
  return M_PI / 2.0 - atan(u);
}

struct ValueDerivs {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

// value and exact first/second derivative of a scalar callable; F must be
// invocable with MultiDual<2>
template <class F>
ValueDerivs dual_evaluate(F&& f, double x) {
  MultiDual<2> u(x);
  u.c[1] = 1.0;
  u.c[2] = 1.0;
  const MultiDual<2> r = f(u);
  return {r.c[0], r.c[1], r.c[3]};
}

struct DirectionalDerivs {
  double value = 0.0;
  double d_u = 0.0;    // directional derivative along u
  double d_v = 0.0;    // directional derivative along v
  double d_uv = 0.0;   // mixed second derivative
};

// exact first partials along two directions plus their mixed second partial;
// F must be invocable with an array of three MultiDual<2>
template <class F>
DirectionalDerivs dual_evaluate(F&& f, const Vec3& p, const Vec3& u, const Vec3& v) {
  std::array<MultiDual<2>, 3> coords;
  for (int i = 0; i < 3; ++i) {
    coords[i] = MultiDual<2>(p[i]);
    coords[i].c[1] = u[i];
    coords[i].c[2] = v[i];
  }
  const MultiDual<2> r = f(coords);
  return {r.c[0], r.c[1], r.c[2], r.c[3]};
}

}  // namespace fisheye
