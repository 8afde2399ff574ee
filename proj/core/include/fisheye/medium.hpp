#pragma once

// Maxwell's fish eye bounded by a perfect spherical mirror: index profile,
// the Moebius separation of two points seen on the hypersphere, and the
// mirror-inversion map r -> r/r^2 with its field-transformation Jacobian.
//
// Everything internal works in reduced units (a = 1, n1 = 1, hbar c = 1);
// MediumParams enters only where results are scaled back to physical units.

#include <cmath>
#include <stdexcept>

#include "fisheye/mat3.hpp"
#include "fisheye/multidual.hpp"

namespace fisheye {

struct MediumParams {
  double a = 1.0;   // mirror radius
  double n1 = 1.0;  // index at the mirror

  void validate() const {
    if (!(a > 0.0)) throw std::domain_error("MediumParams: mirror radius a must be > 0");
    if (!(n1 > 0.0)) throw std::domain_error("MediumParams: index constant n1 must be > 0");
  }
};

using Point3 = Vec3;
using BiTensor3 = Mat3;

// n(r) = 2 n1 / (1 + r^2), r in units of a. Also equals eps(r) and mu(r):
// the medium is impedance-matched. The profile extends smoothly past r = 1,
// which the image construction uses for exterior image points.
double refractive_index(double r, const MediumParams& params = {});

// index profile as a function of separation, reduced units; generic so the
// Green-function assembly can evaluate it on differentiation numbers
template <class T>
T index_profile(const T& r) {
  return 2.0 / (1.0 + r * r);
}

// |r - r0| / sqrt(1 + 2 r.r0 + r^2 r0^2), generic over the scalar type
template <class T>
T mobius_separation_t(const T& x, const T& y, const T& z,
                      const T& x0, const T& y0, const T& z0) {
  using std::sqrt;
  const T dx = x - x0, dy = y - y0, dz = z - z0;
  const T dist = sqrt(dx * dx + dy * dy + dz * dz);
  const T d = x * x0 + y * y0 + z * z0;
  const T r2 = x * x + y * y + z * z;
  const T r02 = x0 * x0 + y0 * y0 + z0 * z0;
  return dist / sqrt(1.0 + 2.0 * d + r2 * r02);
}

// conformally invariant separation r'; symmetric and rotation invariant
double mobius_separation(const Point3& r, const Point3& r0);

// r' between an on-axis point and its mirror image: (1/r - r)/2
double on_axis_separation(double r);

// mirror image r / r^2; involutive, fixes the mirror sphere
Point3 image_point(const Point3& r);

// Jacobian of the inversion, P = 1/r^2 - 2 (r x r)/r^4; P^T P = 1/r^4
BiTensor3 inversion_jacobian(const Point3& r);

}  // namespace fisheye
