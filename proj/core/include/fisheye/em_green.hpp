#pragma once

// Electromagnetic bi-tensor Green function of the fish-eye medium at
// imaginary wavenumber kappa.
//
// Free-space form (medium extended past the mirror):
//
//   G0 = - [curl  n(r') (grad x grad0) D(r')  curl0] / (n(r) n(r0) kappa^2)
//
// with the left curl acting on the field index (rows, derivatives at r) and
// the right curl on the source index (columns, derivatives at r0). The mixed
// fourth derivatives of the scalar composite are obtained exactly with
// four-generator differentiation numbers, two generators per argument; a
// finite-difference route through the same contraction serves as the oracle.
//
// The mirror is handled by an image source on the hypersphere: the reflected
// wave is -P(r) G0(image(r), r0) and the total Green function is their sum,
// whose tangential rows vanish on the mirror sphere.

#include <stdexcept>

#include "fisheye/mat3.hpp"
#include "fisheye/medium.hpp"

namespace fisheye {

// evaluation closer to the source than this is rejected; the contact
// (delta-function) term of the Green function is never represented
inline constexpr double kCoincidenceRadius = 1e-6;

struct ReflectedDiagonal {
  double d1 = 0.0;         // 2 dD/dr'
  double d2 = 0.0;         // -dD/dr' - r' d2D/dr'^2
  double prefactor = 0.0;  // (1+r^2)^2 / (16 kappa^2 r^4 r')

  Mat3 as_matrix() const {
    return Mat3::diagonal(prefactor * d1, prefactor * d2, prefactor * d2);
  }
};

// free-space bi-tensor G0(r, r0; i kappa)
BiTensor3 green_free(const Point3& r, const Point3& r0, double kappa,
                     double exclusion_radius = kCoincidenceRadius);

// symmetrized variant Gs = (G0(r,r0) + G0(r0,r)^T)/2
BiTensor3 green_free_symmetrized(const Point3& r, const Point3& r0, double kappa,
                                 double exclusion_radius = kCoincidenceRadius);

// mirror term -P(r) G0(image(r), r0); finite at r = r0 inside the ball
BiTensor3 green_reflected(const Point3& r, const Point3& r0, double kappa);

// G0 + reflected term; accepts |r| = 1 for boundary-condition checks
BiTensor3 green_total(const Point3& r, const Point3& r0, double kappa,
                      double exclusion_radius = kCoincidenceRadius);

// closed-form diagonal of the reflected term on the x axis at coincidence,
// evaluated at r' = (1/r - r)/2; the independent second route to the same
// matrix as green_reflected
ReflectedDiagonal reflected_diagonal_on_axis(double r, double kappa);

enum class GreenPart { Free, Reflected, Total };

// magnetic Green function -[curl G curl0] / (n(r) n(r0) kappa^2) computed by
// fourth-order finite-difference curls of the selected electric part; away
// from the source it must reproduce that part entrywise (impedance matching),
// which the verification suite checks together with the h^4 stencil decay
BiTensor3 magnetic_green_oracle(GreenPart part, const Point3& r, const Point3& r0,
                                double kappa, double step = 1e-3);

}  // namespace fisheye
