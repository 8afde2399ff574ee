#pragma once

// Regularized vacuum correlation tensor and Casimir stress of the mirrored
// fish eye. The uniform background of the unbounded medium carries no force
// and is subtracted exactly; only the mirror-reflected wave contributes.
//
// Closed forms (reduced units a = n1 = hbar c = 1, x = r/a):
//
//   tau - tau0 = (1 + x^2) / (pi^2 (1 - x^2)^4) * identity
//   sigma      = -(1/2) (1 + x^2) / (pi^2 (1 - x^2)^4) * identity
//              = -1 / (pi^2 n(x) (1 - x^2)^4) * identity
//
// plus the quadrature routes through the reflected Green function that the
// verification suite holds against them. Physical units: sigma scales as
// 1/(a^4 n1) in units of hbar c at fixed r/a, force density as 1/(a^5 n1).

#include <stdexcept>

#include "fisheye/mat3.hpp"
#include "fisheye/medium.hpp"
#include "fisheye/quadrature.hpp"

namespace fisheye {

struct CorrelationTensor {
  Mat3 m;  // units hbar c / a^4 (reduced)
};

struct StressTensor {
  Mat3 m;  // symmetric; isotropic for this medium

  double eigenvalue() const { return m.trace() / 3.0; }
};

// closed form of tau - tau0, reduced units, 0 <= r < 1
CorrelationTensor tau_regularized(double r);

// quadrature route: -(2 n / pi) Int kappa^2 [reflected diagonal] dkappa with
// the on-axis closed-form diagonal, 0 < r < 1
CorrelationTensor tau_regularized_quad(double r, const QuadratureConfig& cfg = {});

// quadrature route through the full reflected bi-tensor at an arbitrary
// interior point (0 < |r| < 1); isotropy of the result is a paper claim the
// acceptance suite checks off-axis
CorrelationTensor tau_full_tensor(const Point3& r, const QuadratureConfig& cfg = {});

// sigma = tau - (1/2) Tr tau
StressTensor stress_from_tau(const CorrelationTensor& tau);

// physical Casimir stress at radius r (same units as `a`), in units of
// hbar c: sigma = -1/(pi^2 a^4 n(r) (1 - r^2/a^2)^4)
StressTensor casimir_stress(double r, const MediumParams& params = {});

// radial component of div sigma for the isotropic stress, ds/dr, in units of
// hbar c; <= 0 everywhere (attraction), 0 at the center
double force_density(double r, const MediumParams& params = {});

// reduced-unit result -> physical units: sigma_reduced(r/a) / (a^4 n1)
StressTensor rescale(const StressTensor& sigma_reduced, double r_over_a,
                     const MediumParams& params);

}  // namespace fisheye
