#pragma once

// Green function D of a conformally coupled scalar on the hypersphere,
// expressed through the Moebius separation r' and the imaginary wavenumber
// kappa:
//
//   D(r', kappa) = (r' + 1/r') sinh(2 kappa theta) / (8 pi sinh(pi kappa)),
//   theta = arccot r' in (0, pi/2).
//
// The sinh ratio is evaluated as exp(kappa(2 theta - pi)) (1 - e^{-4 kappa
// theta}) / (1 - e^{-2 pi kappa}); the naive ratio overflows near kappa ~ 350
// while this form stays finite for arbitrarily large kappa. At kappa = 0 the
// removable singularity is replaced by its analytic limit.
//
// The kappa integral of D has the closed form (1 + r'^2)/(16 pi r'^2); the
// quadrature route to the same number is kept as an independent oracle.

#include <cmath>
#include <stdexcept>

#include "fisheye/multidual.hpp"
#include "fisheye/quadrature.hpp"

namespace fisheye {

struct ScalarGreenPoint {
  double r_prime = 1.0;  // Moebius separation, > 0
  double kappa = 0.0;    // imaginary wavenumber, >= 0 (units 1/a)
};

namespace detail {

// generic over the scalar type so the bi-tensor assembly can differentiate
// through it exactly
template <class T>
T scalar_green_kernel(const T& r_prime, double kappa) {
  using std::exp;
  using std::expm1;
  const T theta = arccot(r_prime);
  const T pref = r_prime + 1.0 / r_prime;
  if (kappa == 0.0) return pref * theta / (4.0 * M_PI * M_PI);
  const T grow = exp((2.0 * theta - M_PI) * kappa);       // exponent <= 0
  const T num = -expm1(-4.0 * kappa * theta);             // 1 - e^{-4 kappa theta}
  const double den = -std::expm1(-2.0 * M_PI * kappa);    // 1 - e^{-2 pi kappa}
  return pref * grow * num / (8.0 * M_PI * den);
}

}  // namespace detail

double scalar_D(const ScalarGreenPoint& p);

// analytic d D / d r' and d^2 D / d r'^2 (cross-checked against finite
// differences in the test suite)
double dD_dr(const ScalarGreenPoint& p);
double d2D_dr2(const ScalarGreenPoint& p);

// closed form of the kappa integral of D
double integral_D_closed(double r_prime);

// quadrature oracle for the same integral
QuadResult integral_D_quad(double r_prime, const QuadratureConfig& cfg = {});

struct IntegralDerivs {
  double first;   // -1 / (8 pi r'^3)
  double second;  //  3 / (8 pi r'^4)
};

// r'-derivatives of the integrated Green function
IntegralDerivs integral_D_derivs(double r_prime);

// exponential decay rate of D in kappa: pi - 2 arccot r' = 2 atan r'
double scalar_decay_rate(double r_prime);

}  // namespace fisheye
