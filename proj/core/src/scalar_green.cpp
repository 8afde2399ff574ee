#include "fisheye/scalar_green.hpp"

#include <string>

namespace fisheye {

namespace {

void require_positive_separation(double r_prime, const char* who) {
  if (!(r_prime > 0.0)) {
    throw std::domain_error(std::string(who) + ": separation r' must be > 0");
  }
}

// sinh(2 kappa theta)/sinh(pi kappa) and kappa cosh(2 kappa theta)/sinh(pi kappa)
// in the overflow-safe exponential form shared by D and its derivatives
struct SinhRatios {
  double s;  // sinh ratio,   kappa -> 0 limit: 2 theta / pi
  double c;  // kappa * cosh ratio, kappa -> 0 limit: 1 / pi
};

SinhRatios kappa_ratios(double theta, double kappa) {
  if (kappa == 0.0) return {2.0 * theta / M_PI, 1.0 / M_PI};
  const double grow = std::exp(kappa * (2.0 * theta - M_PI));
  const double em4 = std::expm1(-4.0 * kappa * theta);  // e^{-4 k theta} - 1
  const double den = -std::expm1(-2.0 * M_PI * kappa);
  return {grow * (-em4) / den, kappa * grow * (2.0 + em4) / den};
}

}  // namespace

double scalar_D(const ScalarGreenPoint& p) {
  require_positive_separation(p.r_prime, "scalar_D");
  if (p.kappa < 0.0) throw std::domain_error("scalar_D: kappa must be >= 0");
  return detail::scalar_green_kernel(p.r_prime, p.kappa);
}

double dD_dr(const ScalarGreenPoint& p) {
  require_positive_separation(p.r_prime, "dD_dr");
  if (p.kappa < 0.0) throw std::domain_error("dD_dr: kappa must be >= 0");
  const double rp = p.r_prime;
  const auto [s, c] = kappa_ratios(arccot(rp), p.kappa);
  return ((1.0 - 1.0 / (rp * rp)) * s - (2.0 / rp) * c) / (8.0 * M_PI);
}

double d2D_dr2(const ScalarGreenPoint& p) {
  require_positive_separation(p.r_prime, "d2D_dr2");
  if (p.kappa < 0.0) throw std::domain_error("d2D_dr2: kappa must be >= 0");
  const double rp = p.r_prime;
  const double k = p.kappa;
  const double opr2 = 1.0 + rp * rp;
  const auto [s, c] = kappa_ratios(arccot(rp), k);
  return ((2.0 / (rp * rp * rp) + 4.0 * k * k / (rp * opr2)) * s +
          (4.0 / (rp * rp * opr2)) * c) /
         (8.0 * M_PI);
}

double integral_D_closed(double r_prime) {
  require_positive_separation(r_prime, "integral_D_closed");
  return (1.0 + r_prime * r_prime) / (16.0 * M_PI * r_prime * r_prime);
}

QuadResult integral_D_quad(double r_prime, const QuadratureConfig& cfg) {
  require_positive_separation(r_prime, "integral_D_quad");
  return integrate_semi_infinite(
      [r_prime](double kappa) { return scalar_D({r_prime, kappa}); },
      scalar_decay_rate(r_prime), cfg);
}

IntegralDerivs integral_D_derivs(double r_prime) {
  require_positive_separation(r_prime, "integral_D_derivs");
  const double rp3 = r_prime * r_prime * r_prime;
  return {-1.0 / (8.0 * M_PI * rp3), 3.0 / (8.0 * M_PI * rp3 * r_prime)};
}

double scalar_decay_rate(double r_prime) {
  require_positive_separation(r_prime, "scalar_decay_rate");
  return 2.0 * std::atan(r_prime);
}

}  // namespace fisheye
