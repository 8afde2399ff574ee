#include "fisheye/vacuum_stress.hpp"

#include <cmath>
#include <string>

#include "fisheye/em_green.hpp"
#include "fisheye/scalar_green.hpp"

namespace fisheye {

namespace {

void require_inside(double r, const char* who) {
  if (r < 0.0) throw std::domain_error(std::string(who) + ": radius must be >= 0");
  if (r >= 1.0)
    throw std::domain_error(std::string(who) + ": radius must be < 1 (stress diverges at the mirror)");
}

}  // namespace

CorrelationTensor tau_regularized(double r) {
  require_inside(r, "tau_regularized");
  // (1+r^2)/(16 pi^2 (r r')^4) with r r' = (1 - r^2)/2
  const double om = 1.0 - r * r;
  const double t = (1.0 + r * r) / (M_PI * M_PI * om * om * om * om);
  return {Mat3::identity() * t};
}

CorrelationTensor tau_regularized_quad(double r, const QuadratureConfig& cfg) {
  require_inside(r, "tau_regularized_quad");
  if (r == 0.0)
    throw std::domain_error("tau_regularized_quad: image of the center is at infinity; use tau_regularized");
  const double rp = on_axis_separation(r);
  const double decay = scalar_decay_rate(rp);
  // kappa^2 * prefactor is kappa-independent
  const double opr2 = 1.0 + r * r;
  const double kp2_pref = opr2 * opr2 / (16.0 * r * r * r * r * rp);

  const auto int_d1 = integrate_semi_infinite(
      [rp](double kappa) { return 2.0 * dD_dr({rp, kappa}); }, decay, cfg);
  const auto int_d2 = integrate_semi_infinite(
      [rp](double kappa) { return -dD_dr({rp, kappa}) - rp * d2D_dr2({rp, kappa}); },
      decay, cfg);

  const double n = index_profile(r);
  const double scale = -2.0 * n / M_PI * kp2_pref;
  return {Mat3::diagonal(scale * int_d1.value, scale * int_d2.value, scale * int_d2.value)};
}

CorrelationTensor tau_full_tensor(const Point3& r, const QuadratureConfig& cfg) {
  const double rn = norm(r);
  if (rn == 0.0)
    throw std::domain_error("tau_full_tensor: image of the center is at infinity; use tau_regularized");
  require_inside(rn, "tau_full_tensor");
  const double decay = scalar_decay_rate(on_axis_separation(rn));
  const double n = index_profile(rn);

  auto entry_integral = [&](int i, int j, const QuadratureConfig& c) {
    return integrate_semi_infinite(
        [&](double kappa) {
          const Mat3 g = symmetrize(green_reflected(r, r, kappa));
          return kappa * kappa * g(i, j);
        },
        decay, c);
  };

  // the trace sets the scale; off-diagonal entries integrate to ~0 in any
  // frame aligned with r, so they need an absolute floor to converge
  Mat3 integral;
  integral(0, 0) = entry_integral(0, 0, cfg).value;
  QuadratureConfig floored = cfg;
  floored.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(integral(0, 0)));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      if (i == 0 && j == 0) continue;
      const double v = entry_integral(i, j, floored).value;
      integral(i, j) = v;
      integral(j, i) = v;
    }
  return {integral * (-2.0 * n / M_PI)};
}

StressTensor stress_from_tau(const CorrelationTensor& tau) {
  return {tau.m - Mat3::identity() * (0.5 * tau.m.trace())};
}

StressTensor casimir_stress(double r, const MediumParams& params) {
  params.validate();
  const double x = r / params.a;
  require_inside(x, "casimir_stress");
  const double om = 1.0 - x * x;
  const double n = refractive_index(x, params);
  const double s = -1.0 / (M_PI * M_PI * params.a * params.a * params.a * params.a * n *
                           om * om * om * om);
  return {Mat3::identity() * s};
}

double force_density(double r, const MediumParams& params) {
  params.validate();
  const double x = r / params.a;
  require_inside(x, "force_density");
  if (x == 0.0) return 0.0;  // no direction singled out at the center
  const double om = 1.0 - x * x;
  const double a5 = std::pow(params.a, 5);
  return -x * (5.0 + 3.0 * x * x) / (M_PI * M_PI * om * om * om * om * om) / (a5 * params.n1);
}

StressTensor rescale(const StressTensor& sigma_reduced, [[maybe_unused]] double r_over_a,
                     const MediumParams& params) {
  params.validate();
  const double a4 = params.a * params.a * params.a * params.a;
  return {sigma_reduced.m * (1.0 / (a4 * params.n1))};
}

}  // namespace fisheye
