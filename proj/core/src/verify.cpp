#include "fisheye/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fisheye/em_green.hpp"
#include "fisheye/finite_difference.hpp"
#include "fisheye/medium.hpp"
#include "fisheye/profile.hpp"
#include "fisheye/quadrature.hpp"
#include "fisheye/scalar_green.hpp"
#include "fisheye/vacuum_stress.hpp"

namespace fisheye {

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

VerificationReport report(std::string name, double measured, double tol) {
  return {std::move(name), measured <= tol, measured, tol};
}

// ---- individual checks ----------------------------------------------------

VerificationReport check_kappa_integral(const QuadratureConfig& quad) {
  const double grid[] = {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0};
  double worst = 0.0;
  for (double rp : grid)
    worst = std::max(worst, rel_err(integral_D_quad(rp, quad).value, integral_D_closed(rp)));
  return report("kappa_integral_closed_form", worst, 1e-10);
}

VerificationReport check_tau_quad_vs_closed(const QuadratureConfig& quad) {
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double r = 0.1 * i;
    const Mat3 got = tau_regularized_quad(r, quad).m;
    const Mat3 want = tau_regularized(r).m;
    worst = std::max(worst, (got - want).max_abs() / want.max_abs());
  }
  return report("tau_quadrature_vs_closed", worst, 1e-8);
}

VerificationReport check_stress_pipeline(const QuadratureConfig& quad) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double r = 0.1 + 0.8 * i / 19.0;
    const Mat3 got = stress_from_tau(tau_regularized_quad(r, quad)).m;
    const Mat3 want = casimir_stress(r).m;
    worst = std::max(worst, (got - want).max_abs() / want.max_abs());
  }
  return report("stress_pipeline_quadrature", worst, 1e-8);
}

VerificationReport check_two_path_reflected() {
  const double radii[] = {0.2, 0.5, 0.8};
  const double kappas[] = {0.5, 1.0, 3.0};
  double worst = 0.0;
  for (double r : radii)
    for (double k : kappas) {
      const Point3 p{r, 0.0, 0.0};
      const Mat3 got = green_reflected(p, p, k);
      const Mat3 want = reflected_diagonal_on_axis(r, k).as_matrix();
      worst = std::max(worst, (got - want).max_abs() / want.max_abs());
    }
  return report("reflected_two_path", worst, 1e-8);
}

VerificationReport check_transversality() {
  // fixed direction/source/kappa samples; 12 boundary points
  const Point3 dirs[] = {
      {1.0, 0.0, 0.0},   {0.0, 1.0, 0.0},   {0.0, 0.0, 1.0},  {0.6, 0.8, 0.0},
      {0.0, 0.6, -0.8},  {-0.8, 0.0, 0.6},  {0.577350269189626, 0.577350269189626, 0.577350269189626},
      {-0.267261241912424, 0.534522483824849, 0.801783725737273},
      {0.408248290463863, -0.816496580927726, 0.408248290463863},
      {0.9486832980505138, 0.0, -0.31622776601683794},
      {-0.224, 0.936, 0.272}, {0.72, -0.48, 0.5019960159204453}};
  const Point3 sources[] = {{0.1, 0.2, -0.1}, {0.35, 0.0, 0.1},  {-0.2, 0.3, 0.25},
                            {0.0, -0.45, 0.1}, {0.5, 0.1, 0.0},  {0.15, 0.15, 0.15},
                            {-0.3, -0.2, 0.1}, {0.05, 0.4, -0.3}, {0.25, -0.25, 0.25},
                            {0.0, 0.0, 0.55},  {0.4, 0.2, 0.1},  {-0.1, 0.1, -0.5}};
  const double kappas[] = {0.5, 1.0, 2.0};

  double worst = 0.0;
  for (int s = 0; s < 12; ++s) {
    const Point3 rhat = normalized(dirs[s]);
    const Point3 r = rhat;  // on the mirror
    const Mat3 total = green_total(r, sources[s], kappas[s % 3]);
    // tangent pair orthogonal to rhat
    Point3 seed = std::abs(rhat.x) < 0.9 ? Point3{1.0, 0.0, 0.0} : Point3{0.0, 1.0, 0.0};
    const Point3 t1 = normalized(cross(rhat, seed));
    const Point3 t2 = normalized(cross(rhat, t1));
    double tangential = 0.0;
    for (int j = 0; j < 3; ++j) {
      double c1 = 0.0, c2 = 0.0;
      for (int i = 0; i < 3; ++i) {
        c1 += t1[i] * total(i, j);
        c2 += t2[i] * total(i, j);
      }
      tangential = std::max({tangential, std::abs(c1), std::abs(c2)});
    }
    worst = std::max(worst, tangential / total.max_abs());
  }
  return report("mirror_transversality", worst, 1e-6);
}

// isotropy of tau from the full reflected bi-tensor, on- and off-axis, plus
// agreement of its mean eigenvalue with the closed form
void check_isotropy(const QuadratureConfig& quad, std::vector<VerificationReport>& out) {
  const Point3 points[] = {{0.3, 0.0, 0.0},    {0.6, 0.0, 0.0},   {0.3, 0.4, 0.0},
                           {-0.2, 0.1, 0.4},   {0.1, -0.5, 0.3},  {0.25, 0.25, -0.25},
                           {-0.4, -0.3, -0.2}};
  double worst_spread = 0.0;
  double worst_value = 0.0;
  for (const Point3& p : points) {
    const auto tau = tau_full_tensor(p, quad);
    const auto ev = eigenvalues_symmetric(tau.m);
    const double mean = (ev[0] + ev[1] + ev[2]) / 3.0;
    worst_spread = std::max(worst_spread, (ev[2] - ev[0]) / std::abs(mean));
    const double closed = tau_regularized(norm(p)).m(0, 0);
    worst_value = std::max(worst_value, rel_err(mean, closed));
  }
  out.push_back(report("stress_isotropy", worst_spread, 1e-7));
  out.push_back(report("tau_full_tensor_vs_closed", worst_value, 1e-7));
}

void check_magnetic_oracle(std::vector<VerificationReport>& out) {
  struct Sample {
    Point3 r, r0;
    double kappa;
  };
  const Sample free_samples[] = {{{0.4, 0.0, 0.0}, {0.1, 0.2, 0.0}, 1.0},
                                 {{0.3, 0.1, -0.2}, {-0.1, 0.25, 0.1}, 0.5},
                                 {{0.2, -0.3, 0.1}, {0.45, 0.1, -0.1}, 2.0},
                                 {{-0.35, 0.2, 0.15}, {0.1, -0.15, 0.3}, 1.5},
                                 {{0.15, 0.4, 0.2}, {-0.2, 0.1, -0.25}, 0.8}};
  const Sample refl_samples[] = {{{0.4, 0.0, 0.0}, {0.1, 0.2, 0.0}, 1.0},
                                 {{0.3, 0.1, -0.2}, {-0.1, 0.25, 0.1}, 0.5},
                                 {{0.2, -0.3, 0.1}, {0.45, 0.1, -0.1}, 2.0},
                                 {{0.35, 0.35, 0.0}, {0.35, 0.35, 0.0}, 1.0},
                                 {{-0.25, 0.2, 0.3}, {-0.25, 0.2, 0.3}, 1.2}};
  const double h = 1e-3;

  double worst = 0.0;
  for (const auto& s : free_samples) {
    const Mat3 want = green_free(s.r, s.r0, s.kappa);
    const Mat3 got = magnetic_green_oracle(GreenPart::Free, s.r, s.r0, s.kappa, h);
    worst = std::max(worst, (got - want).max_abs() / want.max_abs());
  }
  for (const auto& s : refl_samples) {
    const Mat3 want = green_reflected(s.r, s.r0, s.kappa);
    const Mat3 got = magnetic_green_oracle(GreenPart::Reflected, s.r, s.r0, s.kappa, h);
    worst = std::max(worst, (got - want).max_abs() / want.max_abs());
  }
  out.push_back(report("tau_el_eq_tau_mag", worst, 1e-4));

  // stencil convergence: halving the step must shrink the discrepancy by
  // about 2^4; pass if the observed order is within one of 4
  const Point3 r{0.35, 0.1, -0.15}, r0{-0.05, 0.25, 0.1};
  const double kappa = 1.0;
  const Mat3 want = green_free(r, r0, kappa);
  const double e1 =
      (magnetic_green_oracle(GreenPart::Free, r, r0, kappa, 4e-3) - want).max_abs();
  const double e2 =
      (magnetic_green_oracle(GreenPart::Free, r, r0, kappa, 2e-3) - want).max_abs();
  const double order = std::log2(e1 / e2);
  out.push_back(report("magnetic_oracle_convergence", std::abs(order - 4.0), 1.0));
}

VerificationReport check_scaling_invariance() {
  const double as[] = {0.5, 1.0, 2.0};
  const double n1s[] = {0.5, 1.0, 3.0};
  const double xs[] = {0.2, 0.5, 0.8};
  double worst = 0.0;
  for (double x : xs) {
    const double reference = casimir_stress(x).eigenvalue();
    for (double a : as)
      for (double n1 : n1s) {
        const MediumParams params{a, n1};
        const double invariant =
            casimir_stress(x * a, params).eigenvalue() * std::pow(a, 4) * n1;
        worst = std::max(worst, rel_err(invariant, reference));
      }
  }
  return report("scaling_invariance", worst, 1e-12);
}

VerificationReport check_force_sign() {
  double measured = std::abs(force_density(0.0));
  for (int i = 1; i <= 9; ++i) {
    const double f = force_density(0.1 * i);
    measured = std::max(measured, std::max(0.0, f));  // any non-negative value fails
  }
  return report("force_sign_sweep", measured, 0.0);
}

VerificationReport check_force_fd() {
  double worst = 0.0;
  for (int i = 0; i <= 17; ++i) {
    const double r = 0.05 + (0.9 - 0.05) * i / 17.0;
    FDConfig cfg;
    cfg.step_scale = 1e-3 * (1.0 - r * r);  // shrink toward the mirror
    const double fd = fd_derivative(
        [](double x) { return casimir_stress(x).eigenvalue(); }, r, 1, cfg);
    worst = std::max(worst, rel_err(force_density(r), fd));
  }
  return report("force_fd_consistency", worst, 1e-7);
}

void check_divergence(std::vector<VerificationReport>& out) {
  auto boundary_product = [](double r) {
    const double om = 1.0 - r * r;
    return casimir_stress(r).eigenvalue() * om * om * om * om;
  };
  const double want = -1.0 / (M_PI * M_PI * refractive_index(0.999));
  out.push_back(report("divergence_law", rel_err(boundary_product(0.999), want), 1e-6));

  // approach to the limit -1/pi^2: deviation must shrink with r -> 1
  auto limit_deviation = [&](double r) {
    return std::abs(boundary_product(r) * M_PI * M_PI + 1.0);
  };
  out.push_back(report("divergence_trend",
                       limit_deviation(0.9999) / limit_deviation(0.999), 1.0));
}

VerificationReport check_profile_determinism() {
  const auto once = make_profile({1.0, 1.0}, 0.0, 0.99, 200);
  const std::string a = format_profile(once, ProfileFormat::Csv);
  const std::string b = format_profile(make_profile({1.0, 1.0}, 0.0, 0.99, 200),
                                       ProfileFormat::Csv);
  return report("profile_determinism", a == b ? 0.0 : 1.0, 0.0);
}

VerificationReport check_pipeline_equality() {
  double worst = 0.0;
  for (int i = 0; i <= 33; ++i) {
    const double r = 0.99 * i / 33.0;
    const StressTensor via_tau = stress_from_tau(tau_regularized(r));
    const Mat3 want = casimir_stress(r).m;
    worst = std::max(worst, (via_tau.m - want).max_abs() / want.max_abs());
  }
  return report("pipeline_equality", worst, 1e-12);
}

VerificationReport check_wave_equation() {
  struct Sample {
    Point3 r, r0;
    double kappa;
  };
  const Sample samples[] = {{{0.3, 0.1, -0.2}, {-0.1, 0.4, 0.2}, 1.0},
                            {{-0.2, 0.25, 0.15}, {0.35, -0.1, -0.05}, 0.7}};
  FDConfig cfg;
  cfg.step_scale = 7.5e-3;

  double worst = 0.0;
  for (const auto& s : samples) {
    auto field = [&](const Vec3& p) { return green_free(p, s.r0, s.kappa); };
    auto curl_over_n = [&](const Vec3& p) {
      return fd_curl(field, p, cfg) * (1.0 / index_profile(norm(p)));
    };
    const Mat3 g = field(s.r);
    const Mat3 lhs = fd_curl(curl_over_n, s.r, cfg) +
                     g * (index_profile(norm(s.r)) * s.kappa * s.kappa);
    const double scale = (g * (index_profile(norm(s.r)) * s.kappa * s.kappa)).max_abs();
    worst = std::max(worst, lhs.max_abs() / scale);
  }
  return report("wave_equation_residual", worst, 1e-4);
}

}  // namespace

std::vector<VerificationReport> run_verification(VerifyLevel level, double quad_rel_tol) {
  QuadratureConfig quad;
  quad.rel_tol = quad_rel_tol;

  std::vector<VerificationReport> out;
  out.push_back(check_kappa_integral(quad));
  out.push_back(check_tau_quad_vs_closed(quad));
  out.push_back(check_stress_pipeline(quad));
  out.push_back(check_two_path_reflected());
  out.push_back(check_transversality());
  check_isotropy(quad, out);
  check_magnetic_oracle(out);
  out.push_back(check_scaling_invariance());
  out.push_back(check_force_sign());
  out.push_back(check_force_fd());
  check_divergence(out);
  out.push_back(check_pipeline_equality());
  out.push_back(check_profile_determinism());
  if (level == VerifyLevel::Full) out.push_back(check_wave_equation());
  return out;
}

}  // namespace fisheye
