// Command-line front end: radial stress profiles, point probes for the Green
// functions, and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fisheye/em_green.hpp"
#include "fisheye/profile.hpp"
#include "fisheye/scalar_green.hpp"
#include "fisheye/vacuum_stress.hpp"
#include "fisheye/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void print_g15(const char* label, double v) {
  std::printf("%s %.15g\n", label, v);
}

int run_profile(double a, double n1, double rmin, double rmax, int points,
                const std::string& format) {
  const fisheye::MediumParams params{a, n1};
  if (rmax < 0.0) rmax = 0.99 * a;  // default grid stops short of the mirror
  const auto rows = fisheye::make_profile(params, rmin, rmax, points);
  const auto fmt = format == "json-lines" ? fisheye::ProfileFormat::JsonLines
                                          : fisheye::ProfileFormat::Csv;
  std::fputs(fisheye::format_profile(rows, fmt).c_str(), stdout);
  return kExitOk;
}

int run_stress(double a, double n1, double r) {
  const fisheye::MediumParams params{a, n1};
  const double a4 = a * a * a * a;
  print_g15("r_over_a", r / a);
  print_g15("n", fisheye::refractive_index(r / a, params));
  print_g15("sigma_eigenvalue", fisheye::casimir_stress(r, params).eigenvalue() * a4);
  print_g15("force_density", fisheye::force_density(r, params) * a4 * a);
  return kExitOk;
}

int run_green(const double g[7], const std::string& part) {
  const fisheye::Point3 r{g[0], g[1], g[2]}, r0{g[3], g[4], g[5]};
  const double kappa = g[6];
  fisheye::Mat3 out;
  if (part == "reflected")
    out = fisheye::green_reflected(r, r0, kappa);
  else if (part == "total")
    out = fisheye::green_total(r, r0, kappa);
  else
    out = fisheye::green_free(r, r0, kappa);
  for (int i = 0; i < 3; ++i)  // + 0.0 normalizes negative zeros
    std::printf("%.15g %.15g %.15g\n", out(i, 0) + 0.0, out(i, 1) + 0.0, out(i, 2) + 0.0);
  return kExitOk;
}

int run_scalar(double r_prime, double kappa) {
  std::printf("%.15g\n", fisheye::scalar_D({r_prime, kappa}));
  return kExitOk;
}

int run_verify(const std::string& level, double quad_tol) {
  const auto lvl = level == "full" ? fisheye::VerifyLevel::Full : fisheye::VerifyLevel::Fast;
  const auto reports = fisheye::run_verification(lvl, quad_tol);
  bool all_pass = true;
  for (const auto& rep : reports) {
    all_pass = all_pass && rep.pass;
    std::printf("%s %-30s measured=%.3e tolerance=%.1e\n", rep.pass ? "PASS" : "FAIL",
                rep.check_name.c_str(), rep.measured_error, rep.tolerance);
  }
  std::printf("%s: %zu checks\n", all_pass ? "OK" : "FAILED", reports.size());
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir stress inside Maxwell's fish eye bounded by a perfect mirror"};
  app.require_subcommand(1);

  // profile
  double a = 1.0, n1 = 1.0, rmin = 0.0, rmax = -1.0;
  int points = 100;
  std::string format = "csv";
  auto* profile = app.add_subcommand(
      "profile",
      "radial table: r/a, n, stress eigenvalue (hbar c/a^4), force density (hbar c/a^5)");
  profile->add_option("--a", a, "mirror radius");
  profile->add_option("--n1", n1, "index at the mirror");
  profile->add_option("--rmin", rmin, "grid start (same units as a)");
  profile->add_option("--rmax", rmax, "grid end, default 0.99 a");
  profile->add_option("--points", points, "grid size (>= 2)");
  profile->add_option("--format", format, "csv or json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}));

  // stress
  double s_a = 1.0, s_n1 = 1.0, s_r = 0.0;
  auto* stress = app.add_subcommand("stress", "stress eigenvalue and force density at one radius");
  stress->add_option("a", s_a, "mirror radius")->required();
  stress->add_option("n1", s_n1, "index at the mirror")->required();
  stress->add_option("r", s_r, "radius (same units as a)")->required();

  // green
  double g[7] = {};
  std::string part = "free";
  auto* green = app.add_subcommand("green", "3x3 bi-tensor Green function (reduced units)");
  green->add_option("rx", g[0])->required();
  green->add_option("ry", g[1])->required();
  green->add_option("rz", g[2])->required();
  green->add_option("r0x", g[3])->required();
  green->add_option("r0y", g[4])->required();
  green->add_option("r0z", g[5])->required();
  green->add_option("kappa", g[6])->required();
  green->add_option("--part", part, "free, reflected or total")
      ->check(CLI::IsMember({"free", "reflected", "total"}));

  // scalar
  double sc_rp = 1.0, sc_kappa = 0.0;
  auto* scalar = app.add_subcommand("scalar", "conformal scalar Green function D(r', kappa)");
  scalar->add_option("r_prime", sc_rp)->required();
  scalar->add_option("kappa", sc_kappa)->required();

  // verify
  std::string level = "fast";
  double quad_tol = 1e-12;
  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  verify->add_option("--level", level, "fast or full (full adds wave-equation residuals)")
      ->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--tol", quad_tol, "quadrature relative tolerance used by the checks");

  try {
    app.parse(argc, argv);
    if (profile->parsed()) return run_profile(a, n1, rmin, rmax, points, format);
    if (stress->parsed()) return run_stress(s_a, s_n1, s_r);
    if (green->parsed()) return run_green(g, part);
    if (scalar->parsed()) return run_scalar(sc_rp, sc_kappa);
    if (verify->parsed()) return run_verify(level, quad_tol);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  } catch (const fisheye::QuadratureError& e) {
    std::fprintf(stderr, "quadrature failure: %s (best=%.15g, achieved error=%.3e)\n",
                 e.what(), e.best_estimate, e.achieved_error);
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
