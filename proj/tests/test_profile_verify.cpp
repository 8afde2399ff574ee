#include <doctest.h>

#include <algorithm>

#include "fisheye/profile.hpp"
#include "fisheye/verify.hpp"
#include "test_support.hpp"

using namespace fisheye;
using testsup::rel_err;

TEST_CASE("make_profile: rows and invariants") {
  const auto rows = make_profile({1.0, 1.0}, 0.0, 0.5, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].r_over_a == 0.0);
  CHECK(rows[0].n == 2.0);
  CHECK(rel_err(rows[0].sigma_eigenvalue, -0.05066059182116889) < 1e-14);
  CHECK(rows[0].force_density == 0.0);

  CHECK(rows[2].r_over_a == 0.5);
  CHECK(rows[2].n == 1.6);
  CHECK(rel_err(rows[2].sigma_eigenvalue, -0.2001406096638771) < 1e-14);
  CHECK(rel_err(rows[2].force_density, -1.2275290726051127) < 1e-12);

  const auto fine = make_profile({1.0, 1.0}, 0.0, 0.99, 200);
  for (std::size_t i = 0; i < fine.size(); ++i) {
    CHECK(fine[i].sigma_eigenvalue < 0.0);
    CHECK(fine[i].force_density <= 0.0);
    if (i > 0) CHECK(fine[i].n < fine[i - 1].n);
  }
}

TEST_CASE("make_profile: columns are in units of hbar c/a^4 and hbar c/a^5") {
  // at fixed r/a the emitted numbers depend on n1 only
  const auto unit = make_profile({1.0, 1.0}, 0.5, 0.6, 2);
  const auto big = make_profile({2.0, 1.0}, 1.0, 1.2, 2);
  CHECK(unit[0].r_over_a == big[0].r_over_a);
  CHECK(rel_err(big[0].sigma_eigenvalue, unit[0].sigma_eigenvalue) < 1e-14);
  CHECK(rel_err(big[0].force_density, unit[0].force_density) < 1e-14);

  const auto dense = make_profile({1.0, 2.0}, 0.5, 0.6, 2);
  CHECK(rel_err(dense[0].sigma_eigenvalue, unit[0].sigma_eigenvalue / 2.0) < 1e-14);
}

TEST_CASE("make_profile: usage errors") {
  CHECK_THROWS_AS(make_profile({1.0, 1.0}, 0.0, 1.0, 10), std::domain_error);
  CHECK_THROWS_AS(make_profile({1.0, 1.0}, 0.0, 1.5, 10), std::domain_error);
  CHECK_THROWS_AS(make_profile({1.0, 1.0}, 0.5, 0.25, 10), std::domain_error);
  CHECK_THROWS_AS(make_profile({1.0, 1.0}, -0.1, 0.5, 10), std::domain_error);
  CHECK_THROWS_AS(make_profile({1.0, 1.0}, 0.0, 0.5, 1), std::domain_error);
}

TEST_CASE("format_profile: exact header, deterministic bytes") {
  const auto rows = make_profile({1.0, 1.0}, 0.0, 0.5, 3);
  const std::string csv = format_profile(rows, ProfileFormat::Csv);
  CHECK(csv.rfind("r_over_a,n,sigma_eigenvalue,force_density\n", 0) == 0);
  CHECK(csv.find("0,2,-0.0506605918211689,0\n") != std::string::npos);
  CHECK(csv == format_profile(rows, ProfileFormat::Csv));

  const std::string jsonl = format_profile(rows, ProfileFormat::JsonLines);
  CHECK(jsonl.rfind("{\"r_over_a\":0,\"n\":2,", 0) == 0);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 3);
}

TEST_CASE("verification suite: all fast checks pass and cover the pipeline") {
  const auto reports = run_verification(VerifyLevel::Fast);
  const char* required[] = {"kappa_integral_closed_form", "tau_quadrature_vs_closed",
                            "stress_pipeline_quadrature", "reflected_two_path",
                            "mirror_transversality",      "stress_isotropy",
                            "tau_el_eq_tau_mag",          "scaling_invariance",
                            "force_sign_sweep",           "pipeline_equality"};
  for (const char* name : required) {
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [&](const auto& r) { return r.check_name == name; });
    REQUIRE_MESSAGE(it != reports.end(), name);
    CHECK_MESSAGE(it->pass, it->check_name, " measured=", it->measured_error);
  }
  for (const auto& r : reports) {
    CHECK_MESSAGE(r.pass, r.check_name, " measured=", r.measured_error);
    CHECK(r.pass == (r.measured_error <= r.tolerance));
  }
  // wave-equation residuals belong to the full level only
  CHECK(std::none_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.check_name == "wave_equation_residual"; }));

  const auto full = run_verification(VerifyLevel::Full);
  CHECK(std::any_of(full.begin(), full.end(),
                    [](const auto& r) { return r.check_name == "wave_equation_residual" && r.pass; }));
}
