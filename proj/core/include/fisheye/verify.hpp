#pragma once

// Self-verification suite: every analytic step of the stress pipeline is held
// against an independent numerical route (quadrature vs closed form, exact
// differentiation vs finite differences, image construction vs boundary
// condition). The CLI `verify` command and the acceptance suite both run
// these checks; pass/fail thresholds are fixed here, while `quad_rel_tol`
// only tunes the integrator.

#include <string>
#include <vector>

namespace fisheye {

enum class VerifyLevel { Fast, Full };

struct VerificationReport {
  std::string check_name;
  bool pass = false;
  double measured_error = 0.0;
  double tolerance = 0.0;
};

std::vector<VerificationReport> run_verification(VerifyLevel level,
                                                 double quad_rel_tol = 1e-12);

}  // namespace fisheye
