#pragma once

// Radial profile emission: index, stress eigenvalue and radial force density
// on a uniform grid, as CSV or JSON lines. Output is plain "%.15g" formatting
// so repeated runs are byte-identical.

#include <string>
#include <vector>

#include "fisheye/medium.hpp"

namespace fisheye {

struct RadialProfileSample {
  double r_over_a = 0.0;
  double n = 0.0;                 // local index
  double sigma_eigenvalue = 0.0;  // units hbar c / a^4
  double force_density = 0.0;     // units hbar c / a^5
};

enum class ProfileFormat { Csv, JsonLines };

inline constexpr const char* kProfileCsvHeader = "r_over_a,n,sigma_eigenvalue,force_density";

// uniform grid in r over [r_min, r_max]; requires 0 <= r_min < r_max < a and
// points >= 2
std::vector<RadialProfileSample> make_profile(const MediumParams& params, double r_min,
                                              double r_max, int points);

std::string format_profile(const std::vector<RadialProfileSample>& rows, ProfileFormat fmt);

}  // namespace fisheye
