#include "fisheye/profile.hpp"

#include <cmath>
#include <cstdio>

#include "fisheye/vacuum_stress.hpp"

namespace fisheye {

namespace {

std::string fmt_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::vector<RadialProfileSample> make_profile(const MediumParams& params, double r_min,
                                              double r_max, int points) {
  params.validate();
  if (!(r_min >= 0.0) || !(r_max > r_min) || !(r_max < params.a))
    throw std::domain_error("make_profile: requires 0 <= r_min < r_max < a");
  if (points < 2) throw std::domain_error("make_profile: requires points >= 2");

  const double a4 = std::pow(params.a, 4);
  const double a5 = a4 * params.a;

  std::vector<RadialProfileSample> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double r = r_min + (r_max - r_min) * static_cast<double>(i) /
                                 static_cast<double>(points - 1);
    RadialProfileSample row;
    row.r_over_a = r / params.a;
    row.n = refractive_index(row.r_over_a, params);
    row.sigma_eigenvalue = casimir_stress(r, params).eigenvalue() * a4;
    row.force_density = force_density(r, params) * a5;
    rows.push_back(row);
  }
  return rows;
}

std::string format_profile(const std::vector<RadialProfileSample>& rows, ProfileFormat fmt) {
  std::string out;
  if (fmt == ProfileFormat::Csv) {
    out += kProfileCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
      out += fmt_g15(r.r_over_a) + "," + fmt_g15(r.n) + "," + fmt_g15(r.sigma_eigenvalue) +
             "," + fmt_g15(r.force_density) + "\n";
    }
    return out;
  }
  for (const auto& r : rows) {
    out += "{\"r_over_a\":" + fmt_g15(r.r_over_a) + ",\"n\":" + fmt_g15(r.n) +
           ",\"sigma_eigenvalue\":" + fmt_g15(r.sigma_eigenvalue) +
           ",\"force_density\":" + fmt_g15(r.force_density) + "}\n";
  }
  return out;
}

}  // namespace fisheye
