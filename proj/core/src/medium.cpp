#include "fisheye/medium.hpp"

namespace fisheye {

double refractive_index(double r, const MediumParams& params) {
  params.validate();
  if (r < 0.0) throw std::domain_error("refractive_index: radius must be >= 0");
  return 2.0 * params.n1 / (1.0 + r * r);
}

double mobius_separation(const Point3& r, const Point3& r0) {
  if (!std::isfinite(norm(r)) || !std::isfinite(norm(r0)))
    throw std::domain_error("mobius_separation: points must be finite");
  const double radicand = 1.0 + 2.0 * dot(r, r0) + dot(r, r) * dot(r0, r0);
  // zero only when r0 is antipodal to the image of r (impossible inside the ball)
  if (radicand <= 0.0)
    throw std::domain_error("mobius_separation: degenerate point pair (radicand <= 0)");
  return norm(r - r0) / std::sqrt(radicand);
}

double on_axis_separation(double r) {
  if (r <= 0.0)
    throw std::domain_error("on_axis_separation: requires r > 0 (image of the center is at infinity)");
  if (r >= 1.0) throw std::domain_error("on_axis_separation: requires r < 1");
  return 0.5 * (1.0 / r - r);
}

Point3 image_point(const Point3& r) {
  const double r2 = dot(r, r);
  if (r2 == 0.0) throw std::domain_error("image_point: undefined at the center");
  return r / r2;
}

BiTensor3 inversion_jacobian(const Point3& r) {
  const double r2 = dot(r, r);
  if (r2 == 0.0) throw std::domain_error("inversion_jacobian: undefined at the center");
  return Mat3::identity() * (1.0 / r2) - Mat3::outer(r, r) * (2.0 / (r2 * r2));
}

}  // namespace fisheye
