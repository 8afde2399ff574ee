#include "fisheye/mat3.hpp"

#include <algorithm>

namespace fisheye {

double determinant(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool is_rotation(const Mat3& r, double tol) {
  const Mat3 gram = r.transpose() * r - Mat3::identity();
  if (gram.max_abs() > tol) return false;
  return std::abs(determinant(r) - 1.0) <= tol;
}

Mat3 rotate_tensor(const Mat3& t, const Mat3& r) {
  if (!is_rotation(r))
    throw std::invalid_argument("rotate_tensor: R is not a proper rotation");
  return r * t * r.transpose();
}

Mat3 rotation_about(const Vec3& axis, double angle) {
  const Vec3 u = normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 m = Mat3::identity() * c + Mat3::outer(u, u) * (1.0 - c);
  // + s [u]_x
  m(0, 1) += -s * u.z;
  m(0, 2) += s * u.y;
  m(1, 0) += s * u.z;
  m(1, 2) += -s * u.x;
  m(2, 0) += -s * u.y;
  m(2, 1) += s * u.x;
  return m;
}

std::array<double, 3> eigenvalues_symmetric(const Mat3& m) {
  const double p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
  if (p1 == 0.0) {
    std::array<double, 3> ev{m(0, 0), m(1, 1), m(2, 2)};
    std::sort(ev.begin(), ev.end());
    return ev;
  }
  const double q = m.trace() / 3.0;
  const double p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) +
                    (m(2, 2) - q) * (m(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  Mat3 b = (m - Mat3::identity() * q) * (1.0 / p);
  double r = determinant(b) / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> ev{e1, e2, e3};
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace fisheye
