#include "vortex/geometry.hpp"

#include <cmath>

namespace vortex {

Eigen::Matrix3d axis_angle_rotation(const Vec3& axis, double angle) {
  double n = axis.norm();
  if (n == 0.0 || angle == 0.0) return Eigen::Matrix3d::Identity();
  return Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
}

Eigen::Matrix3d rotation_from_angular_velocity(const Vec3& omega, double t) {
  double n = omega.norm();
  if (n == 0.0) return Eigen::Matrix3d::Identity();
  return Eigen::AngleAxisd(n * t, omega / n).toRotationMatrix();
}

Eigen::Matrix3d rotation_between(const Vec3& from, const Vec3& to) {
  Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(from, to);
  return q.toRotationMatrix();
}

Vec3 chart_to_sphere(Complex z, double R) {
  double r2 = std::norm(z);
  if (r2 >= R * R) throw DomainError("chart point outside the open disc");
  return Vec3(z.real(), z.imag(), std::sqrt(R * R - r2));
}

Complex chart_to_plane(const Vec3& x, double R) {
  if (!(x.z() > 0.0)) throw DomainError("point not in the open upper hemisphere");
  (void)R;
  return Complex(x.x(), x.y());
}

}  // namespace vortex
