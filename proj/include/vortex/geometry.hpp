#ifndef VORTEX_GEOMETRY_HPP
#define VORTEX_GEOMETRY_HPP

#include <Eigen/Dense>
#include <complex>

#include "vortex/system.hpp"

namespace vortex {

/// Rotation matrix for the axis-angle pair (Rodrigues). `axis` need not be
/// normalized; a zero axis gives the identity.
Eigen::Matrix3d axis_angle_rotation(const Vec3& axis, double angle);

/// Rotation by the angular-velocity vector omega over time t, i.e.
/// axis omega/|omega|, angle |omega| t.
Eigen::Matrix3d rotation_from_angular_velocity(const Vec3& omega, double t);

/// Some rotation taking the unit vector `from` to the unit vector `to`.
Eigen::Matrix3d rotation_between(const Vec3& from, const Vec3& to);

/// Upper-hemisphere chart: phi(z) = (Re z, Im z, sqrt(R^2 - |z|^2)).
/// Throws DomainError when |z| >= R.
Vec3 chart_to_sphere(Complex z, double R);

/// Inverse of chart_to_sphere; requires x3 > 0 (open upper hemisphere).
Complex chart_to_plane(const Vec3& x, double R);

}  // namespace vortex

#endif
