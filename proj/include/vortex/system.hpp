#ifndef VORTEX_SYSTEM_HPP
#define VORTEX_SYSTEM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "vortex/errors.hpp"

namespace vortex {

using Vec3 = Eigen::Vector3d;
using Complex = std::complex<double>;

enum class Domain { Sphere, Plane };

/// Circulation strengths plus the domain they live on. Immutable after
/// construction; all dynamics modules take it by const reference.
struct VortexSystem {
  Domain domain = Domain::Plane;
  double radius = 1.0;  // meaningful only on the sphere
  std::vector<double> strengths;

  static VortexSystem sphere(double R, std::vector<double> gammas);
  static VortexSystem plane(std::vector<double> gammas);

  int size() const { return static_cast<int>(strengths.size()); }
  double scale() const { return domain == Domain::Sphere ? radius : 1.0; }
  double total_strength() const;
};

/// Positions of N vortices on the sphere of radius R, ambient coordinates.
struct SphereState {
  std::vector<Vec3> x;

  int size() const { return static_cast<int>(x.size()); }
};

/// Positions of N vortices in the plane.
struct PlanarState {
  std::vector<Complex> z;

  int size() const { return static_cast<int>(z.size()); }
};

// Chord length squared between two sphere points: l^2 = 2(R^2 - xm.xn).
inline double chord_sq(const Vec3& xm, const Vec3& xn, double R) {
  return 2.0 * (R * R - xm.dot(xn));
}

double min_pair_separation(const SphereState& s, double R);
double min_pair_separation(const PlanarState& s);

// Throws DomainError on radius / collision violations.
void check_state(const VortexSystem& sys, const SphereState& s,
                 double radius_tol = 1e-12);
void check_state(const VortexSystem& sys, const PlanarState& s);

}  // namespace vortex

#endif
