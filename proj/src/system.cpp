#include "vortex/system.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace vortex {

VortexSystem VortexSystem::sphere(double R, std::vector<double> gammas) {
  if (!(R > 0.0)) throw DomainError("sphere radius must be positive");
  if (gammas.empty()) throw DomainError("need at least one vortex");
  for (double g : gammas)
    if (g == 0.0) throw DomainError("vortex strengths must be nonzero");
  VortexSystem sys;
  sys.domain = Domain::Sphere;
  sys.radius = R;
  sys.strengths = std::move(gammas);
  return sys;
}

VortexSystem VortexSystem::plane(std::vector<double> gammas) {
  if (gammas.empty()) throw DomainError("need at least one vortex");
  for (double g : gammas)
    if (g == 0.0) throw DomainError("vortex strengths must be nonzero");
  VortexSystem sys;
  sys.domain = Domain::Plane;
  sys.strengths = std::move(gammas);
  return sys;
}

double VortexSystem::total_strength() const {
  return std::accumulate(strengths.begin(), strengths.end(), 0.0);
}

double min_pair_separation(const SphereState& s, double R) {
  double best = std::numeric_limits<double>::infinity();
  for (int m = 0; m < s.size(); ++m)
    for (int n = m + 1; n < s.size(); ++n) {
      double l2 = chord_sq(s.x[m], s.x[n], R);
      best = std::min(best, std::sqrt(std::max(l2, 0.0)));
    }
  return best;
}

double min_pair_separation(const PlanarState& s) {
  double best = std::numeric_limits<double>::infinity();
  for (int m = 0; m < s.size(); ++m)
    for (int n = m + 1; n < s.size(); ++n)
      best = std::min(best, std::abs(s.z[m] - s.z[n]));
  return best;
}

void check_state(const VortexSystem& sys, const SphereState& s,
                 double radius_tol) {
  if (sys.domain != Domain::Sphere)
    throw DomainError("sphere state passed to non-sphere system");
  if (s.size() != sys.size())
    throw DomainError("state size does not match system");
  for (const Vec3& x : s.x)
    if (std::abs(x.norm() - sys.radius) > radius_tol * sys.radius)
      throw DomainError("vortex is off the sphere");
  if (s.size() > 1 && min_pair_separation(s, sys.radius) <= 0.0)
    throw DomainError("coincident vortices");
}

void check_state(const VortexSystem& sys, const PlanarState& s) {
  if (sys.domain != Domain::Plane)
    throw DomainError("planar state passed to non-planar system");
  if (s.size() != sys.size())
    throw DomainError("state size does not match system");
  if (s.size() > 1 && min_pair_separation(s) <= 0.0)
    throw DomainError("coincident vortices");
}

}  // namespace vortex
