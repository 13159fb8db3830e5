#ifndef VORTEX_INTEGRATOR_HPP
#define VORTEX_INTEGRATOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "vortex/model.hpp"
#include "vortex/system.hpp"

namespace vortex {

enum class SplittingMethod { LieTrotter, Strang };

struct IntegratorConfig {
  double dt = 1e-3;
  SplittingMethod method = SplittingMethod::Strang;
  int record_every = 1;
  double collision_eps = kDefaultCollisionEps;
  // Deterministic pair ordering; empty means lexicographic (m,n), m<n.
  std::vector<std::pair<int, int>> pair_order;
};

template <class StateT>
struct Trajectory {
  std::vector<double> times;
  std::vector<StateT> states;
  std::vector<double> energy;
  std::vector<Vec3> momentum;  // sphere: (Jx,Jy,Jz); plane: (mu, Re nu, Im nu)
  long renormalizations = 0;   // sphere radius projections performed
};

template <class StateT>
struct IntegrationResult {
  Trajectory<StateT> trajectory;
  bool completed = true;
  long failed_step = -1;
  std::string error;
};

/// Exact two-vortex flow on the sphere: rigid rotation with angular velocity
/// (G1 x1 + G2 x2) / (2 pi R l^2). Conserves l, |x1|, |x2| and the pair
/// momentum exactly.
void pair_flow_sphere(Vec3& x1, Vec3& x2, double g1, double g2, double R,
                      double t, double eps_rel = kDefaultCollisionEps);

/// Exact two-vortex flow in the plane: the SE(2) one-parameter group with
/// theta_dot = (G1+G2)/(2 pi l^2) and the matching translational generator.
void pair_flow_plane(Complex& z1, Complex& z2, double g1, double g2, double t,
                     double eps_rel = kDefaultCollisionEps);

/// One splitting step. Sphere points are projected back to radius R only when
/// the radius drift exceeds 1e-13 R; `renorm_count` (if given) accumulates
/// the number of projections.
SphereState step(const VortexSystem& sys, const SphereState& s,
                 const IntegratorConfig& cfg, long* renorm_count = nullptr);
PlanarState step(const VortexSystem& sys, const PlanarState& s,
                 const IntegratorConfig& cfg, long* renorm_count = nullptr);

IntegrationResult<SphereState> integrate(const VortexSystem& sys,
                                         const SphereState& s0,
                                         const IntegratorConfig& cfg,
                                         long n_steps);
IntegrationResult<PlanarState> integrate(const VortexSystem& sys,
                                         const PlanarState& s0,
                                         const IntegratorConfig& cfg,
                                         long n_steps);

/// CSV export, 17 significant digits.
/// Sphere header: t, x1x,x1y,x1z, ..., H, Jx,Jy,Jz
/// Plane header:  t, z1re,z1im, ..., H, Jmu, Jnu_re, Jnu_im
std::string trajectory_csv(const Trajectory<SphereState>& traj);
std::string trajectory_csv(const Trajectory<PlanarState>& traj);

}  // namespace vortex

#endif
