#ifndef VORTEX_MODEL_HPP
#define VORTEX_MODEL_HPP

#include <functional>
#include <vector>

#include "vortex/se2.hpp"
#include "vortex/system.hpp"

namespace vortex {

/// Guard for the logarithmic singularity: pair separations below
/// eps_rel * domain scale raise CollisionError.
inline constexpr double kDefaultCollisionEps = 1e-12;

double hamiltonian(const VortexSystem& sys, const SphereState& s,
                   double eps_rel = kDefaultCollisionEps);
double hamiltonian(const VortexSystem& sys, const PlanarState& s,
                   double eps_rel = kDefaultCollisionEps);

/// so(3)* momentum: -(1/R) sum Gamma_n x_n.
Vec3 momentum(const VortexSystem& sys, const SphereState& s);
/// se(2)* momentum: -(sum Gamma_n (|z_n|^2/2, i z_n)).
SE2Momentum momentum(const VortexSystem& sys, const PlanarState& s);

/// Packs either momentum as an R^3 vector (plane: (mu, Re nu, Im nu)).
Vec3 momentum_vec(const VortexSystem& sys, const SphereState& s);
Vec3 momentum_vec(const VortexSystem& sys, const PlanarState& s);

/// xdot_n = (1/2 pi R) sum_{m != n} Gamma_m (x_m cross x_n) / l_mn^2.
std::vector<Vec3> vector_field(const VortexSystem& sys, const SphereState& s,
                               double eps_rel = kDefaultCollisionEps);
/// zdot_n = (i/2 pi) sum_{m != n} Gamma_m (z_n - z_m) / |z_n - z_m|^2.
std::vector<Complex> vector_field(const VortexSystem& sys,
                                  const PlanarState& s,
                                  double eps_rel = kDefaultCollisionEps);

/// Scalar observable with its ambient gradient, for Poisson brackets.
struct SphereObservable {
  std::function<double(const SphereState&)> value;
  std::function<std::vector<Vec3>(const SphereState&)> gradient;
};

struct PlanarObservable {
  std::function<double(const PlanarState&)> value;
  // gradient packed as df/dx_n + i df/dy_n
  std::function<std::vector<Complex>(const PlanarState&)> gradient;
};

/// Central-difference gradient fallback, step 1e-6 * scale.
SphereObservable with_fd_gradient(std::function<double(const SphereState&)> f,
                                  double scale);
PlanarObservable with_fd_gradient(std::function<double(const PlanarState&)> f,
                                  double scale);

/// Weighted symplectic bracket of two observables. Orientation is chosen so
/// that the momentum commutation identity
/// {J_xi, J_eta} = J_{[xi,eta]} - Sigma(xi,eta) holds; the time derivative of
/// an observable along the flow is then {H, f}.
double poisson_bracket(const VortexSystem& sys, const SphereObservable& f,
                       const SphereObservable& g, const SphereState& s);
/// {f,g} = sum_n (1/Gamma_n) (f_y g_x - f_x g_y)_n.
double poisson_bracket(const VortexSystem& sys, const PlanarObservable& f,
                       const PlanarObservable& g, const PlanarState& s);

/// The observable z -> <J^pl(z), xi>, with analytic gradient.
PlanarObservable momentum_observable(const VortexSystem& sys,
                                     const SE2Algebra& xi);

}  // namespace vortex

#endif
