#ifndef VORTEX_STABILITY_HPP
#define VORTEX_STABILITY_HPP

#include <Eigen/Dense>

#include "vortex/releq.hpp"

namespace vortex {

enum class Verdict { FormallyStable, Indefinite, Degenerate };

struct StabilityReport {
  Verdict verdict = Verdict::Degenerate;
  Eigen::VectorXd eigenvalues;  // spectrum of the projected Hessian, ascending
  int subspace_dim = 0;
  double tolerance_used = 0.0;
};

/// Hessian of the augmented Hamiltonian H - J_{xi_e} - sum_m (ltilde_m/2)
/// |x_m|^2 at the releq, on ambient (R^3)^N. The momentum term is linear, so
/// only the interaction Hessian and the constraint curvature contribute.
Eigen::MatrixXd augmented_hessian(const SphereReleq& re);

/// Orthonormal basis of the admissible subspace: tangent to the position
/// spheres, inside ker dJ, orthogonal to the rotation orbit. Columns span a
/// (2N-6)-dimensional space; throws DegenerateSubspace on unexpected rank.
Eigen::MatrixXd admissible_subspace(const SphereReleq& re);

/// Energy-momentum test: definiteness of the augmented Hessian restricted to
/// the admissible subspace. The relative tolerance separates Degenerate from
/// a definite or indefinite call.
StabilityReport formal_stability(const SphereReleq& re, double tol = 1e-9);

/// Locates the opening angle where the projected Hessian loses definiteness,
/// by bisection on the signed margin min_i s lambda_i (s the sign of the
/// dominant eigenvalue). Resolves to |delta alpha| <= 1e-4; throws
/// NoSignChange if both endpoints give the same verdict.
double critical_alpha(int N, double alpha_lo, double alpha_hi);

/// Ratio of the squared group frequency to the squared reduced frequency for
/// the four-vortex ring: 1 - 3(9cos^2 a + 4cos a + 3)sin^2 a /
/// (3cos^2 a + 2cos a + 3). Never equal to 1 on (0, pi).
double resonance_ratio(double alpha);

/// Jacobian of the rotating-frame vector field at the releq, by fourth-order
/// central differences in ambient coordinates (step 1e-3 * scale). 3N x 3N on
/// the sphere, 2N x 2N in the plane with coordinates (x_n, y_n).
Eigen::MatrixXd linearization(const SphereReleq& re);
Eigen::MatrixXd linearization(const PlanarReleq& re);

}  // namespace vortex

#endif
