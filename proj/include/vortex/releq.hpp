#ifndef VORTEX_RELEQ_HPP
#define VORTEX_RELEQ_HPP

#include "vortex/model.hpp"
#include "vortex/system.hpp"

namespace vortex {

/// Ring sums over the (N-1)-st roots of unity:
///   mu_N = sum_k 1/(e^{-2 pi i k/N} - 1),  nu_N = sum_k 1/|e^{2 pi i k/N} - 1|^2,
/// with closed forms mu_N = -(N-1)/2 and nu_N = (N^2-1)/12.
struct PolygonCoefficients {
  double mu;
  double nu;
};

PolygonCoefficients polygon_coefficients(int N);

/// Zero-momentum polygonal relative equilibrium on the sphere: N-1 outer
/// vortices of strength Gamma1 = -Gamma/((N-1) cos alpha) at polar angle
/// alpha, central vortex of strength Gamma at R k. Vortex N (last index)
/// is the central one; the first outer vortex sits at azimuth 0.
struct SphereReleq {
  VortexSystem sys;
  SphereState state;
  Vec3 generator;        // xi_e, along k
  double lambda_outer;   // lambda_1 = ... = lambda_{N-1}
  double lambda_central; // lambda_N
  double alpha;
  double Gamma;
  int N;

  double R() const { return sys.radius; }
};

/// Planar transcription: central vortex Gamma at the origin, ring of N-1
/// vortices of strength -Gamma/(N-1) at radius alpha, rotating at
/// theta_dot = (N/(N-1)) Gamma/(4 pi alpha^2). Total strength is exactly 0.
struct PlanarReleq {
  VortexSystem sys;
  PlanarState state;
  double theta_dot;
  double alpha;  // ring radius
  double Gamma;
  int N;
};

SphereReleq build_sphere_releq(int N, double alpha, double Gamma, double R);
PlanarReleq build_planar_releq(int N, double alpha, double Gamma);

/// max_n | xdot_n - xi_e x x_n |  (resp. | zdot_n - i theta_dot z_n |).
double releq_residual(const SphereReleq& re);
double releq_residual(const PlanarReleq& re);

/// Multiplier in the unscaled normal form: lambda_tilde_m = -Gamma_m
/// lambda_m / (2 pi R^2); used by the stability module's constraint
/// curvature correction.
double lambda_tilde(const SphereReleq& re, int m);

/// Recover lambda_m for vortex m from the equilibrium equations directly;
/// equals lambda_outer (resp. lambda_central) for a valid releq.
double lambda_from_equations(const SphereReleq& re, int m);

/// Relative difference between the spherical rotation rate at opening angle
/// alpha and the planar rate at ring radius R sin alpha; O(alpha^2).
double sphere_to_plane_consistency(int N, double alpha, double Gamma,
                                   double R);

}  // namespace vortex

#endif
