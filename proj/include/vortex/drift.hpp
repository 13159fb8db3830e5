#ifndef VORTEX_DRIFT_HPP
#define VORTEX_DRIFT_HPP

#include <Eigen/Dense>
#include <vector>

#include "vortex/integrator.hpp"
#include "vortex/releq.hpp"

namespace vortex {

/// Nilpotent part of the linearization at the releq, realized as a diagonal
/// bilinear form on the dual algebra. j1 = j2 always; the signed values are
/// stored (j1 < 0 for the four-vortex ring).
struct DriftForm {
  Domain domain;
  int N;
  double alpha;
  double R;
  double j1, j2, j3;
};

/// Closed forms for the spherical ring, N in {3, 4}.
DriftForm drift_form_sphere(int N, double alpha, double R);

/// Planar counterparts: N=3 diag(-3/4, 0, 0)/(2 pi a^4),
/// N=4 diag(-4/3, 3/4, 3/4)/(2 pi a^2).
Eigen::Matrix3d drift_form_plane(int N, double alpha);

/// Drift-system mass m_alpha = -1/(j1 R^2); negative for the three-ring.
double mass_sphere(int N, double alpha, double R);

/// Planar mass; the three-ring is infinitely heavy, flagged rather than
/// returned as an overflow.
struct PlanarMass {
  double value = 0.0;
  bool infinite = false;
};
PlanarMass mass_plane(int N, double alpha);

/// Central-vortex displacement angle and ring re-opening realizing a given
/// momentum change, with the smallness diagnostics of the construction.
struct PerturbationSpec {
  double dmu1 = 0.0, dmu3 = 0.0;
  double delta = 0.0, dalpha = 0.0;
  double delta_ratio = 0.0, dalpha_ratio = 0.0;  // vs the opening angle
  bool warning = false;  // set when either ratio reaches 0.1
};

struct Perturbation {
  PerturbationSpec spec;
  SphereState state;
  Vec3 dmu;
};

/// Moves the central vortex off the pole and re-opens the ring so that the
/// momentum of the new state is exactly dmu. The construction works in the
/// frame where dmu = (dmu1, 0, dmu3); other directions are reached by an
/// azimuthal rotation applied afterwards. Throws NoSolution when dmu is out
/// of range of the construction.
Perturbation build_perturbation(const SphereReleq& re, const Vec3& dmu);

/// First-order prediction for the perturbed ring: the location rotates
/// rigidly about dmu with angular velocity j1 * dmu, equivalently a charged
/// particle of mass m and charge q on the sphere in a monopole field y/R^3.
struct DriftPrediction {
  Vec3 axis;              // unit dmu
  Vec3 angular_velocity;  // j1 * dmu
  double mass = 0.0;
  double charge = 0.0;  // -dmu . k
  Vec3 y0, v0;
  double R = 1.0;

  Vec3 position(double t) const;  // closed-form circle
};

DriftPrediction predict_drift(const SphereReleq& re, const Vec3& dmu);

/// RK4 solution of the monopole system itself, renormalized to the sphere;
/// returns positions at steps+1 equally spaced times.
std::vector<Vec3> integrate_drift(const DriftPrediction& pred, double duration,
                                  int steps);

enum class PreqLocationMethod { MeanOfVortices, CentralVortex };

/// Representative point of a perturbed ring: normalized vortex mean
/// (default) or the central vortex (last index).
Vec3 preq_location(const VortexSystem& sys, const SphereState& s,
                   PreqLocationMethod method = PreqLocationMethod::MeanOfVortices);

/// Signed rotation rate of the preq location about the dmu axis, from the
/// unwrapped azimuth: least-squares slope per window plus the overall mean.
/// Positive is counterclockwise about +dmu.
struct DriftRateEstimate {
  double mean_rate = 0.0;
  double dispersion = 0.0;  // standard deviation of window rates
  std::vector<double> window_rates;
};

DriftRateEstimate estimate_drift_rate(
    const VortexSystem& sys, const Trajectory<SphereState>& traj,
    const Vec3& dmu, int n_windows = 50,
    PreqLocationMethod method = PreqLocationMethod::MeanOfVortices);

/// Simulation cross-check of the drift form: perturbs the releq at several
/// momentum sizes, measures the drift rates, extrapolates rate/|dmu| to
/// zero, and returns the relative discrepancy against |j1|.
double drift_form_crosscheck(const SphereReleq& re);

}  // namespace vortex

#endif
