#include "vortex/stability.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Relative vector field on the sphere: xdot - xi_e x x.
std::vector<Vec3> relative_field(const SphereReleq& re, const SphereState& s) {
  std::vector<Vec3> v = vector_field(re.sys, s);
  for (int n = 0; n < s.size(); ++n) v[n] -= re.generator.cross(s.x[n]);
  return v;
}

std::vector<Complex> relative_field(const PlanarReleq& re,
                                    const PlanarState& s) {
  std::vector<Complex> v = vector_field(re.sys, s);
  const Complex rot(0.0, re.theta_dot);
  for (int n = 0; n < s.size(); ++n) v[n] -= rot * s.z[n];
  return v;
}

}  // namespace

Eigen::MatrixXd augmented_hessian(const SphereReleq& re) {
  const int N = re.N;
  const double R = re.R();
  const double c = 1.0 / (kFourPi * R * R);
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(3 * N, 3 * N);
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      if (n == m) continue;
      double gg = c * re.sys.strengths[m] * re.sys.strengths[n];
      const Vec3& xm = re.state.x[m];
      const Vec3& xn = re.state.x[n];
      double l2 = chord_sq(xm, xn, R);
      // d^2/dx_m dx_n and d^2/dx_m^2 of log l^2 for the pair (m,n)
      if (n > m) {
        Eigen::Matrix3d off = -2.0 / l2 * Eigen::Matrix3d::Identity() -
                              4.0 / (l2 * l2) * xn * xm.transpose();
        G.block<3, 3>(3 * m, 3 * n) = gg * off;
        G.block<3, 3>(3 * n, 3 * m) = gg * off.transpose();
      }
      G.block<3, 3>(3 * m, 3 * m) -=
          gg * 4.0 / (l2 * l2) * xn * xn.transpose();
    }
  for (int m = 0; m < N; ++m)
    G.block<3, 3>(3 * m, 3 * m) -=
        lambda_tilde(re, m) * Eigen::Matrix3d::Identity();
  return G;
}

Eigen::MatrixXd admissible_subspace(const SphereReleq& re) {
  const int N = re.N;
  // Rows of C: sphere tangency (N), momentum level (3), rotation orbit (3).
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(N + 6, 3 * N);
  for (int n = 0; n < N; ++n)
    C.block<1, 3>(n, 3 * n) = re.state.x[n].transpose();
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < 3; ++c)
      C(N + c, 3 * n + c) = re.sys.strengths[n];
  for (int i = 0; i < 3; ++i) {
    Vec3 e = Vec3::Unit(i);
    for (int n = 0; n < N; ++n)
      C.block<1, 3>(N + 3 + i, 3 * n) = e.cross(re.state.x[n]).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
  double smax = svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-10 * smax) ++rank;
  int expected = std::min(N + 6, 3 * N);
  if (rank != expected)
    throw DegenerateSubspace("admissible subspace has unexpected rank");
  return svd.matrixV().rightCols(3 * N - rank);
}

StabilityReport formal_stability(const SphereReleq& re, double tol) {
  StabilityReport rep;
  rep.tolerance_used = tol;
  Eigen::MatrixXd G = augmented_hessian(re);
  Eigen::MatrixXd B = admissible_subspace(re);
  rep.subspace_dim = static_cast<int>(B.cols());
  if (rep.subspace_dim == 0) {
    rep.verdict = Verdict::FormallyStable;
    return rep;
  }
  Eigen::MatrixXd A = (B.transpose() * G * B).selfadjointView<Eigen::Lower>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  rep.eigenvalues = es.eigenvalues();
  double norm_g =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(G, Eigen::EigenvaluesOnly)
          .eigenvalues()
          .cwiseAbs()
          .maxCoeff();
  double amin = rep.eigenvalues.cwiseAbs().minCoeff();
  if (amin < tol * norm_g) {
    rep.verdict = Verdict::Degenerate;
  } else if (rep.eigenvalues.minCoeff() > 0.0 ||
             rep.eigenvalues.maxCoeff() < 0.0) {
    rep.verdict = Verdict::FormallyStable;
  } else {
    rep.verdict = Verdict::Indefinite;
  }
  return rep;
}

namespace {

// Signed definiteness margin: positive when all projected eigenvalues share
// the sign of the dominant one.
double stability_margin(int N, double alpha) {
  StabilityReport rep = formal_stability(build_sphere_releq(N, alpha, 1.0, 1.0));
  const Eigen::VectorXd& ev = rep.eigenvalues;
  int idx;
  ev.cwiseAbs().maxCoeff(&idx);
  double s = ev(idx) > 0.0 ? 1.0 : -1.0;
  return (s * ev.array()).minCoeff();
}

}  // namespace

double critical_alpha(int N, double alpha_lo, double alpha_hi) {
  double ga = stability_margin(N, alpha_lo);
  double gb = stability_margin(N, alpha_hi);
  if (ga * gb >= 0.0)
    throw NoSignChange("definiteness margin has one sign on the bracket");
  while (alpha_hi - alpha_lo > 1e-4) {
    double mid = 0.5 * (alpha_lo + alpha_hi);
    double gm = stability_margin(N, mid);
    if (gm == 0.0) return mid;
    if (ga * gm < 0.0) {
      alpha_hi = mid;
    } else {
      alpha_lo = mid;
      ga = gm;
    }
  }
  return 0.5 * (alpha_lo + alpha_hi);
}

double resonance_ratio(double alpha) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi))
    throw DomainError("opening angle must lie in (0, pi)");
  double c = std::cos(alpha), s2 = std::sin(alpha) * std::sin(alpha);
  return 1.0 - 3.0 * (9.0 * c * c + 4.0 * c + 3.0) * s2 /
                   (3.0 * c * c + 2.0 * c + 3.0);
}

// Fourth-order differences keep the Jacobian error near 1e-13; the zero
// eigenvalues at a releq carry nilpotent blocks, and an error eps there
// scatters numerical eigenvalues by sqrt(eps).
Eigen::MatrixXd linearization(const SphereReleq& re) {
  const int N = re.N;
  const double h = 1e-3 * re.R();
  Eigen::MatrixXd J(3 * N, 3 * N);
  SphereState probe = re.state;
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < 3; ++c) {
      Eigen::VectorXd col = Eigen::VectorXd::Zero(3 * N);
      for (auto [mult, weight] : {std::pair{1.0, 8.0},
                                  std::pair{-1.0, -8.0},
                                  std::pair{2.0, -1.0},
                                  std::pair{-2.0, 1.0}}) {
        probe.x[n][c] = re.state.x[n][c] + mult * h;
        auto v = relative_field(re, probe);
        for (int m = 0; m < N; ++m)
          col.segment<3>(3 * m) += weight * v[m];
      }
      probe.x[n][c] = re.state.x[n][c];
      J.col(3 * n + c) = col / (12.0 * h);
    }
  return J;
}

Eigen::MatrixXd linearization(const PlanarReleq& re) {
  const int N = re.N;
  const double h = 1e-3;
  Eigen::MatrixXd J(2 * N, 2 * N);
  PlanarState probe = re.state;
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < 2; ++c) {
      Complex dz = c == 0 ? Complex(h, 0.0) : Complex(0.0, h);
      Eigen::VectorXd col = Eigen::VectorXd::Zero(2 * N);
      for (auto [mult, weight] : {std::pair{1.0, 8.0},
                                  std::pair{-1.0, -8.0},
                                  std::pair{2.0, -1.0},
                                  std::pair{-2.0, 1.0}}) {
        probe.z[n] = re.state.z[n] + mult * dz;
        auto v = relative_field(re, probe);
        for (int m = 0; m < N; ++m) {
          col(2 * m) += weight * v[m].real();
          col(2 * m + 1) += weight * v[m].imag();
        }
      }
      probe.z[n] = re.state.z[n];
      J.col(2 * n + c) = col / (12.0 * h);
    }
  return J;
}

}  // namespace vortex
