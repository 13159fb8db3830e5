#include "vortex/releq.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

}  // namespace

PolygonCoefficients polygon_coefficients(int N) {
  if (N < 2) throw DomainError("polygon coefficients need N >= 2");
  Complex mu_sum(0.0, 0.0);
  double nu_sum = 0.0;
  for (int k = 1; k < N; ++k) {
    Complex w = std::polar(1.0, 2.0 * kPi * k / N);
    mu_sum += 1.0 / (std::conj(w) - 1.0);
    nu_sum += 1.0 / std::norm(w - 1.0);
  }
  PolygonCoefficients c{mu_sum.real(), nu_sum};
  // closed forms, kept as a construction-time sanity check
  double mu_closed = -0.5 * (N - 1);
  double nu_closed = (static_cast<double>(N) * N - 1.0) / 12.0;
  if (std::abs(c.mu - mu_closed) > 1e-10 ||
      std::abs(c.nu - nu_closed) > 1e-10 ||
      std::abs(mu_sum.imag()) > 1e-12)
    throw DomainError("polygon coefficient sums disagree with closed forms");
  return c;
}

SphereReleq build_sphere_releq(int N, double alpha, double Gamma, double R) {
  if (N < 3) throw DomainError("polygonal releq needs N >= 3");
  if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("alpha must be in (0, pi)");
  if (Gamma == 0.0) throw DomainError("central strength must be nonzero");
  if (!(R > 0.0)) throw DomainError("radius must be positive");
  double ca = std::cos(alpha), sa = std::sin(alpha);
  if (std::abs(ca) < 1e-12)
    throw DomainError("Gamma1 diverges as alpha approaches pi/2");

  int ring = N - 1;
  double Gamma1 = -Gamma / (ring * ca);
  std::vector<double> strengths(N, Gamma1);
  strengths[N - 1] = Gamma;

  SphereState state;
  state.x.resize(N);
  for (int k = 0; k < ring; ++k) {
    double phi = 2.0 * kPi * k / ring;
    state.x[k] = R * Vec3(sa * std::cos(phi), sa * std::sin(phi), ca);
  }
  state.x[N - 1] = Vec3(0.0, 0.0, R);

  SphereReleq re;
  re.sys = VortexSystem::sphere(R, strengths);
  re.state = state;
  re.alpha = alpha;
  re.Gamma = Gamma;
  re.N = N;
  re.lambda_outer = -Gamma / (R * R * ca * sa * sa) *
                    (static_cast<double>(N - 2) * (N - 6)) / (12.0 * ring);
  re.lambda_central =
      -Gamma / (R * R * sa * sa) * (ca + 0.5 * N / ring);
  re.generator =
      Vec3(0.0, 0.0, Gamma / (4.0 * kPi * R * R * sa * sa) * (1.0 / ring + ca));
  return re;
}

PlanarReleq build_planar_releq(int N, double alpha, double Gamma) {
  if (N < 3) throw DomainError("polygonal releq needs N >= 3");
  if (!(alpha > 0.0)) throw DomainError("ring radius must be positive");
  if (Gamma == 0.0) throw DomainError("central strength must be nonzero");

  int ring = N - 1;
  std::vector<double> strengths(N, -Gamma / ring);
  strengths[N - 1] = Gamma;

  PlanarState state;
  state.z.resize(N);
  for (int k = 0; k < ring; ++k)
    state.z[k] = std::polar(alpha, 2.0 * kPi * k / ring);
  state.z[N - 1] = Complex(0.0, 0.0);

  PlanarReleq re;
  re.sys = VortexSystem::plane(strengths);
  re.state = state;
  re.alpha = alpha;
  re.Gamma = Gamma;
  re.N = N;
  re.theta_dot =
      (static_cast<double>(N) / ring) * Gamma / (4.0 * kPi * alpha * alpha);
  return re;
}

double releq_residual(const SphereReleq& re) {
  auto field = vector_field(re.sys, re.state);
  double worst = 0.0;
  for (int n = 0; n < re.N; ++n)
    worst = std::max(worst,
                     (field[n] - re.generator.cross(re.state.x[n])).norm());
  return worst;
}

double releq_residual(const PlanarReleq& re) {
  auto field = vector_field(re.sys, re.state);
  double worst = 0.0;
  for (int n = 0; n < re.N; ++n)
    worst = std::max(worst,
                     std::abs(field[n] - kI * re.theta_dot * re.state.z[n]));
  return worst;
}

double lambda_tilde(const SphereReleq& re, int m) {
  double lambda = (m == re.N - 1) ? re.lambda_central : re.lambda_outer;
  return -re.sys.strengths[m] * lambda / (2.0 * kPi * re.R() * re.R());
}

double lambda_from_equations(const SphereReleq& re, int m) {
  // sum_{n != m} Gamma_n x_n / l_nm^2 = lambda_m x_m + 2 pi R xi_e
  const double R = re.R();
  Vec3 lhs = Vec3::Zero();
  for (int n = 0; n < re.N; ++n) {
    if (n == m) continue;
    lhs += re.sys.strengths[n] * re.state.x[n] /
           chord_sq(re.state.x[n], re.state.x[m], R);
  }
  Vec3 rhs_rest = lhs - 2.0 * kPi * R * re.generator;
  return rhs_rest.dot(re.state.x[m]) / (R * R);
}

double sphere_to_plane_consistency(int N, double alpha, double Gamma,
                                   double R) {
  SphereReleq sp = build_sphere_releq(N, alpha, Gamma, R);
  PlanarReleq pl = build_planar_releq(N, R * std::sin(alpha), Gamma);
  double rate_sp = sp.generator.z();
  return std::abs(rate_sp - pl.theta_dot) / std::abs(pl.theta_dot);
}

}  // namespace vortex
