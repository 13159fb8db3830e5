#include "vortex/model.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI(0.0, 1.0);

void guard_pair(double separation, double eps, int m, int n) {
  if (separation < eps)
    throw CollisionError("vortex pair separation below collision threshold",
                         m, n);
}

}  // namespace

double hamiltonian(const VortexSystem& sys, const SphereState& s,
                   double eps_rel) {
  const double R = sys.radius;
  const double eps = eps_rel * R;
  double sum = 0.0;
  for (int m = 0; m < s.size(); ++m)
    for (int n = m + 1; n < s.size(); ++n) {
      double l2 = chord_sq(s.x[m], s.x[n], R);
      guard_pair(std::sqrt(std::max(l2, 0.0)), eps, m, n);
      sum += sys.strengths[m] * sys.strengths[n] * std::log(l2);
    }
  return sum / (4.0 * std::numbers::pi * R * R);
}

double hamiltonian(const VortexSystem& sys, const PlanarState& s,
                   double eps_rel) {
  double sum = 0.0;
  for (int m = 0; m < s.size(); ++m)
    for (int n = m + 1; n < s.size(); ++n) {
      double l2 = std::norm(s.z[n] - s.z[m]);
      guard_pair(std::sqrt(l2), eps_rel, m, n);
      sum += sys.strengths[m] * sys.strengths[n] * std::log(l2);
    }
  return -sum / (4.0 * std::numbers::pi);
}

Vec3 momentum(const VortexSystem& sys, const SphereState& s) {
  Vec3 j = Vec3::Zero();
  for (int n = 0; n < s.size(); ++n) j += sys.strengths[n] * s.x[n];
  return -j / sys.radius;
}

SE2Momentum momentum(const VortexSystem& sys, const PlanarState& s) {
  SE2Momentum j;
  for (int n = 0; n < s.size(); ++n) {
    j.mu -= sys.strengths[n] * 0.5 * std::norm(s.z[n]);
    j.nu -= sys.strengths[n] * kI * s.z[n];
  }
  return j;
}

Vec3 momentum_vec(const VortexSystem& sys, const SphereState& s) {
  return momentum(sys, s);
}

Vec3 momentum_vec(const VortexSystem& sys, const PlanarState& s) {
  return momentum(sys, s).as_vec3();
}

std::vector<Vec3> vector_field(const VortexSystem& sys, const SphereState& s,
                               double eps_rel) {
  const double R = sys.radius;
  const double eps = eps_rel * R;
  std::vector<Vec3> v(s.size(), Vec3::Zero());
  for (int m = 0; m < s.size(); ++m)
    for (int n = m + 1; n < s.size(); ++n) {
      double l2 = chord_sq(s.x[m], s.x[n], R);
      guard_pair(std::sqrt(std::max(l2, 0.0)), eps, m, n);
      Vec3 cross = s.x[m].cross(s.x[n]) / (kTwoPi * R * l2);
      v[n] += sys.strengths[m] * cross;
      v[m] -= sys.strengths[n] * cross;
    }
  return v;
}

std::vector<Complex> vector_field(const VortexSystem& sys,
                                  const PlanarState& s, double eps_rel) {
  std::vector<Complex> v(s.size(), Complex(0.0, 0.0));
  for (int m = 0; m < s.size(); ++m)
    for (int n = m + 1; n < s.size(); ++n) {
      Complex d = s.z[n] - s.z[m];
      double l2 = std::norm(d);
      guard_pair(std::sqrt(l2), eps_rel, m, n);
      Complex w = kI * d / (kTwoPi * l2);
      v[n] += sys.strengths[m] * w;
      v[m] -= sys.strengths[n] * w;
    }
  return v;
}

SphereObservable with_fd_gradient(std::function<double(const SphereState&)> f,
                                  double scale) {
  const double h = 1e-6 * scale;
  SphereObservable obs;
  obs.value = f;
  obs.gradient = [f, h](const SphereState& s) {
    std::vector<Vec3> g(s.size(), Vec3::Zero());
    SphereState probe = s;
    for (int n = 0; n < s.size(); ++n)
      for (int c = 0; c < 3; ++c) {
        probe.x[n][c] = s.x[n][c] + h;
        double fp = f(probe);
        probe.x[n][c] = s.x[n][c] - h;
        double fm = f(probe);
        probe.x[n][c] = s.x[n][c];
        g[n][c] = (fp - fm) / (2.0 * h);
      }
    return g;
  };
  return obs;
}

PlanarObservable with_fd_gradient(std::function<double(const PlanarState&)> f,
                                  double scale) {
  const double h = 1e-6 * scale;
  PlanarObservable obs;
  obs.value = f;
  obs.gradient = [f, h](const PlanarState& s) {
    std::vector<Complex> g(s.size(), Complex(0.0, 0.0));
    PlanarState probe = s;
    for (int n = 0; n < s.size(); ++n) {
      probe.z[n] = s.z[n] + h;
      double fxp = f(probe);
      probe.z[n] = s.z[n] - h;
      double fxm = f(probe);
      probe.z[n] = s.z[n] + kI * h;
      double fyp = f(probe);
      probe.z[n] = s.z[n] - kI * h;
      double fym = f(probe);
      probe.z[n] = s.z[n];
      g[n] = Complex((fxp - fxm) / (2.0 * h), (fyp - fym) / (2.0 * h));
    }
    return g;
  };
  return obs;
}

double poisson_bracket(const VortexSystem& sys, const SphereObservable& f,
                       const SphereObservable& g, const SphereState& s) {
  auto gf = f.gradient(s);
  auto gg = g.gradient(s);
  double sum = 0.0;
  for (int n = 0; n < s.size(); ++n)
    sum += (sys.radius / sys.strengths[n]) * s.x[n].dot(gf[n].cross(gg[n]));
  return sum;
}

double poisson_bracket(const VortexSystem& sys, const PlanarObservable& f,
                       const PlanarObservable& g, const PlanarState& s) {
  auto gf = f.gradient(s);
  auto gg = g.gradient(s);
  double sum = 0.0;
  for (int n = 0; n < s.size(); ++n)
    sum += (gf[n].imag() * gg[n].real() - gf[n].real() * gg[n].imag()) /
           sys.strengths[n];
  return sum;
}

PlanarObservable momentum_observable(const VortexSystem& sys,
                                     const SE2Algebra& xi) {
  PlanarObservable obs;
  obs.value = [sys, xi](const PlanarState& s) {
    SE2Momentum j = momentum(sys, s);
    return j.mu * xi.theta_dot + std::real(std::conj(j.nu) * xi.a_dot);
  };
  // J_xi = sum Gamma_n (-th |z|^2/2 - x a_y + y a_x)
  obs.gradient = [sys, xi](const PlanarState& s) {
    std::vector<Complex> g(s.size());
    for (int n = 0; n < s.size(); ++n) {
      double gn = sys.strengths[n];
      double x = s.z[n].real(), y = s.z[n].imag();
      g[n] = Complex(gn * (-xi.theta_dot * x - xi.a_dot.imag()),
                     gn * (-xi.theta_dot * y + xi.a_dot.real()));
    }
    return g;
  };
  return obs;
}

}  // namespace vortex
