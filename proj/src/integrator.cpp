#include "vortex/integrator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "vortex/geometry.hpp"
#include "vortex/se2.hpp"

namespace vortex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRenormTol = 1e-13;

std::vector<std::pair<int, int>> lexicographic_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (int m = 0; m < n; ++m)
    for (int k = m + 1; k < n; ++k) pairs.emplace_back(m, k);
  return pairs;
}

const std::vector<std::pair<int, int>>& effective_pairs(
    const IntegratorConfig& cfg, int n,
    std::vector<std::pair<int, int>>& scratch) {
  if (!cfg.pair_order.empty()) return cfg.pair_order;
  scratch = lexicographic_pairs(n);
  return scratch;
}

void renormalize(SphereState& s, double R, long* count) {
  for (Vec3& x : s.x) {
    double r = x.norm();
    if (std::abs(r - R) > kRenormTol * R) {
      x *= R / r;
      if (count) ++(*count);
    }
  }
}

template <class StateT, class StepFn>
IntegrationResult<StateT> integrate_impl(const VortexSystem& sys,
                                         const StateT& s0,
                                         const IntegratorConfig& cfg,
                                         long n_steps, StepFn do_step) {
  if (cfg.dt <= 0.0) throw DomainError("dt must be positive");
  if (cfg.record_every < 1) throw DomainError("record_every must be >= 1");
  IntegrationResult<StateT> result;
  Trajectory<StateT>& traj = result.trajectory;
  auto record = [&](double t, const StateT& s) {
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.energy.push_back(hamiltonian(sys, s));
    traj.momentum.push_back(momentum_vec(sys, s));
  };
  StateT s = s0;
  record(0.0, s);
  for (long k = 0; k < n_steps; ++k) {
    try {
      s = do_step(s, &traj.renormalizations);
    } catch (const CollisionError& e) {
      result.completed = false;
      result.failed_step = k;
      result.error = e.what();
      return result;
    }
    if ((k + 1) % cfg.record_every == 0 || k + 1 == n_steps)
      record((k + 1) * cfg.dt, s);
  }
  return result;
}

}  // namespace

void pair_flow_sphere(Vec3& x1, Vec3& x2, double g1, double g2, double R,
                      double t, double eps_rel) {
  double l2 = chord_sq(x1, x2, R);
  if (std::sqrt(std::max(l2, 0.0)) < eps_rel * R)
    throw CollisionError("sphere pair collision");
  Vec3 omega = (g1 * x1 + g2 * x2) / (kTwoPi * R * l2);
  if (omega.norm() == 0.0 || t == 0.0) return;
  Eigen::Matrix3d rot = rotation_from_angular_velocity(omega, t);
  x1 = rot * x1;
  x2 = rot * x2;
}

void pair_flow_plane(Complex& z1, Complex& z2, double g1, double g2, double t,
                     double eps_rel) {
  double l2 = std::norm(z1 - z2);
  if (std::sqrt(l2) < eps_rel) throw CollisionError("planar pair collision");
  SE2Algebra xi;
  xi.theta_dot = (g1 + g2) / (kTwoPi * l2);
  xi.a_dot = Complex(0.0, -1.0) * (g1 * z1 + g2 * z2) / (kTwoPi * l2);
  SE2Element g = se2_exp(xi, t);
  z1 = g.apply(z1);
  z2 = g.apply(z2);
}

SphereState step(const VortexSystem& sys, const SphereState& s,
                 const IntegratorConfig& cfg, long* renorm_count) {
  std::vector<std::pair<int, int>> scratch;
  const auto& pairs = effective_pairs(cfg, s.size(), scratch);
  SphereState out = s;
  auto sweep = [&](double dt, bool reversed) {
    long npairs = static_cast<long>(pairs.size());
    for (long i = 0; i < npairs; ++i) {
      auto [m, n] = pairs[reversed ? npairs - 1 - i : i];
      try {
        pair_flow_sphere(out.x[m], out.x[n], sys.strengths[m],
                         sys.strengths[n], sys.radius, dt, cfg.collision_eps);
      } catch (const CollisionError&) {
        throw CollisionError("collision during step", m, n);
      }
    }
  };
  if (cfg.method == SplittingMethod::LieTrotter) {
    sweep(cfg.dt, false);
  } else {
    sweep(0.5 * cfg.dt, false);
    sweep(0.5 * cfg.dt, true);
  }
  renormalize(out, sys.radius, renorm_count);
  return out;
}

PlanarState step(const VortexSystem& sys, const PlanarState& s,
                 const IntegratorConfig& cfg, long* renorm_count) {
  (void)renorm_count;
  std::vector<std::pair<int, int>> scratch;
  const auto& pairs = effective_pairs(cfg, s.size(), scratch);
  PlanarState out = s;
  auto sweep = [&](double dt, bool reversed) {
    long npairs = static_cast<long>(pairs.size());
    for (long i = 0; i < npairs; ++i) {
      auto [m, n] = pairs[reversed ? npairs - 1 - i : i];
      try {
        pair_flow_plane(out.z[m], out.z[n], sys.strengths[m], sys.strengths[n],
                        dt, cfg.collision_eps);
      } catch (const CollisionError&) {
        throw CollisionError("collision during step", m, n);
      }
    }
  };
  if (cfg.method == SplittingMethod::LieTrotter) {
    sweep(cfg.dt, false);
  } else {
    sweep(0.5 * cfg.dt, false);
    sweep(0.5 * cfg.dt, true);
  }
  return out;
}

IntegrationResult<SphereState> integrate(const VortexSystem& sys,
                                         const SphereState& s0,
                                         const IntegratorConfig& cfg,
                                         long n_steps) {
  return integrate_impl(sys, s0, cfg, n_steps,
                        [&](const SphereState& s, long* renorm) {
                          return step(sys, s, cfg, renorm);
                        });
}

IntegrationResult<PlanarState> integrate(const VortexSystem& sys,
                                         const PlanarState& s0,
                                         const IntegratorConfig& cfg,
                                         long n_steps) {
  return integrate_impl(sys, s0, cfg, n_steps,
                        [&](const PlanarState& s, long* renorm) {
                          return step(sys, s, cfg, renorm);
                        });
}

namespace {

void append_double(std::ostringstream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

std::string trajectory_csv(const Trajectory<SphereState>& traj) {
  std::ostringstream os;
  int n = traj.states.empty() ? 0 : traj.states.front().size();
  os << "t";
  for (int i = 1; i <= n; ++i)
    os << ", x" << i << "x, x" << i << "y, x" << i << "z";
  os << ", H, Jx, Jy, Jz\n";
  for (size_t k = 0; k < traj.times.size(); ++k) {
    append_double(os, traj.times[k]);
    for (const Vec3& x : traj.states[k].x)
      for (int c = 0; c < 3; ++c) {
        os << ", ";
        append_double(os, x[c]);
      }
    os << ", ";
    append_double(os, traj.energy[k]);
    for (int c = 0; c < 3; ++c) {
      os << ", ";
      append_double(os, traj.momentum[k][c]);
    }
    os << "\n";
  }
  return os.str();
}

std::string trajectory_csv(const Trajectory<PlanarState>& traj) {
  std::ostringstream os;
  int n = traj.states.empty() ? 0 : traj.states.front().size();
  os << "t";
  for (int i = 1; i <= n; ++i) os << ", z" << i << "re, z" << i << "im";
  os << ", H, Jmu, Jnu_re, Jnu_im\n";
  for (size_t k = 0; k < traj.times.size(); ++k) {
    append_double(os, traj.times[k]);
    for (const Complex& z : traj.states[k].z) {
      os << ", ";
      append_double(os, z.real());
      os << ", ";
      append_double(os, z.imag());
    }
    os << ", ";
    append_double(os, traj.energy[k]);
    for (int c = 0; c < 3; ++c) {
      os << ", ";
      append_double(os, traj.momentum[k][c]);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace vortex
