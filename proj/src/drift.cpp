#include "vortex/drift.hpp"

#include <cmath>
#include <numbers>

#include "vortex/geometry.hpp"

namespace vortex {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ring_n(int N) {
  if (N != 3 && N != 4)
    throw UnsupportedN("drift forms are available for N = 3 and 4 only");
}

}  // namespace

DriftForm drift_form_sphere(int N, double alpha, double R) {
  require_ring_n(N);
  if (!(alpha > 0.0 && alpha < kPi) || std::cos(alpha) == 0.0)
    throw DomainError("opening angle must lie in (0, pi), away from pi/2");
  double c = std::cos(alpha);
  double s2 = std::sin(alpha) * std::sin(alpha);
  double R2 = R * R;
  DriftForm f{Domain::Sphere, N, alpha, R, 0.0, 0.0, 0.0};
  if (N == 3) {
    f.j1 = f.j2 = 1.0 / (8.0 * kPi * R2 * c);
    f.j3 = (2.0 * c * c * c + 3.0 * c * c + 2.0 * c - 1.0) /
           (8.0 * kPi * R2 * s2 * s2);
  } else {
    f.j1 = f.j2 = -(3.0 * c * c + c + 2.0) /
                  (2.0 * kPi * R2 * (1.0 - c) * (9.0 * c * c + 4.0 * c + 3.0));
    f.j3 = (3.0 * c * c * c + 4.0 * c * c + 3.0 * c - 2.0) /
           (12.0 * kPi * R2 * s2 * s2);
  }
  return f;
}

Eigen::Matrix3d drift_form_plane(int N, double alpha) {
  require_ring_n(N);
  if (!(alpha > 0.0)) throw DomainError("ring radius must be positive");
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  if (N == 3) {
    m(0, 0) = -0.75 / (2.0 * kPi * std::pow(alpha, 4));
  } else {
    double c = 1.0 / (2.0 * kPi * alpha * alpha);
    m(0, 0) = -4.0 / 3.0 * c;
    m(1, 1) = m(2, 2) = 0.75 * c;
  }
  return m;
}

double mass_sphere(int N, double alpha, double R) {
  return -1.0 / (drift_form_sphere(N, alpha, R).j1 * R * R);
}

PlanarMass mass_plane(int N, double alpha) {
  require_ring_n(N);
  if (!(alpha > 0.0)) throw DomainError("ring radius must be positive");
  if (N == 3) return {0.0, true};
  return {8.0 * kPi / 3.0 * alpha * alpha, false};
}

Perturbation build_perturbation(const SphereReleq& re, const Vec3& dmu) {
  const double G = re.Gamma, R = re.R(), a = re.alpha;
  const int N = re.N;
  double d1 = std::hypot(dmu.x(), dmu.y());
  double d3 = dmu.z();
  double phi = d1 > 0.0 ? std::atan2(dmu.y(), dmu.x()) : 0.0;
  if (std::abs(d1 / G) > 1.0)
    throw NoSolution("transverse momentum change exceeds the vortex strength");
  double delta = -std::asin(d1 / G);
  double ca_new =
      std::cos(a) + std::cos(a) / G * (d3 + G * (std::cos(delta) - 1.0));
  if (!(ca_new > -1.0 && ca_new < 1.0))
    throw NoSolution("no ring opening angle matches the momentum change");
  double a_new = std::acos(ca_new);

  Perturbation out;
  out.dmu = dmu;
  out.spec.dmu1 = d1;
  out.spec.dmu3 = d3;
  out.spec.delta = delta;
  out.spec.dalpha = a_new - a;
  out.spec.delta_ratio = std::abs(delta / a);
  out.spec.dalpha_ratio = std::abs(out.spec.dalpha / a);
  out.spec.warning =
      out.spec.delta_ratio >= 0.1 || out.spec.dalpha_ratio >= 0.1;

  SphereState s;
  s.x.resize(N);
  double sa = std::sin(a_new);
  for (int k = 0; k < N - 1; ++k) {
    double az = 2.0 * kPi * k / (N - 1);
    s.x[k] = R * Vec3(sa * std::cos(az), sa * std::sin(az), ca_new);
  }
  s.x[N - 1] = R * Vec3(std::sin(delta), 0.0, std::cos(delta));
  if (phi != 0.0) {
    Eigen::Matrix3d rot = axis_angle_rotation(Vec3(0, 0, 1), phi);
    for (auto& x : s.x) x = rot * x;
  }
  Vec3 got = momentum(re.sys, s);
  if ((got - dmu).norm() > 1e-11 * std::max(1.0, std::abs(G)))
    throw NoSolution("constructed state misses the requested momentum");
  out.state = std::move(s);
  return out;
}

Vec3 DriftPrediction::position(double t) const {
  return rotation_from_angular_velocity(angular_velocity, t) * y0;
}

DriftPrediction predict_drift(const SphereReleq& re, const Vec3& dmu) {
  DriftForm f = drift_form_sphere(re.N, re.alpha, re.R());
  DriftPrediction p;
  p.R = re.R();
  p.axis = dmu.norm() > 0.0 ? Vec3(dmu.normalized()) : Vec3(0, 0, 1);
  p.angular_velocity = f.j1 * dmu;
  p.mass = mass_sphere(re.N, re.alpha, re.R());
  p.charge = -dmu.z();
  p.y0 = Vec3(0, 0, p.R);
  p.v0 = p.y0.cross(dmu) / (p.mass * p.R * p.R);
  return p;
}

std::vector<Vec3> integrate_drift(const DriftPrediction& pred, double duration,
                                  int steps) {
  if (steps < 1) throw DomainError("need at least one step");
  const double R = pred.R;
  const double qm = pred.charge / pred.mass;
  auto accel = [&](const Vec3& y, const Vec3& v) -> Vec3 {
    return -v.squaredNorm() / (R * R) * y + qm / (R * R * R) * y.cross(v);
  };
  double h = duration / steps;
  Vec3 y = pred.y0, v = pred.v0;
  std::vector<Vec3> out;
  out.reserve(steps + 1);
  out.push_back(y);
  for (int k = 0; k < steps; ++k) {
    Vec3 k1y = v, k1v = accel(y, v);
    Vec3 k2y = v + 0.5 * h * k1v, k2v = accel(y + 0.5 * h * k1y, k2y);
    Vec3 k3y = v + 0.5 * h * k2v, k3v = accel(y + 0.5 * h * k2y, k3y);
    Vec3 k4y = v + h * k3v, k4v = accel(y + h * k3y, k4y);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    y *= R / y.norm();
    out.push_back(y);
  }
  return out;
}

Vec3 preq_location(const VortexSystem& sys, const SphereState& s,
                   PreqLocationMethod method) {
  if (method == PreqLocationMethod::CentralVortex) return s.x.back();
  Vec3 mean = Vec3::Zero();
  for (const Vec3& x : s.x) mean += x;
  mean /= s.size();
  if (mean.norm() < 1e-9 * sys.radius)
    throw DegenerateMean("vortex mean is too close to the center");
  return sys.radius * mean.normalized();
}

DriftRateEstimate estimate_drift_rate(const VortexSystem& sys,
                                      const Trajectory<SphereState>& traj,
                                      const Vec3& dmu, int n_windows,
                                      PreqLocationMethod method) {
  if (dmu.norm() == 0.0) throw DomainError("momentum change must be nonzero");
  if (n_windows < 1) throw DomainError("need at least one window");
  long n = static_cast<long>(traj.times.size());
  if (n < 2 * n_windows)
    throw InsufficientSamples("need two samples per window");

  Vec3 axis = dmu.normalized();
  Vec3 u = axis.cross(std::abs(axis.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0))
               .normalized();
  Vec3 w = axis.cross(u);
  std::vector<double> phase(n);
  double prev = 0.0, offset = 0.0;
  for (long k = 0; k < n; ++k) {
    Vec3 y = preq_location(sys, traj.states[k], method);
    double p = std::atan2(y.dot(w), y.dot(u));
    if (k > 0) {
      if (p - prev > kPi) offset -= 2.0 * kPi;
      if (p - prev < -kPi) offset += 2.0 * kPi;
    }
    prev = p;
    phase[k] = p + offset;
  }

  DriftRateEstimate est;
  for (int win = 0; win < n_windows; ++win) {
    long lo = win * n / n_windows;
    long hi = (win + 1) * n / n_windows;
    double st = 0, sp = 0, stt = 0, stp = 0;
    long m = hi - lo;
    for (long k = lo; k < hi; ++k) {
      st += traj.times[k];
      sp += phase[k];
      stt += traj.times[k] * traj.times[k];
      stp += traj.times[k] * phase[k];
    }
    double denom = m * stt - st * st;
    if (denom == 0.0) throw InsufficientSamples("degenerate window");
    est.window_rates.push_back((m * stp - st * sp) / denom);
  }
  double mean = 0.0;
  for (double r : est.window_rates) mean += r;
  mean /= n_windows;
  est.mean_rate = mean;
  double var = 0.0;
  for (double r : est.window_rates) var += (r - mean) * (r - mean);
  est.dispersion = n_windows > 1 ? std::sqrt(var / (n_windows - 1)) : 0.0;
  return est;
}

double drift_form_crosscheck(const SphereReleq& re) {
  DriftForm f = drift_form_sphere(re.N, re.alpha, re.R());
  Vec3 dir = Vec3(2.0, 0.0, 3.0).normalized();
  double budget = std::abs(re.Gamma) * re.alpha;
  IntegratorConfig cfg;
  cfg.dt = 0.005 * 2.0 * kPi / re.generator.norm();
  std::vector<double> size, ratio;
  for (double eps : {0.002, 0.004, 0.006}) {
    double s = eps * budget;
    Perturbation pert = build_perturbation(re, s * dir);
    double T = 1.2 / (std::abs(f.j1) * s);
    long steps = std::lround(T / cfg.dt);
    cfg.record_every = std::max<long>(1, steps / 4000);
    auto res = integrate(re.sys, pert.state, cfg, steps);
    auto est = estimate_drift_rate(re.sys, res.trajectory, pert.dmu, 50);
    size.push_back(s);
    ratio.push_back(std::abs(est.mean_rate) / s);
  }
  // the rate is a cubic in |dmu|, so rate/|dmu| extrapolates linearly
  double n = static_cast<double>(size.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < size.size(); ++i) {
    sx += size[i];
    sy += ratio[i];
    sxx += size[i] * size[i];
    sxy += size[i] * ratio[i];
  }
  double intercept = (sy * sxx - sx * sxy) / (n * sxx - sx * sx);
  return std::abs(intercept - std::abs(f.j1)) / std::abs(f.j1);
}

}  // namespace vortex
