#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vortex/geometry.hpp"
#include "vortex/model.hpp"
#include "vortex/releq.hpp"
#include "vortex/se2.hpp"

using namespace vortex;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

std::mt19937 rng(20240611);

Vec3 random_unit() {
  std::normal_distribution<double> g;
  Vec3 v(g(rng), g(rng), g(rng));
  return v / v.norm();
}

PlanarState random_planar_state(int n, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  PlanarState s;
  for (int i = 0; i < n; ++i) s.z.push_back(Complex(u(rng), u(rng)));
  return s;
}

}  // namespace

TEST_CASE("sphere Hamiltonian closed-form values") {
  auto sys = VortexSystem::sphere(1.0, {1.0, 1.0});
  SphereState s{{Vec3(0, 0, 1), Vec3(0, 0, -1)}};
  CHECK(hamiltonian(sys, s) ==
        doctest::Approx(std::log(4.0) / (4.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("plane Hamiltonian closed-form values") {
  auto dipole = VortexSystem::plane({1.0, -1.0});
  PlanarState unit_sep{{Complex(0, 0), Complex(1, 0)}};
  CHECK(hamiltonian(dipole, unit_sep) == doctest::Approx(0.0).epsilon(1e-14));

  auto strong = VortexSystem::plane({2.0 * kPi, 2.0 * kPi});
  PlanarState e_sep{{Complex(0, 0), Complex(std::exp(1.0), 0)}};
  CHECK(hamiltonian(strong, e_sep) ==
        doctest::Approx(-2.0 * kPi).epsilon(1e-13));
}

TEST_CASE("collision guard") {
  auto sys = VortexSystem::plane({1.0, 1.0});
  PlanarState s{{Complex(0, 0), Complex(1e-14, 0)}};
  CHECK_THROWS_AS(hamiltonian(sys, s), CollisionError);
  CHECK_THROWS_AS(vector_field(sys, s), CollisionError);
}

TEST_CASE("momentum values") {
  auto sys = VortexSystem::sphere(2.0, {3.0, 3.0});
  SphereState s{{Vec3(0, 0, 2), Vec3(0, 0, -2)}};
  CHECK(momentum(sys, s).norm() == doctest::Approx(0.0).epsilon(1e-15));

  double G = 1.7, d = 0.8;
  auto dip = VortexSystem::plane({G, -G});
  PlanarState z{{Complex(0, 0), Complex(d, 0)}};
  SE2Momentum j = momentum(dip, z);
  CHECK(j.mu == doctest::Approx(G * d * d / 2).epsilon(1e-14));
  CHECK(std::abs(j.nu - kI * G * d) < 1e-14);
}

TEST_CASE("sphere vector field: antipodal equal pair is fixed") {
  auto sys = VortexSystem::sphere(1.0, {1.0, 1.0});
  SphereState s{{Vec3(0, 0, 1), Vec3(0, 0, -1)}};
  for (const Vec3& v : vector_field(sys, s)) CHECK(v.norm() < 1e-15);
}

TEST_CASE("plane vector field: dipole translates at Gamma/(2 pi d)") {
  double G = 2.3, d = 0.6;
  auto sys = VortexSystem::plane({G, -G});
  PlanarState s{{Complex(0, 0), Complex(d, 0)}};
  auto v = vector_field(sys, s);
  // both vortices share the same velocity, perpendicular to the separation
  CHECK(std::abs(v[0] - v[1]) < 1e-15);
  CHECK(std::abs(std::abs(v[0]) - G / (2 * kPi * d)) < 1e-14);
  CHECK(std::abs(v[0].real()) < 1e-15);
}

TEST_CASE("plane vector field: equal pair rotates about centroid") {
  double G = 1.0, d = 0.5;
  auto sys = VortexSystem::plane({G, G});
  PlanarState s{{Complex(d, 0), Complex(-d, 0)}};
  auto v = vector_field(sys, s);
  double theta_dot = 2 * G / (2 * kPi * 4 * d * d);
  CHECK(std::abs(v[0] - kI * theta_dot * s.z[0]) < 1e-14);
  CHECK(std::abs(v[1] - kI * theta_dot * s.z[1]) < 1e-14);
}

TEST_CASE("sphere vector field matches the releq generator action") {
  for (int N : {3, 4, 5}) {
    SphereReleq re = build_sphere_releq(N, 0.7, 1.3, 1.0);
    auto field = vector_field(re.sys, re.state);
    for (int n = 0; n < N; ++n)
      CHECK((field[n] - re.generator.cross(re.state.x[n])).norm() < 1e-12);
  }
}

TEST_CASE("Poisson bracket antisymmetry on H") {
  auto sys = VortexSystem::plane({1.0, -2.0, 0.7});
  PlanarState s = random_planar_state(3);
  auto H = with_fd_gradient(
      [&sys](const PlanarState& p) { return hamiltonian(sys, p); }, 1.0);
  CHECK(std::abs(poisson_bracket(sys, H, H, s)) < 1e-12);
}

TEST_CASE("bracket of a translation momentum with itself vanishes") {
  auto sys = VortexSystem::plane({1.0, 0.5});
  PlanarState s = random_planar_state(2);
  auto J = momentum_observable(sys, SE2Algebra{0.0, Complex(1, 0)});
  CHECK(std::abs(poisson_bracket(sys, J, J, s)) < 1e-12);
}

TEST_CASE("two unit translations: bracket equals minus the cocycle form") {
  auto sys = VortexSystem::plane({1.5, 0.5, -0.3});
  PlanarState s = random_planar_state(3);
  SE2Algebra xi{0.0, Complex(1, 0)};
  SE2Algebra eta{0.0, Complex(0, 1)};
  auto Jxi = momentum_observable(sys, xi);
  auto Jeta = momentum_observable(sys, eta);
  // [xi,eta] = 0 for pure translations
  double expected = -se2_cocycle_form(sys.total_strength(), xi, eta);
  CHECK(poisson_bracket(sys, Jxi, Jeta, s) ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("momentum commutation identity with finite-difference gradients") {
  auto sys = VortexSystem::plane({1.0, -0.4, 2.2, 0.9});
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    PlanarState s = random_planar_state(4);
    SE2Algebra xi{u(rng), Complex(u(rng), u(rng))};
    SE2Algebra eta{u(rng), Complex(u(rng), u(rng))};
    auto Jxi = with_fd_gradient(momentum_observable(sys, xi).value, 1.0);
    auto Jeta = with_fd_gradient(momentum_observable(sys, eta).value, 1.0);
    double lhs = poisson_bracket(sys, Jxi, Jeta, s);
    double jb = momentum_observable(sys, se2_bracket(xi, eta)).value(s);
    double sigma = se2_cocycle_form(sys.total_strength(), xi, eta);
    CHECK(std::abs(lhs - jb + sigma) < 1e-8);
  }
}

TEST_CASE("SE(2) structure maps") {
  SE2Element id = SE2Element::identity();
  SE2Momentum sigma_id = se2_cocycle(3.7, id);
  CHECK(sigma_id.mu == 0.0);
  CHECK(std::abs(sigma_id.nu) == 0.0);

  // total strength zero kills the cocycle form identically
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    SE2Algebra v{u(rng), Complex(u(rng), u(rng))};
    SE2Algebra w{u(rng), Complex(u(rng), u(rng))};
    CHECK(se2_cocycle_form(0.0, v, w) == 0.0);
  }

  CHECK(se2_cocycle_form(2.0, SE2Algebra{0.0, Complex(1, 0)},
                         SE2Algebra{0.0, Complex(0, 1)}) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("cocycle matches its defining difference") {
  auto sys = VortexSystem::plane({1.2, 0.4, -0.5});
  SE2Element g{std::polar(1.0, 0.8), Complex(0.3, -1.1)};
  for (int trial = 0; trial < 5; ++trial) {
    PlanarState s = random_planar_state(3);
    PlanarState gs = s;
    for (auto& z : gs.z) z = g.apply(z);
    SE2Momentum lhs = momentum(sys, gs);
    SE2Momentum rhs = se2_coadjoint(g, momentum(sys, s));
    SE2Momentum sigma = se2_cocycle(sys.total_strength(), g);
    CHECK(std::abs(lhs.mu - rhs.mu - sigma.mu) < 1e-12);
    CHECK(std::abs(lhs.nu - rhs.nu - sigma.nu) < 1e-12);
  }
}

TEST_CASE("chart to the sphere and back") {
  double R = 2.5;
  CHECK((chart_to_sphere(Complex(0, 0), R) - Vec3(0, 0, R)).norm() < 1e-15);
  CHECK_THROWS_AS(chart_to_sphere(Complex(R, 0), R), DomainError);

  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int trial = 0; trial < 50; ++trial) {
    Complex z(u(rng) * R, u(rng) * R);
    if (std::abs(z) >= 0.9 * R) continue;
    Vec3 x = chart_to_sphere(z, R);
    CHECK(std::abs(x.norm() - R) < 1e-14 * R);
    CHECK(std::abs(chart_to_plane(x, R) - z) < 1e-14);
  }
}

TEST_CASE("pulled-back sphere field approaches the planar field quadratically") {
  double R = 1.0;
  std::vector<double> gammas{1.0, -0.7, 1.4};
  auto plane_sys = VortexSystem::plane(gammas);
  auto sphere_sys = VortexSystem::sphere(R, gammas);

  PlanarState base = random_planar_state(3, 1.0);
  auto error_at = [&](double scale) {
    PlanarState zs = base;
    for (auto& z : zs.z) z *= scale;
    SphereState xs;
    for (const auto& z : zs.z) xs.x.push_back(chart_to_sphere(z, R));
    auto vf_sphere = vector_field(sphere_sys, xs);
    auto vf_plane = vector_field(plane_sys, zs);
    double worst = 0.0;
    for (int n = 0; n < 3; ++n) {
      Complex vs(vf_sphere[n].x(), vf_sphere[n].y());
      worst = std::max(worst,
                       std::abs(vs - vf_plane[n]) / std::abs(vf_plane[n]));
    }
    return worst;
  };
  double e1 = error_at(0.01);
  double e2 = error_at(0.005);
  CHECK(e1 < 1e-3);
  double ratio = e1 / e2;
  CHECK(ratio > 2.5);
  CHECK(ratio < 6.0);
}

TEST_CASE("rotational invariance of H and equivariance of J") {
  auto sys = VortexSystem::sphere(1.0, {1.0, -0.6, 0.8, 1.3});
  SphereState s;
  for (int n = 0; n < 4; ++n) s.x.push_back(random_unit());
  double h0 = hamiltonian(sys, s);
  Vec3 j0 = momentum(sys, s);
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    Eigen::Matrix3d A = axis_angle_rotation(random_unit(), u(rng));
    SphereState rs = s;
    for (auto& x : rs.x) x = A * x;
    CHECK(std::abs(hamiltonian(sys, rs) - h0) < 1e-12 * std::abs(h0));
    CHECK((momentum(sys, rs) - A * j0).norm() < 1e-13);
  }
}
