#ifndef VORTEX_SE2_HPP
#define VORTEX_SE2_HPP

#include <complex>

#include "vortex/system.hpp"

namespace vortex {

/// Group element (e^{i theta}, a) acting on C by z -> e^{i theta} z + a.
struct SE2Element {
  Complex phase{1.0, 0.0};
  Complex translation{0.0, 0.0};

  static SE2Element identity() { return {}; }
  Complex apply(Complex z) const { return phase * z + translation; }
};

/// Algebra element (theta_dot, a_dot).
struct SE2Algebra {
  double theta_dot = 0.0;
  Complex a_dot{0.0, 0.0};
};

/// Dual element (mu, nu), identified with R^3 as (mu, Re nu, Im nu).
struct SE2Momentum {
  double mu = 0.0;
  Complex nu{0.0, 0.0};

  Vec3 as_vec3() const { return Vec3(mu, nu.real(), nu.imag()); }
};

// Area form on C: omega0(a,b) = -Im(a * conj(b)) = ax*by - ay*bx.
inline double omega0(Complex a, Complex b) {
  return -std::imag(a * std::conj(b));
}

SE2Element se2_compose(const SE2Element& g, const SE2Element& h);
SE2Algebra se2_adjoint(const SE2Element& g, const SE2Algebra& v);
SE2Momentum se2_coadjoint(const SE2Element& g, const SE2Momentum& mu);
/// Lie bracket, oriented so that the momentum commutation identity
/// {J_xi, J_eta} = J_{[xi,eta]} - Sigma(xi,eta) holds with the Poisson
/// bracket convention used in model.hpp.
SE2Algebra se2_bracket(const SE2Algebra& v, const SE2Algebra& w);

/// Nonequivariance cocycle of the planar momentum map; vanishes identically
/// when the total strength is zero.
SE2Momentum se2_cocycle(double total_strength, const SE2Element& g);

/// Derivative of the cocycle at the identity: the two-form
/// Sigma(v,w) = total_strength * omega0(v.a_dot, w.a_dot).
double se2_cocycle_form(double total_strength, const SE2Algebra& v,
                        const SE2Algebra& w);

/// exp(t v); the translational part (e^{i th t}-1) a_dot/(i th) switches to a
/// short series when |theta_dot * t| < 1e-6 to avoid cancellation.
SE2Element se2_exp(const SE2Algebra& v, double t);

}  // namespace vortex

#endif
