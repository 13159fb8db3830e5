#include "vortex/se2.hpp"

#include <cmath>

namespace vortex {

namespace {
const Complex kI(0.0, 1.0);
}

SE2Element se2_compose(const SE2Element& g, const SE2Element& h) {
  return {g.phase * h.phase, g.phase * h.translation + g.translation};
}

SE2Algebra se2_adjoint(const SE2Element& g, const SE2Algebra& v) {
  return {v.theta_dot, g.phase * v.a_dot - kI * v.theta_dot * g.translation};
}

SE2Momentum se2_coadjoint(const SE2Element& g, const SE2Momentum& m) {
  Complex rotated = g.phase * m.nu;
  return {m.mu - omega0(rotated, g.translation), rotated};
}

SE2Algebra se2_bracket(const SE2Algebra& v, const SE2Algebra& w) {
  return {0.0, kI * (w.theta_dot * v.a_dot - v.theta_dot * w.a_dot)};
}

SE2Momentum se2_cocycle(double total_strength, const SE2Element& g) {
  const Complex& a = g.translation;
  return {-total_strength * 0.5 * std::norm(a), -total_strength * kI * a};
}

double se2_cocycle_form(double total_strength, const SE2Algebra& v,
                        const SE2Algebra& w) {
  return total_strength * omega0(v.a_dot, w.a_dot);
}

SE2Element se2_exp(const SE2Algebra& v, double t) {
  double th = v.theta_dot * t;
  Complex phase = std::polar(1.0, th);
  Complex trans;
  if (std::abs(th) < 1e-6) {
    // (e^{i th} - 1)/(i th) = 1 + i th/2 + O(th^2)
    trans = t * v.a_dot * (1.0 + kI * (0.5 * th));
  } else {
    trans = (phase - 1.0) * v.a_dot / (kI * v.theta_dot);
  }
  return {phase, trans};
}

}  // namespace vortex
