#ifndef VORTEX_ERRORS_HPP
#define VORTEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vortex {

struct CollisionError : std::runtime_error {
  int pair_m = -1, pair_n = -1;
  explicit CollisionError(const std::string& msg, int m = -1, int n = -1)
      : std::runtime_error(msg), pair_m(m), pair_n(n) {}
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedN : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateMean : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSubspace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vortex

#endif
