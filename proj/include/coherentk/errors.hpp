#ifndef COHERENTK_ERRORS_HPP
#define COHERENTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coherentk {

// Two background wavenumbers are too close for the expansion denominators
// 1/(k_p^2 - k_q^2) to be meaningful.
class degeneracy_error : public std::runtime_error {
public:
  explicit degeneracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A general-frequency evaluation was requested too close to xi = k_p; the
// caller should switch to the at-k_p specialization.
class use_specialization_error : public std::runtime_error {
public:
  explicit use_specialization_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The truncated resolvent I - eps*Qbar*T is singular or numerically unusable.
class conditioning_error : public std::runtime_error {
public:
  conditioning_error(const std::string& msg, double rcond_estimate)
      : std::runtime_error(msg), rcond(rcond_estimate) {}
  double rcond;
};

// Adaptive quadrature failed to reach the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
  quadrature_error(const std::string& msg, int nodes_used)
      : std::runtime_error(msg), nodes(nodes_used) {}
  int nodes;
};

// An operation was called outside its validity regime (e.g. Lloyd-Berry
// route for a wave that is not the fastest one).
class regime_error : public std::runtime_error {
public:
  explicit regime_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Root finder did not converge within the iteration budget.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& msg, int iterations)
      : std::runtime_error(msg), iters(iterations) {}
  int iters;
};

// Truncated series whose tail is still significant.
class truncation_error : public std::runtime_error {
public:
  truncation_error(const std::string& msg, double tail)
      : std::runtime_error(msg), tail_estimate(tail) {}
  double tail_estimate;
};

// Malformed input files or configs.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace coherentk

#endif
