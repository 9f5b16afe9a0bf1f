#ifndef COHERENTK_QUADRATURE_HPP
#define COHERENTK_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace coherentk {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 15;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate;
  int nodes;
};

// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued integrand
// over [a, b]. Panels are bisected until |K15 - G7| meets the local error
// budget; throws quadrature_error (carrying the node count) if the budget
// cannot be met within max_depth levels.
QuadratureResult integrate_gk(const std::function<std::complex<double>(double)>& f,
                              double a, double b,
                              const QuadratureOptions& opt = {});

}  // namespace coherentk

#endif
