#ifndef COHERENTK_TOLERANCES_HPP
#define COHERENTK_TOLERANCES_HPP

#include "coherentk/quadrature.hpp"

namespace coherentk {

// Numerical policy shared by the modal assembly, the dispersion solvers and
// the far-field quadratures. Defaults are the ones used by the CLI; configs
// may override individual fields.
struct Tolerances {
  double t_decay_floor = 1e-14;   // under-truncation floor on |T_n^{qp}|
  double default_n_cutoff = 1e-12;  // default n_max: first order below this
  int n_max_cap = 64;

  double degeneracy_rel = 1e-8;   // |k_p^2 - k_q^2| < rel * max|k^2| is degenerate
  double y_singular_rel = 1e-10;  // |y_p| < rel * |k_p|^2 forces the at-k_p forms
  double rcond_min = 1e-13;       // resolvent conditioning guard

  double root_step_rel = 1e-12;   // Newton step tolerance relative to |k_p^2|
  int root_max_iter = 50;
  double root_fd_step_rel = 1e-6;  // central-difference step for det'

  double series_tail_rel = 1e-8;  // S(kappa) outer-shell tail bound

  double lowfreq_kb_warn = 0.1;   // attach a warning above this k*b
  double phi_warn = 0.1;          // attach a warning above this volume fraction

  QuadratureOptions quad;
};

}  // namespace coherentk

#endif
