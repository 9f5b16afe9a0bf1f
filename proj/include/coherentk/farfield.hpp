#ifndef COHERENTK_FARFIELD_HPP
#define COHERENTK_FARFIELD_HPP

// Far-field scattering functions f^{qp}(theta), the coupling series S(kappa)
// with its integral representation, and the Lloyd-Berry coefficient
// integrals delta_1, delta_2, delta_2^(c).

#include "coherentk/quadrature.hpp"
#include "coherentk/tmatrix.hpp"

namespace coherentk {

// f^{qp}(theta) = sum_n (2n+1) T_n^{qp} P_n(cos theta), 0 <= theta <= pi.
cplx farfield_f(int q, int p, double theta, const TMatrixSet& t);

// d f^{qp}/d theta, from the analytic Legendre derivative recurrence.
cplx farfield_f_dtheta(int q, int p, double theta, const TMatrixSet& t);

// g(kappa, theta) = (1 - kappa^2)(1 - 2 kappa cos theta + kappa^2)^{-3/2},
// the closed form of sum_m kappa^m (2m+1) P_m(cos theta). Requires |kappa| < 1.
cplx g_kappa_theta(cplx kappa, double theta);

// S(kappa) = sum_{n,nu,l} (2n+1)(2nu+1) T_n^{qp} T_nu^{pq} kappa^l G(0,nu;0,n;l).
// Valid for any kappa (the Gaunt support truncates the l sum exactly); throws
// truncation_error when the outer shell of the truncated T sums is still
// significant.
cplx s_kappa_series(int q, int p, cplx kappa, const TMatrixSet& t,
                    const GauntTable& gaunt, double tail_rel = 1e-8);
cplx s_kappa_series(int q, int p, cplx kappa, const TMatrixSet& t, double tail_rel = 1e-8);

// Integral form of S(kappa), |kappa| < 1 only:
// (1 - kappa^2)/2 int_0^pi f^{qp} f^{pq} (1 - 2 kappa cos theta + kappa^2)^{-3/2}
// sin theta dtheta.
cplx s_kappa_integral(int q, int p, cplx kappa, const TMatrixSet& t,
                      const QuadratureOptions& opt = {});

// First-order concentration coefficient: delta_1 = -4 i pi f^{pp}(0) / k_p.
cplx delta1(int p, const TMatrixSet& t, cplx k_p);

// Lloyd-Berry second-order coefficient:
// (4 pi^2/k_p^4) { f(0)^2 - f(pi)^2 + int_0^pi d[f^2]/dtheta / sin(theta/2) dtheta }.
cplx delta2(int p, const TMatrixSet& t, cplx k_p, const QuadratureOptions& opt = {});

// Coupling term of the generalized formula:
// sum_{q != p} (8 pi^2/k_p) int_0^pi f^{qp} f^{pq} sin theta
//   (k_p^2 + k_q^2 - 2 k_p k_q cos theta)^{-3/2} dtheta.
// Requires |k_p| < |k_q| for every q != p (fast wave).
cplx delta2_coupling(int p, const TMatrixSet& t, const std::vector<cplx>& host_k,
                     const QuadratureOptions& opt = {});

}  // namespace coherentk

#endif
