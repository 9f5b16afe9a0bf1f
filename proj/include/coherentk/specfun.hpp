#ifndef COHERENTK_SPECFUN_HPP
#define COHERENTK_SPECFUN_HPP

// Spherical Bessel/Hankel functions with complex arguments, Legendre
// polynomials, and the m = 0 Gaunt coefficients that couple products of
// Legendre polynomials. Everything here is pure and thread-safe.

#include <complex>
#include <vector>

namespace coherentk {

using cplx = std::complex<double>;

// --- spherical Bessel functions -----------------------------------------

// j_n(z), first kind. j_0(0) = 1, j_n(0) = 0 for n > 0.
cplx sph_bessel_j(int n, cplx z);

// j_0..j_nmax at a fixed argument (one recurrence pass).
std::vector<cplx> sph_bessel_j_all(int n_max, cplx z);

// h_n^{(1)}(z). Requires z != 0.
cplx sph_hankel1(int n, cplx z);

std::vector<cplx> sph_hankel1_all(int n_max, cplx z);

// Derivatives, via f_n' = f_{n-1} - (n+1)/z f_n (f_0' = -f_1).
cplx sph_bessel_j_prime(int n, cplx z);
cplx sph_hankel1_prime(int n, cplx z);

// --- Legendre polynomials ------------------------------------------------

// P_n(x) for |x| <= 1, three-term recurrence. Throws std::domain_error
// outside [-1, 1].
double legendre_p(int n, double x);

// P_0(x)..P_nmax(x) in one pass.
std::vector<double> legendre_p_all(int n_max, double x);

// dP_n/dx for |x| <= 1, via P'_{n+1} = P'_{n-1} + (2n+1) P_n.
// Finite at the endpoints (P_n'(1) = n(n+1)/2).
double legendre_p_derivative(int n, double x);

std::vector<double> legendre_p_derivative_all(int n_max, double x);

// --- Wigner 3j (zero projections) and Gaunt coefficients ------------------

// (j1 j2 j3; 0 0 0). Exact zero when j1+j2+j3 is odd or the triangle
// inequality fails.
double wigner3j_000(int j1, int j2, int j3);

// Gaunt coefficient G(0,nu;0,n;l) for unnormalized Legendre polynomials:
// P_n P_nu = sum_l G(0,nu;0,n;l) P_l. Equals (2l+1) * wigner3j_000(n,nu,l)^2.
// Returns exact 0 outside |n-nu| <= l <= n+nu or when n+nu+l is odd.
double gaunt0(int n, int nu, int l);

// Conversion factor from the unnormalized-Legendre convention above to the
// orthonormal-harmonic convention: G_ortho = gaunt0 * this factor.
double gaunt0_to_orthonormal_factor(int n, int nu, int l);

// Precomputed table of G(0,nu;0,n;l) for n, nu <= max_n over the admissible
// l range. Immutable after construction; shared read-only across threads.
class GauntTable {
public:
  explicit GauntTable(int max_n);

  int max_n() const { return max_n_; }

  // Coefficient for admissible (n, nu, l); 0 outside the support.
  double coeff(int n, int nu, int l) const;

  // All nonzero coefficients for a pair, as (l, value), l ascending.
  const std::vector<std::pair<int, double>>& support(int n, int nu) const;

  // sum_l G(0,nu;0,n;l); equals 1 up to rounding.
  double sum(int n, int nu) const;

private:
  int max_n_;
  std::vector<std::vector<std::pair<int, double>>> entries_;  // (n,nu) -> support
};

}  // namespace coherentk

#endif
