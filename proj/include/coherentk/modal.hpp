#ifndef COHERENTK_MODAL_HPP
#define COHERENTK_MODAL_HPP

// Building blocks of the dispersion relation: the boundary kernels N_l, the
// Qbar matrices (general frequency, at-k_p, and low-frequency forms), and
// the M_qp elements at orders 0, 1 and through the full truncated resolvent.

#include <Eigen/Dense>
#include <memory>

#include "coherentk/tmatrix.hpp"
#include "coherentk/tolerances.hpp"

namespace coherentk {

// Snapshot of host + scatterers + truncation at one angular frequency.
// Immutable; evaluations at distinct trial wavenumbers may run concurrently.
class ModalSystem {
public:
  ModalSystem(std::vector<cplx> host_k, std::shared_ptr<const TMatrixSet> tmatrix,
              MixtureSpec mixture, int n_max = -1,
              std::shared_ptr<const GauntTable> gaunt = nullptr,
              Tolerances tol = {});

  int wave_count() const { return static_cast<int>(ks_.size()); }
  int n_max() const { return n_max_; }
  cplx k(int p) const { return ks_.at(p); }
  const std::vector<cplx>& wavenumbers() const { return ks_; }
  double max_k2() const { return max_k2_; }

  const TMatrixSet& tmatrix() const { return *tmatrix_; }
  const MixtureSpec& mixture() const { return mixture_; }
  double hole_b() const { return mixture_.hole_b(); }
  cplx epsilon() const { return mixture_.epsilon(); }
  const GauntTable& gaunt() const { return *gaunt_; }
  const Tolerances& tolerances() const { return tol_; }

  cplx t_coeff(int n, int q, int p) const { return tmatrix_->coeff(n, q, p); }

private:
  std::vector<cplx> ks_;
  std::shared_ptr<const TMatrixSet> tmatrix_;
  MixtureSpec mixture_;
  Tolerances tol_;
  int n_max_;
  std::shared_ptr<const GauntTable> gaunt_;
  double max_k2_;
};

// y_p = xi^2 - k_p^2 for every wave.
std::vector<cplx> y_variables(cplx xi, const std::vector<cplx>& ks);

// Boundary kernel N_l(xi) = xi b j_l'(xi b) h_l(k_p b) - k_p b j_l(xi b) h_l'(k_p b).
// At xi = k_p this collapses to -i/(k_p b) for every l (spherical Wronskian).
cplx n_ell(int l, cplx xi, cplx k_p, double b);

// Kernels for orders 0..l_max at fixed arguments (one Bessel pass).
std::vector<cplx> n_ell_all(int l_max, cplx xi, cplx k_p, double b);

enum class QbarRegime { general, lowfreq };

// Qbar^{(p)}_{n nu}(xi), general frequency. Throws use_specialization_error
// when xi is too close to k_p; use the at-k_p forms there.
cplx qbar_general(int n, int nu, int p, cplx xi, const ModalSystem& sys);

// Qbar^{(q)}_{n nu}(k_p) for q != p (finite off-diagonal expansion-point value).
cplx qbar_at_kp_offdiag(int n, int nu, int q, int p, const ModalSystem& sys);

// Qbar^{(p)}_{n nu}(k_p): the removable-singularity limit of the general form.
cplx qbar_at_kp_diag(int n, int nu, int p, const ModalSystem& sys);

// k b -> 0 limits of the two at-k_p forms.
cplx qbar_lowfreq_offdiag(int n, int nu, int q, int p, const ModalSystem& sys);
cplx qbar_lowfreq_diag(int n, int nu, int p, const ModalSystem& sys);

// M_qp^{(0)} = pi/sqrt(k_q k_p) sum_n (2n+1) T_n^{qp}; principal branch of
// the square root of the product.
cplx m_order0(int q, int p, const ModalSystem& sys);

// M_pp^{(1)}(k_p), assembled from the at-k_p Qbar blocks (general) or their
// low-frequency limits.
cplx m_order1_diag(int p, const ModalSystem& sys, QbarRegime regime = QbarRegime::general);

// Full matrix element M_qp(xi) = <e_q| T (I - eps Qbar T)^{-1} |e_p> on the
// (n_max+1)*P truncated space; one LU factorization serves all (q, p).
Eigen::MatrixXcd m_full_matrix(cplx xi, const ModalSystem& sys);

cplx m_full(int q, int p, cplx xi, const ModalSystem& sys);

}  // namespace coherentk

#endif
