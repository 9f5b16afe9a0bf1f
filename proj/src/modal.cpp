#include "coherentk/modal.hpp"

#include <cmath>

#include "coherentk/errors.hpp"

namespace coherentk {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sign_pm(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

int default_n_max(const TMatrixSet& t, const Tolerances& tol) {
  for (int n = 0; n <= t.n_max(); ++n) {
    if (t.order_magnitude(n) < tol.default_n_cutoff) return std::min(n, tol.n_max_cap);
  }
  return std::min(t.n_max(), tol.n_max_cap);
}

struct BesselPair {
  std::vector<cplx> f;       // f_0..f_lmax
  std::vector<cplx> fprime;  // derivatives, same range
};

BesselPair bessel_j_with_prime(int l_max, cplx z) {
  BesselPair out;
  out.f = sph_bessel_j_all(l_max + 1, z);
  out.fprime.resize(l_max + 1);
  out.fprime[0] = -out.f[1];
  for (int l = 1; l <= l_max; ++l)
    out.fprime[l] = out.f[l - 1] - (l + 1.0) / z * out.f[l];
  out.f.resize(l_max + 1);
  return out;
}

BesselPair hankel1_with_prime(int l_max, cplx z) {
  BesselPair out;
  out.f = sph_hankel1_all(l_max + 1, z);
  out.fprime.resize(l_max + 1);
  out.fprime[0] = -out.f[1];
  for (int l = 1; l <= l_max; ++l)
    out.fprime[l] = out.f[l - 1] - (l + 1.0) / z * out.f[l];
  out.f.resize(l_max + 1);
  return out;
}

}  // namespace

ModalSystem::ModalSystem(std::vector<cplx> host_k, std::shared_ptr<const TMatrixSet> tmatrix,
                         MixtureSpec mixture, int n_max,
                         std::shared_ptr<const GauntTable> gaunt, Tolerances tol)
    : ks_(std::move(host_k)),
      tmatrix_(std::move(tmatrix)),
      mixture_(mixture),
      tol_(tol),
      gaunt_(std::move(gaunt)) {
  if (!tmatrix_) throw std::invalid_argument("ModalSystem: missing T-matrix");
  if (static_cast<int>(ks_.size()) != tmatrix_->wave_count())
    throw std::invalid_argument("ModalSystem: host wave count differs from T-matrix P");
  for (const cplx k : ks_) {
    if (!(k.real() > 0.0)) throw std::invalid_argument("ModalSystem: Re k must be > 0");
    if (k.imag() < 0.0) throw std::invalid_argument("ModalSystem: Im k must be >= 0");
  }
  n_max_ = (n_max >= 0) ? std::min(n_max, tmatrix_->n_max()) : default_n_max(*tmatrix_, tol_);
  if (!gaunt_ || gaunt_->max_n() < n_max_)
    gaunt_ = std::make_shared<const GauntTable>(n_max_);
  max_k2_ = 0.0;
  for (const cplx k : ks_) max_k2_ = std::max(max_k2_, std::norm(k));
}

std::vector<cplx> y_variables(cplx xi, const std::vector<cplx>& ks) {
  std::vector<cplx> y(ks.size());
  for (size_t p = 0; p < ks.size(); ++p) y[p] = xi * xi - ks[p] * ks[p];
  return y;
}

cplx n_ell(int l, cplx xi, cplx k_p, double b) {
  if (k_p == cplx(0.0, 0.0)) throw std::domain_error("n_ell: k_p must be nonzero");
  if (!(b > 0.0)) throw std::domain_error("n_ell: b must be > 0");
  const cplx zx = xi * b;
  const cplx zk = k_p * b;
  return zx * sph_bessel_j_prime(l, zx) * sph_hankel1(l, zk) -
         zk * sph_bessel_j(l, zx) * sph_hankel1_prime(l, zk);
}

std::vector<cplx> n_ell_all(int l_max, cplx xi, cplx k_p, double b) {
  if (k_p == cplx(0.0, 0.0)) throw std::domain_error("n_ell: k_p must be nonzero");
  if (!(b > 0.0)) throw std::domain_error("n_ell: b must be > 0");
  const cplx zx = xi * b;
  const cplx zk = k_p * b;
  const BesselPair j = bessel_j_with_prime(l_max, zx);
  const BesselPair h = hankel1_with_prime(l_max, zk);
  std::vector<cplx> out(l_max + 1);
  for (int l = 0; l <= l_max; ++l)
    out[l] = zx * j.fprime[l] * h.f[l] - zk * j.f[l] * h.fprime[l];
  return out;
}

namespace {

// Sum over the Gaunt support of (N_l - N_wronskian) G(0,nu;0,n;l). The
// subtraction of the exact at-k_p value -i/(k_p b) keeps the bracket of the
// Qbar definition accurate when xi approaches k_p, where the plain form
// cancels to zero against the "-1".
cplx bracket_sum(const GauntTable& gaunt, int n, int nu, const std::vector<cplx>& nl,
                 cplx n_wronskian) {
  cplx s(0.0, 0.0);
  for (const auto& [l, g] : gaunt.support(n, nu)) s += (nl[l] - n_wronskian) * g;
  return s;
}

void check_degenerate(cplx kp2, cplx kq2, const ModalSystem& sys, const char* who) {
  if (std::abs(kp2 - kq2) < sys.tolerances().degeneracy_rel * sys.max_k2())
    throw degeneracy_error(std::string(who) +
                           ": background wavenumbers nearly degenerate, |k_p^2 - k_q^2| "
                           "below threshold");
}

}  // namespace

cplx qbar_general(int n, int nu, int p, cplx xi, const ModalSystem& sys) {
  const cplx k_p = sys.k(p);
  const double b = sys.hole_b();
  const cplx y_p = xi * xi - k_p * k_p;
  if (std::abs(y_p) < sys.tolerances().y_singular_rel * std::norm(k_p))
    throw use_specialization_error(
        "qbar_general: xi too close to k_p, use the at-k_p specialization");
  const auto nl = n_ell_all(n + nu, xi, k_p, b);
  const cplx n_wron = cplx(0.0, -1.0) / (k_p * b);
  const cplx bracket =
      cplx(0.0, 1.0) * k_p * b * bracket_sum(sys.gaunt(), n, nu, nl, n_wron);
  return kPi / (k_p * y_p) * bracket * sign_pm(n + nu);
}

cplx qbar_at_kp_offdiag(int n, int nu, int q, int p, const ModalSystem& sys) {
  if (q == p) throw std::invalid_argument("qbar_at_kp_offdiag: requires q != p");
  const cplx k_p = sys.k(p);
  const cplx k_q = sys.k(q);
  check_degenerate(k_p * k_p, k_q * k_q, sys, "qbar_at_kp_offdiag");
  const double b = sys.hole_b();
  // The braces of the off-diagonal expansion-point value are
  // i/(k_q b) + sum_l G N_l^{(q)}(k_p); fold the constant through the Gaunt
  // sum rule so each term vanishes individually as k_p -> k_q.
  const auto nl = n_ell_all(n + nu, k_p, k_q, b);
  const cplx n_wron = cplx(0.0, -1.0) / (k_q * b);
  const cplx braces = bracket_sum(sys.gaunt(), n, nu, nl, n_wron);
  return cplx(0.0, 1.0) * kPi * b / (k_p * k_p - k_q * k_q) * sign_pm(n + nu) * braces;
}

cplx qbar_at_kp_diag(int n, int nu, int p, const ModalSystem& sys) {
  const cplx k_p = sys.k(p);
  const double b = sys.hole_b();
  const cplx z = k_p * b;
  const int l_max = n + nu;
  const BesselPair j = bessel_j_with_prime(l_max, z);
  const BesselPair h = hankel1_with_prime(l_max, z);
  cplx s(0.0, 0.0);
  for (const auto& [l, g] : sys.gaunt().support(n, nu)) {
    const cplx term = j.fprime[l] * (h.f[l] + z * h.fprime[l]) +
                      (z * z - static_cast<double>(l) * (l + 1.0)) / z * j.f[l] * h.f[l];
    s += g * term;
  }
  return cplx(0.0, -1.0) * kPi * b * b / (2.0 * k_p) * sign_pm(n + nu) * s;
}

cplx qbar_lowfreq_offdiag(int n, int nu, int q, int p, const ModalSystem& sys) {
  if (q == p) throw std::invalid_argument("qbar_lowfreq_offdiag: requires q != p");
  const cplx k_p = sys.k(p);
  const cplx k_q = sys.k(q);
  check_degenerate(k_p * k_p, k_q * k_q, sys, "qbar_lowfreq_offdiag");
  const cplx kappa = k_p / k_q;
  cplx s(0.0, 0.0);
  for (const auto& [l, g] : sys.gaunt().support(n, nu))
    s += g * (std::pow(kappa, l) - 1.0);
  return kPi / (k_q * (k_p * k_p - k_q * k_q)) * sign_pm(n + nu) * s;
}

cplx qbar_lowfreq_diag(int n, int nu, int p, const ModalSystem& sys) {
  const cplx k_p = sys.k(p);
  double s = 0.0;
  for (const auto& [l, g] : sys.gaunt().support(n, nu)) s += l * g;
  return kPi / (2.0 * k_p * k_p * k_p) * sign_pm(n + nu) * s;
}

cplx m_order0(int q, int p, const ModalSystem& sys) {
  cplx s(0.0, 0.0);
  for (int n = 0; n <= sys.n_max(); ++n) s += (2.0 * n + 1.0) * sys.t_coeff(n, q, p);
  return kPi / std::sqrt(sys.k(q) * sys.k(p)) * s;
}

cplx m_order1_diag(int p, const ModalSystem& sys, QbarRegime regime) {
  const int N = sys.n_max();
  const int P = sys.wave_count();
  cplx total(0.0, 0.0);
  for (int q = 0; q < P; ++q) {
    // Qbar^{(q)}(k_p) block for this wave pair.
    Eigen::MatrixXcd qb(N + 1, N + 1);
    for (int n = 0; n <= N; ++n)
      for (int nu = 0; nu <= N; ++nu) {
        if (regime == QbarRegime::general)
          qb(n, nu) = (q == p) ? qbar_at_kp_diag(n, nu, p, sys)
                               : qbar_at_kp_offdiag(n, nu, q, p, sys);
        else
          qb(n, nu) = (q == p) ? qbar_lowfreq_diag(n, nu, p, sys)
                               : qbar_lowfreq_offdiag(n, nu, q, p, sys);
      }
    cplx s(0.0, 0.0);
    for (int n = 0; n <= N; ++n)
      for (int nu = 0; nu <= N; ++nu)
        s += sign_pm(n + nu) * (2.0 * n + 1.0) * (2.0 * nu + 1.0) *
             sys.t_coeff(n, q, p) * qb(n, nu) * sys.t_coeff(nu, p, q);
    total += s;
  }
  return kPi / sys.k(p) * total;
}

Eigen::MatrixXcd m_full_matrix(cplx xi, const ModalSystem& sys) {
  const int N = sys.n_max();
  const int P = sys.wave_count();
  const int D = N + 1;
  const int dim = D * P;
  const cplx eps = sys.epsilon();

  // Block-diagonal Qbar at xi.
  std::vector<Eigen::MatrixXcd> qbar(P);
  for (int p = 0; p < P; ++p) {
    const cplx k_p = sys.k(p);
    const double b = sys.hole_b();
    const cplx y_p = xi * xi - k_p * k_p;
    if (std::abs(y_p) < sys.tolerances().y_singular_rel * std::norm(k_p))
      throw use_specialization_error("m_full: xi too close to k_" + std::to_string(p + 1));
    const auto nl = n_ell_all(2 * N, xi, k_p, b);
    const cplx n_wron = cplx(0.0, -1.0) / (k_p * b);
    const cplx pref = kPi / (k_p * y_p) * cplx(0.0, 1.0) * k_p * b;
    qbar[p].resize(D, D);
    for (int n = 0; n <= N; ++n)
      for (int nu = 0; nu <= N; ++nu)
        qbar[p](n, nu) =
            pref * bracket_sum(sys.gaunt(), n, nu, nl, n_wron) * sign_pm(n + nu);
  }

  // A = I - eps * Qbar * T on the truncated space; block (q, p) of T is
  // diag((2n+1) T_n^{qp}).
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(dim, dim);
  for (int q = 0; q < P; ++q)
    for (int p = 0; p < P; ++p)
      for (int n = 0; n <= N; ++n)
        for (int nu = 0; nu <= N; ++nu)
          A(q * D + n, p * D + nu) -=
              eps * qbar[q](n, nu) * (2.0 * nu + 1.0) * sys.t_coeff(nu, q, p);

  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(dim, P);
  for (int p = 0; p < P; ++p) {
    const cplx pref = std::sqrt(kPi / sys.k(p));
    for (int q = 0; q < P; ++q)
      for (int nu = 0; nu <= N; ++nu)
        rhs(q * D + nu, p) = pref * sign_pm(nu) * (2.0 * nu + 1.0) * sys.t_coeff(nu, q, p);
  }

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  const double rcond = lu.rcond();
  if (!(rcond >= sys.tolerances().rcond_min))
    throw conditioning_error("m_full: resolvent ill-conditioned (rcond estimate " +
                                 std::to_string(rcond) + ")",
                             rcond);
  const Eigen::MatrixXcd X = lu.solve(rhs);

  Eigen::MatrixXcd M(P, P);
  for (int q = 0; q < P; ++q) {
    const cplx pref = std::sqrt(kPi / sys.k(q));
    for (int p = 0; p < P; ++p) {
      cplx s(0.0, 0.0);
      for (int n = 0; n <= N; ++n) s += sign_pm(n) * X(q * D + n, p);
      M(q, p) = pref * s;
    }
  }
  return M;
}

cplx m_full(int q, int p, cplx xi, const ModalSystem& sys) {
  return m_full_matrix(xi, sys)(q, p);
}

}  // namespace coherentk
