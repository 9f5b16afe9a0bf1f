#include "coherentk/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace coherentk {

namespace {

constexpr double kImagOverflowGuard = 700.0;  // sin/exp overflow past ~709

void check_order(int n, const char* who) {
  if (n < 0) throw std::domain_error(std::string(who) + ": order must be >= 0");
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

cplx j0_closed(cplx z) { return std::sin(z) / z; }
cplx j1_closed(cplx z) { return std::sin(z) / (z * z) - std::cos(z) / z; }

// Miller downward recurrence for j_0..j_nmax, normalized against the closed
// forms at order 0 or 1 (whichever is larger in magnitude).
std::vector<cplx> bessel_j_miller(int n_max, cplx z) {
  const int start = n_max + 25 + static_cast<int>(std::abs(z));
  std::vector<cplx> f(static_cast<size_t>(start) + 2);
  f[start + 1] = cplx(0.0, 0.0);
  f[start] = cplx(1e-280, 0.0);
  for (int n = start; n >= 1; --n) {
    f[n - 1] = (2.0 * n + 1.0) / z * f[n] - f[n + 1];
    if (std::abs(f[n - 1]) > 1e250) {
      for (int m = n - 1; m <= start + 1; ++m) f[m] *= 1e-250;
    }
  }
  const cplx j0 = j0_closed(z);
  const cplx j1 = j1_closed(z);
  const cplx scale = (std::abs(j0) >= std::abs(j1)) ? j0 / f[0] : j1 / f[1];
  std::vector<cplx> out(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out[n] = f[n] * scale;
  return out;
}

}  // namespace

std::vector<cplx> sph_bessel_j_all(int n_max, cplx z) {
  check_order(n_max, "sph_bessel_j");
  std::vector<cplx> out(static_cast<size_t>(n_max) + 1);
  if (z == cplx(0.0, 0.0)) {
    out[0] = 1.0;
    return out;
  }
  if (std::abs(z.imag()) > kImagOverflowGuard)
    throw std::range_error("sph_bessel_j: |Im z| too large, value overflows");
  if (std::abs(z) >= static_cast<double>(n_max)) {
    out[0] = j0_closed(z);
    if (n_max >= 1) out[1] = j1_closed(z);
    for (int n = 1; n < n_max; ++n)
      out[n + 1] = (2.0 * n + 1.0) / z * out[n] - out[n - 1];
  } else {
    out = bessel_j_miller(n_max, z);
  }
  if (!finite(out[n_max]))
    throw std::range_error("sph_bessel_j: overflow at order " + std::to_string(n_max));
  return out;
}

cplx sph_bessel_j(int n, cplx z) {
  check_order(n, "sph_bessel_j");
  if (z == cplx(0.0, 0.0)) return n == 0 ? cplx(1.0) : cplx(0.0);
  if (n == 0) return j0_closed(z);
  if (n == 1) return j1_closed(z);
  return sph_bessel_j_all(n, z).back();
}

std::vector<cplx> sph_hankel1_all(int n_max, cplx z) {
  check_order(n_max, "sph_hankel1");
  if (z == cplx(0.0, 0.0))
    throw std::domain_error("sph_hankel1: argument must be nonzero");
  if (std::abs(z.imag()) > kImagOverflowGuard)
    throw std::range_error("sph_hankel1: |Im z| too large, value overflows");
  std::vector<cplx> out(static_cast<size_t>(n_max) + 1);
  const cplx expiz = std::exp(cplx(0.0, 1.0) * z);
  out[0] = cplx(0.0, -1.0) * expiz / z;
  if (n_max >= 1) out[1] = out[0] * (1.0 / z - cplx(0.0, 1.0));
  for (int n = 1; n < n_max; ++n)
    out[n + 1] = (2.0 * n + 1.0) / z * out[n] - out[n - 1];
  if (!finite(out[n_max]))
    throw std::range_error("sph_hankel1: overflow at order " + std::to_string(n_max));
  return out;
}

cplx sph_hankel1(int n, cplx z) { return sph_hankel1_all(n, z).back(); }

cplx sph_bessel_j_prime(int n, cplx z) {
  check_order(n, "sph_bessel_j_prime");
  if (n == 0) return -sph_bessel_j(1, z);
  if (z == cplx(0.0, 0.0)) return n == 1 ? cplx(1.0 / 3.0) : cplx(0.0);
  const auto j = sph_bessel_j_all(n, z);
  return j[n - 1] - (n + 1.0) / z * j[n];
}

cplx sph_hankel1_prime(int n, cplx z) {
  check_order(n, "sph_hankel1_prime");
  const auto h = sph_hankel1_all(n == 0 ? 1 : n, z);
  if (n == 0) return -h[1];
  return h[n - 1] - (n + 1.0) / z * h[n];
}

double legendre_p(int n, double x) {
  check_order(n, "legendre_p");
  if (std::abs(x) > 1.0)
    throw std::domain_error("legendre_p: argument must lie in [-1, 1]");
  double pm1 = 1.0;
  if (n == 0) return pm1;
  double p = x;
  for (int k = 1; k < n; ++k) {
    const double pp1 = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = pp1;
  }
  return p;
}

std::vector<double> legendre_p_all(int n_max, double x) {
  check_order(n_max, "legendre_p");
  if (std::abs(x) > 1.0)
    throw std::domain_error("legendre_p: argument must lie in [-1, 1]");
  std::vector<double> out(static_cast<size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max >= 1) out[1] = x;
  for (int k = 1; k < n_max; ++k)
    out[k + 1] = ((2.0 * k + 1.0) * x * out[k] - k * out[k - 1]) / (k + 1.0);
  return out;
}

std::vector<double> legendre_p_derivative_all(int n_max, double x) {
  const auto p = legendre_p_all(n_max, x);
  std::vector<double> d(static_cast<size_t>(n_max) + 1);
  d[0] = 0.0;
  if (n_max >= 1) d[1] = 1.0;
  for (int k = 1; k < n_max; ++k) d[k + 1] = d[k - 1] + (2.0 * k + 1.0) * p[k];
  return d;
}

double legendre_p_derivative(int n, double x) {
  return legendre_p_derivative_all(n, x).back();
}

namespace {

// A_r = (2r-1)!!/r!, the coefficient entering the Neumann-Adams product
// formula; equivalently (2r choose r)/2^r.
double adams_a(int r) {
  double a = 1.0;
  for (int k = 1; k <= r; ++k) a *= (2.0 * k - 1.0) / k;
  return a;
}

bool triangle_ok(int j1, int j2, int j3) {
  return j3 >= std::abs(j1 - j2) && j3 <= j1 + j2;
}

}  // namespace

double wigner3j_000(int j1, int j2, int j3) {
  if (j1 < 0 || j2 < 0 || j3 < 0)
    throw std::domain_error("wigner3j_000: angular momenta must be >= 0");
  const int J = j1 + j2 + j3;
  if (J % 2 != 0 || !triangle_ok(j1, j2, j3)) return 0.0;
  const int g = J / 2;
  const double value2 =
      adams_a(g - j1) * adams_a(g - j2) * adams_a(g - j3) / (adams_a(g) * (2.0 * g + 1.0));
  const double sign = (g % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(value2);
}

double gaunt0(int n, int nu, int l) {
  if (n < 0 || nu < 0 || l < 0)
    throw std::domain_error("gaunt0: indices must be >= 0");
  const int J = n + nu + l;
  if (J % 2 != 0 || !triangle_ok(n, nu, l)) return 0.0;
  const int g = J / 2;
  // (2l+1) * wigner3j_000^2, multiplied out to avoid the sqrt round trip.
  return (2.0 * l + 1.0) * adams_a(g - n) * adams_a(g - nu) * adams_a(g - l) /
         (adams_a(g) * (2.0 * g + 1.0));
}

double gaunt0_to_orthonormal_factor(int n, int nu, int l) {
  return std::sqrt((2.0 * n + 1.0) * (2.0 * nu + 1.0) /
                   (4.0 * M_PI * (2.0 * l + 1.0)));
}

GauntTable::GauntTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::domain_error("GauntTable: max_n must be >= 0");
  entries_.resize(static_cast<size_t>(max_n + 1) * (max_n + 1));
  for (int n = 0; n <= max_n; ++n) {
    for (int nu = 0; nu <= max_n; ++nu) {
      auto& sup = entries_[static_cast<size_t>(n) * (max_n + 1) + nu];
      sup.reserve(std::min(n, nu) + 1);
      for (int l = std::abs(n - nu); l <= n + nu; l += 2)
        sup.emplace_back(l, gaunt0(n, nu, l));
    }
  }
}

const std::vector<std::pair<int, double>>& GauntTable::support(int n, int nu) const {
  if (n < 0 || nu < 0 || n > max_n_ || nu > max_n_)
    throw std::out_of_range("GauntTable: index exceeds max_n");
  return entries_[static_cast<size_t>(n) * (max_n_ + 1) + nu];
}

double GauntTable::coeff(int n, int nu, int l) const {
  for (const auto& [ll, v] : support(n, nu))
    if (ll == l) return v;
  return 0.0;
}

double GauntTable::sum(int n, int nu) const {
  double s = 0.0;
  for (const auto& [l, v] : support(n, nu)) s += v;
  return s;
}

}  // namespace coherentk
