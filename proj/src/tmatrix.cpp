#include "coherentk/tmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "coherentk/errors.hpp"

namespace coherentk {

using nlohmann::json;

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

constexpr double kPi = 3.14159265358979323846;

}  // namespace

MixtureSpec::MixtureSpec(double n0, double radius_a, double hole_b)
    : n0_(n0), radius_a_(radius_a), hole_b_(hole_b) {
  if (!(n0 >= 0.0) || !std::isfinite(n0))
    throw std::invalid_argument("MixtureSpec: number density must be >= 0");
  if (!(radius_a > 0.0))
    throw std::invalid_argument("MixtureSpec: sphere radius must be > 0");
  if (!(hole_b > 2.0 * radius_a))
    throw std::invalid_argument("MixtureSpec: hole radius b must exceed 2a strictly");
}

MixtureSpec MixtureSpec::from_volume_fraction(double phi, double radius_a, double hole_b) {
  if (!(radius_a > 0.0))
    throw std::invalid_argument("MixtureSpec: sphere radius must be > 0");
  return MixtureSpec(3.0 * phi / (4.0 * kPi * radius_a * radius_a * radius_a),
                     radius_a, hole_b);
}

double MixtureSpec::volume_fraction() const {
  return 4.0 / 3.0 * kPi * radius_a_ * radius_a_ * radius_a_ * n0_;
}

HostMedium::HostMedium(std::vector<HostWave> waves) : waves_(std::move(waves)) {
  if (waves_.empty() || waves_.size() > 3)
    throw std::invalid_argument("HostMedium: wave count must be 1..3");
  // Canonical ordering c=1, s=2, th=3 when the standard labels are used.
  const std::vector<std::string> canon{"c", "s", "th"};
  int last_rank = -1;
  for (const auto& w : waves_) {
    const auto it = std::find(canon.begin(), canon.end(), w.label);
    if (it != canon.end()) {
      const int rank = static_cast<int>(it - canon.begin());
      if (rank <= last_rank)
        throw std::invalid_argument("HostMedium: waves must be ordered c, s, th");
      last_rank = rank;
    }
    if (w.tabulated) {
      if (w.table.empty())
        throw std::invalid_argument("HostMedium: empty wavenumber table for " + w.label);
      for (size_t i = 0; i < w.table.size(); ++i) {
        if (w.table[i][2] < 0.0)
          throw std::invalid_argument("HostMedium: Im k < 0 in table for " + w.label);
        if (i > 0 && !(w.table[i][0] > w.table[i - 1][0]))
          throw std::invalid_argument("HostMedium: table omegas must be ascending for " +
                                      w.label);
      }
    } else {
      if (!(w.speed > 0.0))
        throw std::invalid_argument("HostMedium: speed must be > 0 for " + w.label);
      if (w.attenuation < 0.0)
        throw std::invalid_argument("HostMedium: attenuation must be >= 0 for " + w.label);
    }
  }
}

cplx HostMedium::wavenumber(int p, double omega) const {
  const HostWave& w = waves_.at(p);
  if (!(omega > 0.0))
    throw std::domain_error("HostMedium: omega must be > 0");
  if (!w.tabulated) return cplx(omega / w.speed, w.attenuation);

  const auto& tab = w.table;
  if (omega < tab.front()[0] || omega > tab.back()[0])
    throw std::domain_error("HostMedium: omega " + std::to_string(omega) +
                            " outside table range for wave " + w.label +
                            " (no extrapolation)");
  auto hi = std::lower_bound(tab.begin(), tab.end(), omega,
                             [](const std::array<double, 3>& row, double o) {
                               return row[0] < o;
                             });
  if (hi == tab.begin()) return cplx((*hi)[1], (*hi)[2]);
  const auto lo = hi - 1;
  if (hi == tab.end()) return cplx((*lo)[1], (*lo)[2]);
  const double t = (omega - (*lo)[0]) / ((*hi)[0] - (*lo)[0]);
  return cplx((1.0 - t) * (*lo)[1] + t * (*hi)[1],
              (1.0 - t) * (*lo)[2] + t * (*hi)[2]);
}

std::vector<cplx> HostMedium::wavenumbers(double omega) const {
  std::vector<cplx> ks(waves_.size());
  for (int p = 0; p < wave_count(); ++p) ks[p] = wavenumber(p, omega);
  return ks;
}

TMatrixSet::TMatrixSet(std::vector<std::string> labels, double radius_a, double omega,
                       std::vector<Eigen::MatrixXcd> orders, double decay_floor)
    : labels_(std::move(labels)),
      radius_a_(radius_a),
      omega_(omega),
      orders_(std::move(orders)),
      decay_floor_(decay_floor) {
  if (orders_.empty()) throw std::invalid_argument("TMatrixSet: no orders");
  const int P = static_cast<int>(orders_[0].rows());
  if (P < 1 || P > 3 || orders_[0].cols() != P)
    throw std::invalid_argument("TMatrixSet: order 0 must be PxP with P in 1..3");
  if (static_cast<int>(labels_.size()) != P)
    throw std::invalid_argument("TMatrixSet: label count must equal P");
  if (!(radius_a_ > 0.0)) throw std::invalid_argument("TMatrixSet: radius must be > 0");
  if (!(decay_floor_ > 0.0)) throw std::invalid_argument("TMatrixSet: decay floor must be > 0");
  for (size_t n = 0; n < orders_.size(); ++n) {
    if (orders_[n].rows() != P || orders_[n].cols() != P)
      throw std::invalid_argument("TMatrixSet: inconsistent matrix dimensions at order " +
                                  std::to_string(n));
    for (int q = 0; q < P; ++q)
      for (int p = 0; p < P; ++p)
        if (!finite(orders_[n](q, p)))
          throw std::invalid_argument("TMatrixSet: non-finite entry at order " +
                                      std::to_string(n));
  }
  wave_count_ = P;
  under_truncated_ = order_magnitude(n_max()) >= decay_floor_;
}

double TMatrixSet::order_magnitude(int n) const {
  return orders_.at(n).cwiseAbs().maxCoeff();
}

namespace {

json tmatrix_to_json(const TMatrixSet& t) {
  json j;
  j["P"] = t.wave_count();
  j["labels"] = t.labels();
  j["radius_a"] = t.radius_a();
  j["omega"] = t.omega();
  j["convention"] = "paper";
  json orders = json::array();
  for (int n = 0; n <= t.n_max(); ++n) {
    json order = json::array();
    for (int q = 0; q < t.wave_count(); ++q) {
      json row = json::array();
      for (int p = 0; p < t.wave_count(); ++p) {
        const cplx v = t.coeff(n, q, p);
        row.push_back(json::array({v.real(), v.imag()}));
      }
      order.push_back(row);
    }
    orders.push_back(order);
  }
  j["orders"] = orders;
  return j;
}

}  // namespace

TMatrixSet load_tmatrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("load_tmatrix: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("load_tmatrix: " + path + ": " + e.what());
  }
  for (const char* key : {"P", "labels", "radius_a", "convention", "orders"})
    if (!j.contains(key))
      throw parse_error("load_tmatrix: missing required field '" + std::string(key) + "'");

  const int P = j["P"].get<int>();
  if (P < 1 || P > 3) throw parse_error("load_tmatrix: P must be 1, 2 or 3");
  const auto labels = j["labels"].get<std::vector<std::string>>();
  if (static_cast<int>(labels.size()) != P)
    throw parse_error("load_tmatrix: labels count does not match P");
  const double radius_a = j["radius_a"].get<double>();
  const double omega = j.value("omega", 0.0);
  const std::string convention = j["convention"].get<std::string>();
  if (convention != "paper" && convention != "linton-martin")
    throw parse_error("load_tmatrix: convention must be 'paper' or 'linton-martin'");
  const double sign = (convention == "linton-martin") ? -1.0 : 1.0;

  if (!j["orders"].is_array() || j["orders"].empty())
    throw parse_error("load_tmatrix: orders must be a non-empty array");
  std::vector<Eigen::MatrixXcd> orders;
  orders.reserve(j["orders"].size());
  for (size_t n = 0; n < j["orders"].size(); ++n) {
    const json& jn = j["orders"][n];
    if (!jn.is_array() || static_cast<int>(jn.size()) != P)
      throw parse_error("load_tmatrix: order " + std::to_string(n) +
                        " does not have P rows");
    Eigen::MatrixXcd m(P, P);
    for (int q = 0; q < P; ++q) {
      if (!jn[q].is_array() || static_cast<int>(jn[q].size()) != P)
        throw parse_error("load_tmatrix: order " + std::to_string(n) +
                          " does not have P columns in row " + std::to_string(q));
      for (int p = 0; p < P; ++p) {
        const json& entry = jn[q][p];
        if (!entry.is_array() || entry.size() != 2)
          throw parse_error("load_tmatrix: order " + std::to_string(n) +
                            " entry is not a [re, im] pair");
        m(q, p) = sign * cplx(entry[0].get<double>(), entry[1].get<double>());
      }
    }
    orders.push_back(std::move(m));
  }
  try {
    return TMatrixSet(labels, radius_a, omega, std::move(orders));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("load_tmatrix: ") + e.what());
  }
}

void save_tmatrix(const TMatrixSet& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("save_tmatrix: cannot open " + path + " for writing");
  out << tmatrix_to_json(t).dump(1) << "\n";
}

TMatrixSet fluid_sphere_tmatrix(cplx k_host, double density_ratio, double speed_ratio,
                                double radius_a, double omega, int n_max,
                                double decay_floor) {
  if (!(density_ratio > 0.0) || !(speed_ratio > 0.0) || !(radius_a > 0.0))
    throw std::invalid_argument("fluid_sphere_tmatrix: physical parameters must be > 0");
  const cplx x = k_host * radius_a;
  const cplx xs = x / speed_ratio;
  const double ms = density_ratio * speed_ratio;  // (rho_s/rho) * (k/k_s)

  const int cap = (n_max >= 0) ? n_max : 64;
  std::vector<Eigen::MatrixXcd> orders;
  for (int n = 0; n <= cap; ++n) {
    const cplx jx = sph_bessel_j(n, x);
    const cplx jpx = sph_bessel_j_prime(n, x);
    const cplx jxs = sph_bessel_j(n, xs);
    const cplx jpxs = sph_bessel_j_prime(n, xs);
    const cplx hx = sph_hankel1(n, x);
    const cplx hpx = sph_hankel1_prime(n, x);

    const cplx num = jx * jpxs - ms * jxs * jpx;
    const cplx den = ms * jxs * hpx - hx * jpxs;
    if (den == cplx(0.0, 0.0) || !finite(num / den))
      throw conditioning_error(
          "fluid_sphere_tmatrix: singular boundary system at order " + std::to_string(n),
          0.0);
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = num / den;
    orders.push_back(std::move(m));
    if (n_max < 0 && n >= 2 && std::abs(orders.back()(0, 0)) < decay_floor) break;
  }
  return TMatrixSet({"c"}, radius_a, omega, std::move(orders), decay_floor);
}

TMatrixSet fluid_sphere_tmatrix(const HostMedium& host, double omega, double host_density,
                                double sphere_density, double sphere_speed, double radius_a,
                                int n_max, double decay_floor) {
  if (host.wave_count() != 1)
    throw std::invalid_argument("fluid_sphere_tmatrix: host must support a single wave");
  if (!(host_density > 0.0))
    throw std::invalid_argument("fluid_sphere_tmatrix: host density must be > 0");
  const cplx k = host.wavenumber(0, omega);
  const double c_host = omega / k.real();
  return fluid_sphere_tmatrix(k, sphere_density / host_density, sphere_speed / c_host,
                              radius_a, omega, n_max, decay_floor);
}

bool is_decoupled(const TMatrixSet& t, double tol) {
  for (int n = 0; n <= t.n_max(); ++n)
    for (int q = 0; q < t.wave_count(); ++q)
      for (int p = 0; p < t.wave_count(); ++p)
        if (q != p && std::abs(t.coeff(n, q, p)) > tol) return false;
  return true;
}

}  // namespace coherentk
