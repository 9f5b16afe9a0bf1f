#ifndef COHERENTK_TMATRIX_HPP
#define COHERENTK_TMATRIX_HPP

// Host media, mixture statistics, and the modal transition coefficients
// T_n^{qp} of single-sphere scattering with wave conversion.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "coherentk/specfun.hpp"

namespace coherentk {

// Scatterer statistics: number density, sphere radius and hole radius of the
// pair correlation. The hole radius must exceed one sphere diameter strictly.
class MixtureSpec {
public:
  MixtureSpec(double n0, double radius_a, double hole_b);

  static MixtureSpec from_volume_fraction(double phi, double radius_a, double hole_b);

  double n0() const { return n0_; }
  double radius_a() const { return radius_a_; }
  double hole_b() const { return hole_b_; }
  double volume_fraction() const;

  // epsilon = -4 i n0, the expansion parameter of the modal system.
  cplx epsilon() const { return cplx(0.0, -4.0 * n0_); }

private:
  double n0_;
  double radius_a_;
  double hole_b_;
};

// One bulk wave of the host: either k = omega/speed + i*attenuation or a
// tabulated (omega -> k) curve interpolated piecewise-linearly in (Re, Im).
struct HostWave {
  std::string label;
  bool tabulated = false;
  double speed = 0.0;        // m/s
  double attenuation = 0.0;  // Np/m, frequency-independent part
  std::vector<std::array<double, 3>> table;  // rows {omega, Re k, Im k}, omega ascending
};

class HostMedium {
public:
  explicit HostMedium(std::vector<HostWave> waves);

  int wave_count() const { return static_cast<int>(waves_.size()); }
  const std::vector<HostWave>& waves() const { return waves_; }
  const std::string& label(int p) const { return waves_.at(p).label; }

  // Complex wavenumber of wave p (0-based) at omega. Tabulated waves refuse
  // to extrapolate outside their omega range.
  cplx wavenumber(int p, double omega) const;

  std::vector<cplx> wavenumbers(double omega) const;

private:
  std::vector<HostWave> waves_;
};

// Modal scattering coefficients T_n^{qp} for orders 0..n_max; entry (q, p)
// of order n converts an incident regular wave of type p into an outgoing
// wave of type q.
class TMatrixSet {
public:
  TMatrixSet(std::vector<std::string> labels, double radius_a, double omega,
             std::vector<Eigen::MatrixXcd> orders, double decay_floor = 1e-14);

  int wave_count() const { return wave_count_; }
  int n_max() const { return static_cast<int>(orders_.size()) - 1; }
  double radius_a() const { return radius_a_; }
  double omega() const { return omega_; }
  const std::vector<std::string>& labels() const { return labels_; }

  cplx coeff(int n, int q, int p) const { return orders_.at(n)(q, p); }
  const Eigen::MatrixXcd& order(int n) const { return orders_.at(n); }

  double decay_floor() const { return decay_floor_; }
  bool under_truncated() const { return under_truncated_; }

  // Largest |T_n^{qp}| over q, p at order n.
  double order_magnitude(int n) const;

private:
  std::vector<std::string> labels_;
  double radius_a_;
  double omega_;
  std::vector<Eigen::MatrixXcd> orders_;
  double decay_floor_;
  bool under_truncated_;
  int wave_count_;
};

// JSON file I/O. The file carries an explicit `convention` field; entries
// declared "linton-martin" are negated on load (Z_nu = -T_nu relation
// between the two sign conventions in the literature).
TMatrixSet load_tmatrix(const std::string& path);
void save_tmatrix(const TMatrixSet& t, const std::string& path);

// Single fluid sphere in a fluid host (P = 1): T_n from continuity of
// pressure and normal displacement at r = a. Ratios are sphere/host.
// n_max < 0 selects the smallest truncation meeting the decay floor.
TMatrixSet fluid_sphere_tmatrix(cplx k_host, double density_ratio, double speed_ratio,
                                double radius_a, double omega, int n_max = -1,
                                double decay_floor = 1e-14);

// Convenience wrapper on a P=1 host described by absolute material constants.
TMatrixSet fluid_sphere_tmatrix(const HostMedium& host, double omega, double host_density,
                                double sphere_density, double sphere_speed, double radius_a,
                                int n_max = -1, double decay_floor = 1e-14);

// True iff every off-diagonal |T_n^{qp}| is <= tol; routes the P = 1 fast path.
bool is_decoupled(const TMatrixSet& t, double tol);

}  // namespace coherentk

#endif
