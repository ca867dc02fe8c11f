#pragma once

#include "majorana/special_functions.hpp"
#include "majorana/types.hpp"

#include <Eigen/Core>

#include <vector>

namespace majorana {

/// Angular and radial quadrature for fields in spherical coordinates
/// x = r(sinθcosφ, sinθsinφ, cosθ).
///
/// Radial nodes r_i = i·Δr, i = 1..nr, Δr = rmax/nr, weights r²Δr with the
/// last node halved. θ nodes are Gauss–Legendre in cosθ; φ nodes are uniform
/// on [-π, π) with weight 2π/nphi. Angular points are stored θ-major.
struct SphericalGrid {
  int nr = 0;
  double rmax = 0.0;
  std::vector<double> r;
  std::vector<double> r_weight;

  int ntheta = 0;
  GaussLegendre cos_theta;
  std::vector<double> theta;

  int nphi = 0;
  std::vector<double> phi;
  double phi_weight = 0.0;

  static SphericalGrid make(int nr, double rmax, int ntheta, int nphi);

  std::size_t angular_size() const { return static_cast<std::size_t>(ntheta) * nphi; }
  std::size_t size() const { return static_cast<std::size_t>(nr) * angular_size(); }
  std::size_t angular_index(int it, int ip) const {
    return static_cast<std::size_t>(it) * nphi + ip;
  }
  std::size_t index(int ir, int it, int ip) const {
    return static_cast<std::size_t>(ir) * angular_size() + angular_index(it, ip);
  }
  double angular_weight(int it) const { return cos_theta.weights[it] * phi_weight; }
};

/// Spinor samples on a SphericalGrid, radial-major (see SphericalGrid::index).
struct SphericalField {
  SphericalGrid grid;
  double mass = 0.0;
  std::vector<Spinor4> values;

  static SphericalField zeros(const SphericalGrid& grid, double mass);
  /// Σ |Ψ|² r² dr dΩ.
  double norm_squared() const;
  /// Σ Φᵀ Ψ r² dr dΩ over the shared grid.
  double inner(const SphericalField& other) const;
};

/// Total angular momentum label: l ≥ 1, -l ≤ μ ≤ l-1.
struct AngularMode {
  int l = 1;
  int mu = 0;

  bool valid() const { return l >= 1 && mu >= -l && mu <= l - 1; }
};

/// All modes with 1 ≤ l ≤ lmax, ordered by l then μ.
std::vector<AngularMode> angular_modes(int lmax);
/// Position of `mode` in angular_modes(): l(l-1) + μ + l.
std::size_t mode_index(const AngularMode& mode);

Vec3 unit_vector(double theta, double phi);

/// Spin operators σ^k = γ^kγ⁵, k = 1..3.
const RealMatrix4& sigma(int k);
/// σ^r = x̂_k σ^k.
RealMatrix4 sigma_r(double theta, double phi);
/// iγ^r = x̂_k iγ^k.
RealMatrix4 gamma_r(double theta, double phi);
/// (1 ± σ³)/2.
const RealMatrix4& spin_up_projector();
const RealMatrix4& spin_down_projector();

/// N_lm P_l^m(cosθ) · rotor(mφ). Zero when |m| > l. Throws std::out_of_range for l < 0.
RealMatrix4 majorana_Y(int l, int m, double theta, double phi);

/// The Majorana spherical matrix Ω_{lμ}(θ, φ). Throws std::out_of_range for invalid modes.
RealMatrix4 omega_matrix(const AngularMode& mode, double theta, double phi);

/// Spectral derivatives on the angular part of a SphericalGrid.
///
/// φ derivatives are exact for trigonometric degree < nphi/2 (the Nyquist
/// mode is dropped). θ derivatives go through the φ-Fourier modes: an even
/// mode is a polynomial in cosθ, an odd mode is sinθ times one, and the
/// polynomial is differentiated exactly up to degree `band`.
class AngularDifferentiator {
 public:
  AngularDifferentiator(const SphericalGrid& grid, int band);
  explicit AngularDifferentiator(const SphericalGrid& grid)
      : AngularDifferentiator(grid, grid.ntheta - 1) {}

  /// Columns of `f` are scalar functions sampled at the angular points.
  Eigen::MatrixXd d_phi(const Eigen::MatrixXd& f) const;
  Eigen::MatrixXd d_theta(const Eigen::MatrixXd& f) const;
  /// k-th component (k = 1..3) of r×∇ on the unit sphere.
  Eigen::MatrixXd cross_grad(const Eigen::MatrixXd& f, int k) const;

  int ntheta() const { return ntheta_; }
  int nphi() const { return nphi_; }

 private:
  int ntheta_;
  int nphi_;
  std::vector<double> theta_;
  std::vector<double> phi_;
  Eigen::MatrixXd dphi_;  // nphi × nphi periodic spectral derivative
  Eigen::MatrixXd dxi_;   // ntheta × ntheta derivative in cosθ
};

/// L_k = -iγ⁰ (r×∇)_k applied to a matrix-valued angular function.
std::vector<RealMatrix4> angular_momentum(const AngularDifferentiator& d,
                                          const std::vector<RealMatrix4>& f, int k);
/// L_k applied to a spinor-valued angular function.
std::vector<Spinor4> angular_momentum(const AngularDifferentiator& d,
                                      const std::vector<Spinor4>& f, int k);
/// L_k applied shell by shell to a spherical field.
SphericalField angular_momentum(const AngularDifferentiator& d, const SphericalField& field, int k);

/// σ·L = Σ_k σ^k L_k.
std::vector<RealMatrix4> sigma_dot_L(const AngularDifferentiator& d,
                                     const std::vector<RealMatrix4>& f);

/// Samples f(θ, φ) at every angular point of the grid.
template <class F>
std::vector<RealMatrix4> sample_angular(const SphericalGrid& grid, F&& f) {
  std::vector<RealMatrix4> out(grid.angular_size());
  for (int it = 0; it < grid.ntheta; ++it)
    for (int ip = 0; ip < grid.nphi; ++ip)
      out[grid.angular_index(it, ip)] = f(grid.theta[it], grid.phi[ip]);
  return out;
}

/// Σ_angles Aᵀ B w over the angular grid.
RealMatrix4 angular_inner(const SphericalGrid& grid, const std::vector<RealMatrix4>& a,
                          const std::vector<RealMatrix4>& b);

}  // namespace majorana
