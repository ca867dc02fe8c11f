#pragma once

#include "majorana/types.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <vector>

namespace majorana {

/// Periodic cube [-L/2, L/2)³ with n points per axis (n even) and its dual
/// momentum lattice p = 2πk/L, k = -n/2 .. n/2-1. Momentum index q maps to
/// k = q - n/2. Flat index is (i0·n + i1)·n + i2 on both sides.
struct CartesianGrid {
  int n = 0;
  double length = 0.0;

  static CartesianGrid make(int n, double length);

  double dx() const { return length / n; }
  double cell_volume() const { return dx() * dx() * dx(); }
  double box_volume() const { return length * length * length; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
  std::size_t index(int i0, int i1, int i2) const {
    return (static_cast<std::size_t>(i0) * n + i1) * n + i2;
  }
  double coordinate(int i) const { return -0.5 * length + i * dx(); }
  double wavenumber(int q) const;
  /// The wavenumber with the Nyquist component replaced by 0.
  double spectral_wavenumber(int q) const;

  Vec3 position(std::size_t flat) const;
  Vec3 momentum(std::size_t flat) const;
  Vec3 spectral_momentum(std::size_t flat) const;
  /// Flat index of the momentum -p.
  std::size_t negated(std::size_t flat) const;
};

struct CartesianField {
  CartesianGrid grid;
  double mass = 0.0;
  std::vector<Spinor4> values;

  static CartesianField zeros(const CartesianGrid& grid, double mass);
  /// Σ_x |Ψ|² dx³.
  double norm_squared() const;
};

struct MomentumSpectrum {
  CartesianGrid grid;
  double mass = 0.0;
  std::vector<Spinor4> values;
  /// 1 where the kernel is degenerate (massless, zero spectral momentum);
  /// those coefficients are held at zero.
  std::vector<std::uint8_t> degenerate;

  static MomentumSpectrum zeros(const CartesianGrid& grid, double mass);
  /// Σ_p |ψ|² / L³.
  double norm_squared() const;
  std::size_t degenerate_count() const;
  /// Σ E_p |ψ|² / Σ |ψ|².
  double mean_energy() const;
};

/// √(|p|² + m²).
double energy(const Vec3& p, double m);

/// (p̸γ⁰ + m)/√((E+m)·2E) = ((E+m) + p^j (iγʲ)(iγ⁰)) / √((E+m)·2E).
/// Symmetric. Throws std::domain_error when m = 0 and |p| < 1e-12.
RealMatrix4 kernel_amplitude(const Vec3& p, double m);

/// O(p, x) = rotor(-p·x) · kernel_amplitude(p, m).
RealMatrix4 kernel_O(const Vec3& p, const Vec3& x, double m);

/// O on the grid: phase from the grid momentum, amplitude from the spectral
/// momentum. Throws std::domain_error on degenerate modes.
RealMatrix4 grid_kernel(const CartesianGrid& grid, std::size_t momentum, std::size_t position,
                        double m);

bool is_degenerate(const CartesianGrid& grid, std::size_t momentum, double m);

/// ψ(p) = Σ_x O(p,x) Ψ(x) dx³.
MomentumSpectrum forward(const CartesianField& field);
/// Ψ(x) = L⁻³ Σ_p Oᵀ(p,x) ψ(p).
CartesianField inverse(const MomentumSpectrum& spec);

/// ψ(p) ↦ rotor(-E_p t) ψ(p).
MomentumSpectrum evolve(const MomentumSpectrum& spec, double t);

/// Separable rotor transform along all three axes. sign = -1 maps positions to
/// momenta, out(p) = Σ_x rotor(-p·x) in(x)·w; sign = +1 maps momenta to
/// positions, out(x) = Σ_p rotor(p·x) in(p)·w.
std::vector<Spinor4> rotor_dft(const CartesianGrid& grid, const std::vector<Spinor4>& in,
                               int sign, double weight);

// Electron and positron projections. γ⁰ = -i·iγ⁰ is imaginary in a Majorana
// basis, so projected spectra are complex Dirac spinors.

using DiracSpinor = Eigen::Vector4cd;
using ComplexMatrix4 = Eigen::Matrix4cd;

/// Dirac matrix γ^μ = -i·(iγ^μ), μ = 0..3.
ComplexMatrix4 dirac_gamma(int mu);
/// (1 + sign·γ⁰)/2.
ComplexMatrix4 particle_projector(int sign);

struct ComplexSpectrum {
  CartesianGrid grid;
  double mass = 0.0;
  std::vector<DiracSpinor> values;
};

/// Applies (1 ± γ⁰)/2 to every mode.
ComplexSpectrum project_particle(const MomentumSpectrum& spec, int sign);

/// The Majorana-form solution L⁻³ Σ_p (p̸γ⁰+m)/N e^{-iγ⁰ p·x} ψ(p) at time t,
/// extended complex-linearly.
std::vector<DiracSpinor> reconstruct(const ComplexSpectrum& spec, double t);

// Space-time extension: periodic time axis [0, T) with nt points and
// frequencies p⁰ = 2πk/T, k = -nt/2 .. nt/2-1. Time is the slowest index.

struct SpacetimeField {
  CartesianGrid grid;
  int nt = 0;
  double period = 0.0;
  double mass = 0.0;
  std::vector<Spinor4> values;

  static SpacetimeField zeros(const CartesianGrid& grid, int nt, double period, double mass);
  double dt() const { return period / nt; }
  double time(int j) const { return j * dt(); }
  double frequency(int q) const;
};

struct SpacetimeSpectrum {
  CartesianGrid grid;
  int nt = 0;
  double period = 0.0;
  double mass = 0.0;
  std::vector<Spinor4> values;
  std::vector<std::uint8_t> degenerate;  // per spatial momentum
};

/// ψ(p) = Σ_x rotor(p⁰x⁰) O(p⃗,x⃗) Ψ(x) dx⁰ dx³.
SpacetimeSpectrum spacetime_forward(const SpacetimeField& field);
/// Ψ(x) = (T L³)⁻¹ Σ_p Oᵀ(p⃗,x⃗) rotor(-p⁰x⁰) ψ(p).
SpacetimeField spacetime_inverse(const SpacetimeSpectrum& spec);

/// Rotor transform of one time series. sign = +1 maps times to frequencies,
/// out_q = Σ_j rotor(ω_q t_j) in_j·w; sign = -1 maps back,
/// out_j = Σ_q rotor(-ω_q t_j) in_q·w.
std::vector<Spinor4> time_rotor_dft(int nt, double period, const std::vector<Spinor4>& in,
                                    int sign, double weight);

}  // namespace majorana
