#pragma once

#include "majorana/spherical.hpp"
#include "majorana/types.hpp"

#include <vector>

namespace majorana {

/// Uniform radial momentum nodes p_k = k·Δp, k = 1..np, with Δp = pmax/np.
struct MomentumNodes {
  std::vector<double> p;
  double dp = 0.0;

  static MomentumNodes make(int np, double pmax);
  /// pmax = π·nr/rmax for the given grid.
  static MomentumNodes for_grid(const SphericalGrid& grid, int np);
};

/// Coefficients ψ(p_k, l, μ), stored as values[k·modes + mode_index(l, μ)].
struct HankelSpectrum {
  MomentumNodes nodes;
  int lmax = 0;
  double mass = 0.0;
  std::vector<Spinor4> values;
  /// Fraction of the input norm in the outer tenth of the radial range.
  double tail_fraction = 0.0;

  static HankelSpectrum zeros(const MomentumNodes& nodes, int lmax, double mass);
  std::size_t mode_count() const { return static_cast<std::size_t>(lmax) * (lmax + 1); }
  std::size_t index(std::size_t k, const AngularMode& mode) const {
    return k * mode_count() + mode_index(mode);
  }
  /// Integration weight (E+m)/(Eπ)·Δp of node k.
  double weight(std::size_t k) const;
  /// Σ weight·|ψ|².
  double norm_squared() const;
};

/// Λ(p, l, μ, r, θ, φ) =
///   (p j_l + (E-m) j_{l-1} iγʳ) Ω_{lμ} (1+σ³)/2 + (p j_{l-1} - (E-m) j_l iγʳ) Ω_{lμ} (1-σ³)/2.
RealMatrix4 hankel_kernel(double p, const AngularMode& mode, double r, double theta, double phi,
                          double m);

/// Forward and inverse Hankel-Majorana transforms on a fixed grid, with the
/// angular matrices and Bessel values tabulated once.
class HankelTransform {
 public:
  HankelTransform(const SphericalGrid& grid, const MomentumNodes& nodes, int lmax, double mass);

  /// ψ(p,l,μ) = Σ r²dr dΩ Λᵀ Ψ.
  HankelSpectrum forward(const SphericalField& field) const;
  /// Ψ(r,θ,φ) = Σ_{l,μ} Σ_k (E+m)/(Eπ) Δp Λ ψ.
  SphericalField inverse(const HankelSpectrum& spec) const;

  const SphericalGrid& grid() const { return grid_; }
  const MomentumNodes& nodes() const { return nodes_; }
  int lmax() const { return lmax_; }
  double mass() const { return mass_; }

 private:
  double bessel(std::size_t k, std::size_t ir, int l) const {
    return bessel_[(k * grid_.r.size() + ir) * static_cast<std::size_t>(lmax_ + 1) + l];
  }

  SphericalGrid grid_;
  MomentumNodes nodes_;
  int lmax_;
  double mass_;
  std::vector<AngularMode> modes_;
  std::vector<RealMatrix4> omega_;     // [mode][angle]
  std::vector<RealMatrix4> gamma_r_;   // [angle]
  std::vector<double> bessel_;         // [k][ir][l]
};

HankelSpectrum forward_hankel(const SphericalField& field, int lmax, const MomentumNodes& nodes);
SphericalField inverse_hankel(const HankelSpectrum& spec, const SphericalGrid& grid);

/// ψ(p,l,μ) ↦ rotor(-E_p t) ψ(p,l,μ).
HankelSpectrum evolve_hankel(const HankelSpectrum& spec, double t);

/// The reconstructed solution Σ weight·Λ·rotor(-E_p t)·ψ at an arbitrary point.
Spinor4 evaluate_hankel(const HankelSpectrum& spec, const Vec3& x, double t);

/// Space-time spectra: one HankelSpectrum per frequency p⁰ = 2πk/T,
/// k = -nt/2 .. nt/2-1, on a periodic time grid t_j = j·T/nt.
struct SpacetimeHankelSpectrum {
  int nt = 0;
  double period = 0.0;
  std::vector<HankelSpectrum> frequencies;
};

/// ψ'(p⁰,p,l,μ) = Σ_j rotor(p⁰ t_j) ψ(t_j,p,l,μ) dt over time slices of the field.
SpacetimeHankelSpectrum spacetime_hankel_forward(const HankelTransform& transform,
                                                 const std::vector<SphericalField>& slices,
                                                 double period);
std::vector<SphericalField> spacetime_hankel_inverse(const HankelTransform& transform,
                                                     const SpacetimeHankelSpectrum& spec);

}  // namespace majorana
