#pragma once

#include "majorana/clifford.hpp"
#include "majorana/types.hpp"

#include <array>
#include <optional>
#include <vector>

namespace majorana {

/// An element of Pin(3,1) acting on Majorana spinors, with the two sign flags
/// a, b defined by (iγ⁵)S = a·S(iγ⁵) and (iγ⁰)S = b·S⁻ᵀ(iγ⁰).
/// a = b = +1 exactly on Spin⁺(3,1).
struct PinElement {
  RealMatrix4 matrix = RealMatrix4::Identity();
  int flag_a = 1;
  int flag_b = 1;

  bool proper_orthochronous() const { return flag_a == 1 && flag_b == 1; }
};

PinElement operator*(const PinElement& s, const PinElement& t);
PinElement operator-(const PinElement& s);

/// A Lorentz matrix Λ^μ_ν, index order (t, x, y, z).
struct LorentzMatrix {
  RealMatrix4 entries = RealMatrix4::Identity();
};

inline LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
  return {a.entries * b.entries};
}

/// max |ΛᵀgΛ − g|.
double metric_residual(const LorentzMatrix& lambda);

struct BoostParams {
  Vec3 b = Vec3::Zero();
};

struct RotationParams {
  Vec3 theta = Vec3::Zero();
};

/// exp(b^j γ⁰γʲ) in closed form. Λ of the result is a boost of rapidity 2|b|.
PinElement boost(const BoostParams& params);

/// exp(θ^j iγ⁵γ⁰γʲ) in closed form. Λ of the result rotates by angle 2|θ|.
PinElement rotation(const RotationParams& params);

/// Λ(S) from S⁻¹(iγ^μ)S = Λ^μ_ν iγ^ν. Throws std::domain_error when the
/// conjugates leave the span of the iγ^ν by more than 1e-8.
LorentzMatrix lambda_of(const PinElement& s);
LorentzMatrix lambda_of(const RealMatrix4& s);

struct PinFlags {
  int a;
  int b;
  /// Basis index of the coset representative d ∈ {1, iγ⁵, iγ⁰, γ⁰γ⁵}
  /// with S ∈ ±d·Spin⁺(3,1).
  std::size_t coset;
};

/// Flags of S, or nullopt when S is not in Pin(3,1). Relations are tested
/// with tolerance `tol` relative to the size of S.
std::optional<PinFlags> pin_flags(const RealMatrix4& s, double tol = 1e-8);

/// Wraps a matrix as a PinElement. Throws std::domain_error if it is not one.
PinElement make_pin_element(const RealMatrix4& s);

struct PolarFactors {
  PinElement theta;  // orthogonal factor
  PinElement pi;     // symmetric positive definite factor
  RotationParams rotation;
  BoostParams boost;
  double reconstruction_error;  // max |S − Θ·Π|
};

/// S = Θ·Π with Θ = exp(θ^j iγ⁵γ⁰γʲ) and Π = exp(b^j γ⁰γʲ).
/// Throws std::domain_error if SᵀS is not positive definite.
PolarFactors polar_decompose(const PinElement& s);

/// Dimension of {M ∈ span : [M, G] = 0 for every G in generators}.
int commutant_dimension(const std::vector<RealMatrix4>& span,
                        const std::vector<RealMatrix4>& generators);

/// The ten symmetric basis elements 1, γ⁰γʲ, iγʲ, γʲγ⁵.
std::vector<RealMatrix4> symmetric_span();
std::vector<RealMatrix4> boost_generators();
std::vector<RealMatrix4> rotation_generators();

struct CommutantReport {
  int symmetric_dim;                 // over the symmetric span, all six generators
  int symmetric_dim_rotations_only;  // over the symmetric span, rotations only
  int symmetric_dim_boosts_only;
  int full_dim;  // over all 16 basis elements
  int full_dim_rotations_only;
  int full_dim_boosts_only;
  bool identity_commutes;
};

CommutantReport commutant_check();

/// The discrete subgroup Δ = ±{1, iγ⁰, iγ⁵, γ⁰γ⁵}.
std::array<RealMatrix4, 8> discrete_subgroup();

}  // namespace majorana
