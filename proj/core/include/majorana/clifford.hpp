#pragma once

#include "majorana/types.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace majorana {

inline constexpr std::size_t kBasisSize = 16;
inline constexpr std::size_t kGroupSize = 32;

/// Indices into the 16-element basis. The order is fixed:
/// 1, iγ⁰..iγ³, iγ⁵, γ⁰γ¹..γ⁰γ³, iγ⁵γ⁰γ¹..iγ⁵γ⁰γ³, γ⁰γ⁵, γ¹γ⁵..γ³γ⁵.
namespace basis {
inline constexpr std::size_t kIdentity = 0;
inline constexpr std::size_t kGamma0 = 1;  // iγ⁰; iγʲ is kGamma0 + j
inline constexpr std::size_t kGamma5 = 5;  // iγ⁵
inline constexpr std::size_t kBoost1 = 6;  // γ⁰γʲ is kBoost1 + j - 1
inline constexpr std::size_t kRotation1 = 9;  // iγ⁵γ⁰γʲ is kRotation1 + j - 1
inline constexpr std::size_t kGamma0Gamma5 = 12;
inline constexpr std::size_t kSigma1 = 13;  // γʲγ⁵ is kSigma1 + j - 1

inline constexpr std::size_t gamma(int mu) { return kGamma0 + static_cast<std::size_t>(mu); }
inline constexpr std::size_t boost(int j) { return kBoost1 + static_cast<std::size_t>(j - 1); }
inline constexpr std::size_t rotation(int j) { return kRotation1 + static_cast<std::size_t>(j - 1); }
inline constexpr std::size_t sigma(int j) { return kSigma1 + static_cast<std::size_t>(j - 1); }
}  // namespace basis

/// A signed basis element ±A_i; the 32 of them form the finite group Γ₂.
struct GroupElement {
  std::size_t index;
  int sign;
};

/// A real 4x4 representation of the Majorana matrices together with the
/// products derived from it.
struct MajoranaRep {
  std::array<RealMatrix4, 4> gamma;  // iγ^μ
  RealMatrix4 gamma5;                // iγ⁵ = -γ⁰γ¹γ²γ³
  std::array<RealMatrix4, kBasisSize> basis;
  /// +1 if the element squares to +1 (the set Γ₊), -1 if it squares to -1 (Γ₋).
  std::array<int, kBasisSize> square_sign;
  std::array<GroupElement, kGroupSize> group;

  /// Builds every derived product from four generators. The generators are
  /// not checked; see clifford_residual().
  static MajoranaRep from_generators(const std::array<RealMatrix4, 4>& gamma);

  RealMatrix4 element(const GroupElement& g) const { return g.sign * basis[g.index]; }
  RealMatrix4 inverse(const GroupElement& g) const {
    return (g.sign * square_sign[g.index]) * basis[g.index];
  }

  /// Conjugated copy Q·A·Qᵀ of every matrix, for an orthogonal Q.
  MajoranaRep conjugated(const RealMatrix4& q) const;
};

/// Human-readable label for basis element i, e.g. "iγ⁵γ⁰γ²".
std::string_view basis_label(std::size_t index);

/// The concrete integer-entried Majorana basis used throughout the library.
const MajoranaRep& canonical_rep();
MajoranaRep build_canonical_rep();

/// The four generators of the canonical basis with integer entries, for
/// exact checks that must not touch floating point.
std::array<Eigen::Matrix4i, 4> canonical_integer_gammas();
Eigen::Matrix4i canonical_integer_gamma5();

RealMatrix4 anticommutator(const RealMatrix4& a, const RealMatrix4& b);
RealMatrix4 commutator(const RealMatrix4& a, const RealMatrix4& b);

/// max over μ,ν of |{iγ^μ, iγ^ν} + 2g^{μν}·1|.
double clifford_residual(const MajoranaRep& rep);

/// Index of the basis element within Frobenius distance `tol` of `a`.
std::optional<std::size_t> find_basis_element(const RealMatrix4& a, const MajoranaRep& rep,
                                              double tol = 1e-9);

/// Index of the group element ±A_i within Frobenius distance `tol` of `a`.
std::optional<GroupElement> find_group_element(const RealMatrix4& a, const MajoranaRep& rep,
                                               double tol = 1e-9);

struct OmegaSets {
  std::vector<std::size_t> commuting;      // Ω₊(A), as basis indices
  std::vector<std::size_t> anticommuting;  // Ω₋(A)
};

/// Partitions the basis into the elements that commute and anticommute with A.
/// Throws std::invalid_argument if A is not a basis element.
OmegaSets omega_sets(const RealMatrix4& a, const MajoranaRep& rep);

struct GramReport {
  Eigen::Matrix<double, 16, 16> gram;  // G_ij = tr(A_iᵀ A_j)
  double max_deviation;                // max |G - 4·1|
  bool pass;
};

/// Linear independence of the basis through its Gram matrix.
GramReport verify_basis_independence(const MajoranaRep& rep, double tol = 0.0);

/// Real similarity S with S·A(iγ^μ) = B(iγ^μ)·S and |det S| = 1, built by
/// averaging seed matrices over Γ₂. The overall sign is not fixed.
/// Throws std::runtime_error if no seed gives a nonsingular average.
RealMatrix4 intertwiner(const MajoranaRep& rep_a, const MajoranaRep& rep_b);

/// e^{iγ⁰·angle} = cos(angle)·1 + sin(angle)·iγ⁰ in the canonical basis; the
/// real-matrix stand-in for the phase e^{i·angle}.
RealMatrix4 rotor(double angle);

/// iγ⁰·v in the canonical basis without forming the matrix.
inline Spinor4 apply_gamma0(const Spinor4& v) { return {v[2], v[3], -v[0], -v[1]}; }

/// rotor(angle)·v.
inline Spinor4 apply_rotor(double angle, const Spinor4& v) {
  return std::cos(angle) * v + std::sin(angle) * apply_gamma0(v);
}

/// Flips the sign of `s` so that its first nonzero entry (row-major) is positive.
RealMatrix4 pin_sign(const RealMatrix4& s, double zero_tol = 1e-12);

}  // namespace majorana
