#pragma once

#include "majorana/fourier.hpp"
#include "majorana/hankel.hpp"
#include "majorana/spherical.hpp"

#include <iosfwd>
#include <string>

namespace majorana {

// Binary formats, little-endian throughout.
//
// MAJ1: "MAJ1", u32 version = 1, u32 rank (3 or 4), u32 dims per axis,
//       f64 box lengths per axis, f64 mass, then 4 f64 per grid point in
//       row-major axis order. Rank 4 puts time first: dims (nt, n, n, n),
//       lengths (T, L, L, L).
// MAJS: "MAJS", u32 version = 1, u32 nr, u32 ntheta, u32 nphi, f64 rmax,
//       f64 mass, f64 r[nr], f64 cosθ[ntheta], f64 φ[nphi], then 4 f64 per
//       point in (r, θ, φ) order.
//
// Readers throw std::runtime_error on malformed input.

void write_field(std::ostream& out, const CartesianField& field);
void write_field(std::ostream& out, const SpacetimeField& field);
void write_field(std::ostream& out, const SphericalField& field);

CartesianField read_cartesian_field(std::istream& in);
SpacetimeField read_spacetime_field(std::istream& in);
SphericalField read_spherical_field(std::istream& in);

// CSV exports with a header row and values printed with 17 significant digits.

/// x1,x2,x3,psi0..psi3
void write_csv(std::ostream& out, const CartesianField& field);
/// x0,x1,x2,x3,psi0..psi3
void write_csv(std::ostream& out, const SpacetimeField& field);
/// p1,p2,p3,degenerate,psi0..psi3
void write_csv(std::ostream& out, const MomentumSpectrum& spec);
/// r,theta,phi,psi0..psi3
void write_csv(std::ostream& out, const SphericalField& field);
/// p,l,mu,psi0..psi3
void write_csv(std::ostream& out, const HankelSpectrum& spec);

/// Writes to a file path, creating or truncating it. Throws std::runtime_error on IO failure.
template <class T>
void write_csv_file(const std::string& path, const T& value);
template <class T>
void write_field_file(const std::string& path, const T& value);

}  // namespace majorana
