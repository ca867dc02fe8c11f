#pragma once

#include "majorana/fourier.hpp"
#include "majorana/types.hpp"

#include <functional>

namespace majorana {

/// A solution Ψ(x, t) that can be sampled at arbitrary points.
using PointSolution = std::function<Spinor4(const Vec3&, double)>;

/// (iγ^μ∂_μ - m)Ψ at one point, with centered differences of step h in
/// every coordinate.
Spinor4 dirac_operator(const PointSolution& psi, const Vec3& x, double t, double h, double m);

/// Relative L² residual ‖(iγ^μ∂_μ - m)Ψ‖ / ‖Ψ‖ at the middle of three
/// time slices spaced dt apart, with periodic centered differences in space.
double dirac_residual(const CartesianField& before, const CartesianField& now,
                      const CartesianField& after, double dt);

/// Probability-weighted mean position Σ x|Ψ|² / Σ |Ψ|², measured relative to
/// `origin` with periodic wrapping into [-L/2, L/2).
Vec3 centroid(const CartesianField& field, const Vec3& origin);

}  // namespace majorana
