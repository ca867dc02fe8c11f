#pragma once

#include <Eigen/Core>

#include <vector>

namespace majorana {

/// Associated Legendre function P_l^m(ξ) with the Condon–Shortley sign,
/// for l ≥ 0, |m| ≤ l, ξ ∈ [-1, 1]. Negative m uses
/// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m. Throws std::out_of_range.
double assoc_legendre(int l, int m, double xi);

/// √((2l+1)/(4π) · (l-m)!/(l+m)!).
double harmonic_norm(int l, int m);

/// Spherical Bessel function of the first kind j_l(x), x ≥ 0.
double spherical_bessel(int l, double x);

/// j_0(x) .. j_lmax(x) in one pass.
std::vector<double> spherical_bessel_sequence(int lmax, double x);

struct GaussLegendre {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

GaussLegendre gauss_legendre(int n);

/// Derivative operator on the Gauss–Legendre nodes: projects onto Legendre
/// polynomials of degree ≤ max_degree, differentiates exactly, and samples
/// back. With max_degree = n-1 this is the interpolating-polynomial derivative.
Eigen::MatrixXd legendre_differentiation_matrix(const GaussLegendre& rule, int max_degree);

}  // namespace majorana
