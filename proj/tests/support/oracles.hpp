#pragma once

// Reference implementations used only by the tests. Each one computes its
// quantity by a route that does not share code with the library.

#include "majorana/clifford.hpp"
#include "majorana/fourier.hpp"
#include "majorana/types.hpp"

#include <Eigen/Core>
#include <Eigen/QR>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using majorana::RealMatrix4;
using majorana::Spinor4;
using majorana::Vec3;

/// Scaling-and-squaring exponential with a degree-24 Taylor core.
inline RealMatrix4 expm(const RealMatrix4& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const RealMatrix4 scaled = a / std::ldexp(1.0, squarings);
  RealMatrix4 term = RealMatrix4::Identity();
  RealMatrix4 sum = RealMatrix4::Identity();
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / k;
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// P_l^m(ξ) straight from the Rodrigues formula
/// (-1)^m / (2^l l!) (1-ξ²)^{m/2} d^{l+m}/dξ^{l+m} (ξ²-1)^l, any -l ≤ m ≤ l.
inline double rodrigues_legendre(int l, int m, double xi) {
  // Coefficients of (ξ²-1)^l in ascending powers.
  std::vector<double> c(2 * l + 1, 0.0);
  double binom = 1.0;
  for (int k = 0; k <= l; ++k) {
    c[2 * k] = binom * (((l - k) % 2 == 0) ? 1.0 : -1.0);
    binom = binom * (l - k) / (k + 1);
  }
  for (int d = 0; d < l + m; ++d) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = c[i + 1] * static_cast<double>(i + 1);
    c.back() = 0.0;
  }
  double poly = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) poly = poly * xi + *it;
  double pre = (m % 2 == 0) ? 1.0 : -1.0;
  for (int k = 1; k <= l; ++k) pre /= 2.0 * k;
  return pre * std::pow(1.0 - xi * xi, 0.5 * m) * poly;
}

/// j_l(x) from Boost.Math in extended precision.
inline double bessel(int l, double x) {
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  return static_cast<double>(
      boost::math::sph_bessel(static_cast<unsigned>(l), static_cast<long double>(x)));
}

/// Dirac matrices γ^μ = -i·(iγ^μ).
inline Eigen::Matrix4cd dirac(int mu) {
  return std::complex<double>(0.0, -1.0) *
         majorana::canonical_integer_gammas()[mu].cast<std::complex<double>>();
}

/// (p̸γ⁰ + m)/√((E+m)2E) built from complex Dirac matrices; must be real.
inline RealMatrix4 kernel_amplitude(const Vec3& p, double m) {
  const double e = std::sqrt(p.squaredNorm() + m * m);
  Eigen::Matrix4cd pslash = e * dirac(0);
  for (int j = 0; j < 3; ++j) pslash -= p[j] * dirac(j + 1);
  const Eigen::Matrix4cd k = (pslash * dirac(0) + m * Eigen::Matrix4cd::Identity()) /
                             std::sqrt((e + m) * 2.0 * e);
  return k.real();
}

inline RealMatrix4 rotor(double a) {
  const RealMatrix4 g0 = majorana::canonical_integer_gammas()[0].cast<double>();
  return std::cos(a) * RealMatrix4::Identity() + std::sin(a) * g0;
}

/// Continuum kernel O(p, x) from the definitions above.
inline RealMatrix4 kernel(const Vec3& p, const Vec3& x, double m) {
  return rotor(-p.dot(x)) * kernel_amplitude(p, m);
}

/// Grid kernel: phase from the grid momentum, amplitude from the spectral one.
inline RealMatrix4 grid_kernel(const majorana::CartesianGrid& g, std::size_t q, std::size_t x,
                               double m) {
  return rotor(-g.momentum(q).dot(g.position(x))) * kernel_amplitude(g.spectral_momentum(q), m);
}

/// ψ(p) = Σ_x O(p,x)Ψ(x)dx³ by the direct double sum.
inline std::vector<Spinor4> naive_forward(const majorana::CartesianField& f) {
  const auto& g = f.grid;
  std::vector<Spinor4> out(g.size(), Spinor4::Zero());
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (majorana::is_degenerate(g, q, f.mass)) continue;
    for (std::size_t x = 0; x < g.size(); ++x)
      out[q] += oracle::grid_kernel(g, q, x, f.mass) * f.values[x] * g.cell_volume();
  }
  return out;
}

inline RealMatrix4 random_orthogonal(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  RealMatrix4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = n(rng);
  Eigen::HouseholderQR<RealMatrix4> qr(a);
  RealMatrix4 q = qr.householderQ();
  return q;
}

inline Vec3 random_vec(std::mt19937& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

inline Spinor4 random_spinor(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng), n(rng), n(rng)};
}

/// Standard Lorentz boost along axis `axis` (1..3) with rapidity eta.
inline RealMatrix4 lorentz_boost(int axis, double eta) {
  RealMatrix4 l = RealMatrix4::Identity();
  l(0, 0) = l(axis, axis) = std::cosh(eta);
  l(0, axis) = l(axis, 0) = std::sinh(eta);
  return l;
}

/// Rotation of spatial vectors about `axis` (1..3) by `angle` (Rodrigues formula).
inline RealMatrix4 lorentz_rotation(int axis, double angle) {
  Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
  const int i = axis % 3;
  const int j = (axis + 1) % 3;
  k(i, j) = -1.0;
  k(j, i) = 1.0;
  const Eigen::Matrix3d r =
      Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
  RealMatrix4 l = RealMatrix4::Identity();
  l.block<3, 3>(1, 1) = r;
  return l;
}

}  // namespace oracle
