#include "majorana/special_functions.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace majorana;

TEST_CASE("associated Legendre low orders") {
  for (double xi : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
    CHECK(assoc_legendre(0, 0, xi) == 1.0);
    CHECK(assoc_legendre(1, 0, xi) == doctest::Approx(xi).epsilon(1e-15));
    CHECK(assoc_legendre(1, 1, xi) == doctest::Approx(-std::sqrt(1 - xi * xi)).epsilon(1e-15));
  }
}

TEST_CASE("associated Legendre matches the Rodrigues formula, including negative m") {
  CHECK(std::abs(assoc_legendre(3, 2, 0.5) - oracle::rodrigues_legendre(3, 2, 0.5)) < 1e-12);
  double worst = 0.0;
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m)
      for (double xi = -1.0; xi <= 1.0; xi += 0.0625)
        worst = std::max(worst, std::abs(assoc_legendre(l, m, xi) - oracle::rodrigues_legendre(l, m, xi)));
  CHECK(worst < 1e-11);
  CHECK_THROWS_AS(assoc_legendre(2, 3, 0.1), std::out_of_range);
  CHECK_THROWS_AS(assoc_legendre(-1, 0, 0.1), std::out_of_range);
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), std::out_of_range);
}

TEST_CASE("spherical Bessel special values") {
  CHECK(spherical_bessel(0, 0.0) == 1.0);
  for (int l = 1; l < 10; ++l) CHECK(spherical_bessel(l, 0.0) == 0.0);
  CHECK(spherical_bessel(0, 2.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("spherical Bessel against extended-precision reference") {
  double worst = 0.0;
  for (int l = 0; l <= 40; ++l)
    for (double x = 0.37; x <= 100.0; x += 0.37) {
      const double ref = oracle::bessel(l, x);
      worst = std::max(worst, std::abs(spherical_bessel(l, x) - ref) / std::abs(ref));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("spherical Bessel satisfies the radial equation") {
  const double h = 1e-3;
  for (int l = 0; l <= 5; ++l)
    for (double p : {0.5, 1.7})
      for (double r : {0.8, 3.1, 9.0}) {
        auto f = [&](double rr) { return spherical_bessel(l, p * rr); };
        const double d2 = (f(r + h) - 2 * f(r) + f(r - h)) / (h * h);
        const double d1 = (f(r + h) - f(r - h)) / (2 * h);
        const double res = d2 + 2.0 / r * d1 - l * (l + 1) / (r * r) * f(r) + p * p * f(r);
        CHECK(std::abs(res) < 1e-6);
      }
}

TEST_CASE("truncated Bessel orthogonality concentrates on the diagonal") {
  // ∫₀^R r² j_l(pr) j_l(p'r) dr ≈ π δ(p-p') / (2p²) with δ ↦ δ_kk'/Δp.
  const double rmax = 40.0;
  const int nr = 256;
  const double dr = rmax / nr;
  const double dp = std::numbers::pi / rmax;
  for (int l : {1, 2}) {
    for (int k : {20, 60}) {
      const double p = k * dp;
      auto overlap = [&](double q) {
        double s = 0.0;
        for (int i = 1; i <= nr; ++i) {
          const double r = i * dr;
          const double w = (i == nr ? 0.5 : 1.0) * r * r * dr;
          s += w * spherical_bessel(l, p * r) * spherical_bessel(l, q * r);
        }
        return s;
      };
      const double diag = overlap(p);
      const double expected = std::numbers::pi / (2 * p * p) / dp;
      CHECK(std::abs(diag / expected - 1.0) < 0.02);
      CHECK(std::abs(overlap(p + dp)) < 0.02 * diag);
      CHECK(std::abs(overlap(p + 5 * dp)) < 0.02 * diag);
    }
  }
}

TEST_CASE("Gauss-Legendre rule") {
  for (int n : {1, 2, 5, 32}) {
    const GaussLegendre g = gauss_legendre(n);
    double sum = 0.0;
    for (double w : g.weights) sum += w;
    CHECK(std::abs(sum - 2.0) < 1e-13);
    // Exact for polynomials of degree 2n-1.
    const int d = 2 * n - 2;
    double integral = 0.0;
    for (int i = 0; i < n; ++i) integral += g.weights[i] * std::pow(g.nodes[i], d);
    CHECK(std::abs(integral - 2.0 / (d + 1)) < 1e-13);
    for (int i = 1; i < n; ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  }
}

TEST_CASE("Legendre differentiation matrix") {
  const GaussLegendre g = gauss_legendre(12);
  const Eigen::MatrixXd d = legendre_differentiation_matrix(g, 11);
  Eigen::VectorXd f(12);
  Eigen::VectorXd df(12);
  for (int i = 0; i < 12; ++i) {
    const double x = g.nodes[i];
    f[i] = std::pow(x, 7) - 3 * x * x + 1;
    df[i] = 7 * std::pow(x, 6) - 6 * x;
  }
  CHECK((d * f - df).cwiseAbs().maxCoeff() < 1e-11);
  // Capping the degree leaves low-degree polynomials untouched.
  const Eigen::MatrixXd d7 = legendre_differentiation_matrix(g, 7);
  CHECK((d7 * f - df).cwiseAbs().maxCoeff() < 1e-11);
}
