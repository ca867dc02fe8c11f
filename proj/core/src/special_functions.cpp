#include "majorana/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace majorana {

namespace {

double legendre_nonnegative_m(int l, int m, double xi) {
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt(std::max(0.0, (1.0 - xi) * (1.0 + xi)));
    double odd = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -odd * s;
      odd += 2.0;
    }
  }
  if (l == m) return pmm;
  double prev = pmm;
  double cur = xi * (2 * m + 1) * pmm;
  for (int n = m + 2; n <= l; ++n) {
    const double next = ((2 * n - 1) * xi * cur - (n + m - 1) * prev) / (n - m);
    prev = cur;
    cur = next;
  }
  return cur;
}

// (l-m)!/(l+m)! for m ≥ 0.
double factorial_ratio(int l, int m) {
  double r = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) r /= k;
  return r;
}

// Power series, accurate for x < 1.
double bessel_series(int l, double x) {
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= x / (2 * k + 1);
  const double h = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    term *= h / (k * (2 * l + 2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

// The recurrences run in extended precision so that values near a zero of
// j_l keep their relative accuracy after rounding back to double.
using extended = long double;

}  // namespace

double assoc_legendre(int l, int m, double xi) {
  if (l < 0 || std::abs(m) > l) throw std::out_of_range("assoc_legendre: index out of range");
  if (!(xi >= -1.0 && xi <= 1.0)) throw std::out_of_range("assoc_legendre: argument outside [-1,1]");
  if (m >= 0) return legendre_nonnegative_m(l, m, xi);
  const int am = -m;
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial_ratio(l, am) * legendre_nonnegative_m(l, am, xi);
}

double harmonic_norm(int l, int m) {
  double ratio = 1.0;
  if (m >= 0)
    ratio = factorial_ratio(l, m);
  else
    ratio = 1.0 / factorial_ratio(l, -m);
  return std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi) * ratio);
}

std::vector<double> spherical_bessel_sequence(int lmax, double x) {
  if (lmax < 0) throw std::out_of_range("spherical_bessel: negative order");
  if (x < 0.0) throw std::domain_error("spherical_bessel: negative argument");
  std::vector<double> j(static_cast<std::size_t>(lmax) + 1, 0.0);
  if (x == 0.0) {
    j[0] = 1.0;
    return j;
  }
  if (x < 1.0) {
    for (int l = 0; l <= lmax; ++l) j[l] = bessel_series(l, x);
    return j;
  }

  const extended xe = x;
  std::vector<extended> je(j.size(), 0.0L);
  je[0] = std::sin(xe) / xe;
  if (lmax >= 1) je[1] = (std::sin(xe) / xe - std::cos(xe)) / xe;

  // Upward recurrence is stable while l ≤ x.
  const int up_to = std::min(lmax, static_cast<int>(std::floor(x)));
  for (int l = 1; l < up_to; ++l) je[l + 1] = (2 * l + 1) / xe * je[l] - je[l - 1];

  if (up_to < lmax) {
    // Miller: run downward from well above lmax, then rescale against j0 or j1.
    const int start = lmax + 30 + static_cast<int>(std::sqrt(40.0 * lmax));
    extended next = 0.0L;
    extended cur = 1e-300L;
    std::vector<extended> trial(j.size(), 0.0L);
    for (int n = start; n > 0; --n) {
      const extended prev = (2 * n + 1) / xe * cur - next;
      next = cur;
      cur = prev;
      if (n - 1 <= lmax) trial[n - 1] = cur;
      if (n <= lmax) trial[n] = next;
      if (std::abs(cur) > 1e250L) {
        next *= 1e-250L;
        cur *= 1e-250L;
        for (auto& t : trial) t *= 1e-250L;
      }
    }
    const bool use_j0 = std::abs(je[0]) >= std::abs(je[1]);
    const extended scale = use_j0 ? je[0] / trial[0] : je[1] / trial[1];
    for (int l = up_to + 1; l <= lmax; ++l) je[l] = trial[l] * scale;
  }
  for (std::size_t l = 0; l < j.size(); ++l) j[l] = static_cast<double>(je[l]);
  return j;
}

double spherical_bessel(int l, double x) { return spherical_bessel_sequence(l, x)[l]; }

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::out_of_range("gauss_legendre: need at least one node");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

Eigen::MatrixXd legendre_differentiation_matrix(const GaussLegendre& rule, int max_degree) {
  const auto n = static_cast<Eigen::Index>(rule.nodes.size());
  max_degree = std::clamp(max_degree, 0, static_cast<int>(n) - 1);
  const int count = max_degree + 1;
  Eigen::MatrixXd value(n, count);
  Eigen::MatrixXd slope(n, count);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    double p0 = 1.0;
    double p1 = x;
    for (int k = 0; k < count; ++k) {
      double pk = 0.0;
      double dk = 0.0;
      if (k == 0) {
        pk = 1.0;
      } else if (k == 1) {
        pk = x;
        dk = 1.0;
      } else {
        pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        dk = k * (x * pk - p1) / (x * x - 1.0);
        p0 = p1;
        p1 = pk;
      }
      const double norm = std::sqrt((2 * k + 1) / 2.0);
      value(i, k) = norm * pk;
      slope(i, k) = norm * dk;
    }
  }
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), n);
  return slope * (value.transpose() * w.asDiagonal());
}

}  // namespace majorana
