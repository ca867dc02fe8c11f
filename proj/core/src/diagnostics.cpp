#include "majorana/diagnostics.hpp"

#include "majorana/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace majorana {

Spinor4 dirac_operator(const PointSolution& psi, const Vec3& x, double t, double h, double m) {
  const auto& g = canonical_rep().gamma;
  Spinor4 out = g[0] * (psi(x, t + h) - psi(x, t - h)) / (2 * h) - m * psi(x, t);
  for (int j = 0; j < 3; ++j) {
    const Vec3 step = h * Vec3::Unit(j);
    out += g[j + 1] * (psi(x + step, t) - psi(x - step, t)) / (2 * h);
  }
  return out;
}

double dirac_residual(const CartesianField& before, const CartesianField& now,
                      const CartesianField& after, double dt) {
  const CartesianGrid& grid = now.grid;
  if (before.values.size() != grid.size() || after.values.size() != grid.size())
    throw std::invalid_argument("dirac_residual: slices on different grids");
  const auto& g = canonical_rep().gamma;
  const int n = grid.n;
  const double dx = grid.dx();
  double residual = 0.0;
  double norm = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t i = grid.index(a, b, c);
        Spinor4 r = g[0] * (after.values[i] - before.values[i]) / (2 * dt) - now.mass * now.values[i];
        const int up[3] = {(a + 1) % n, (b + 1) % n, (c + 1) % n};
        const int down[3] = {(a + n - 1) % n, (b + n - 1) % n, (c + n - 1) % n};
        r += g[1] * (now.values[grid.index(up[0], b, c)] - now.values[grid.index(down[0], b, c)]) / (2 * dx);
        r += g[2] * (now.values[grid.index(a, up[1], c)] - now.values[grid.index(a, down[1], c)]) / (2 * dx);
        r += g[3] * (now.values[grid.index(a, b, up[2])] - now.values[grid.index(a, b, down[2])]) / (2 * dx);
        residual += r.squaredNorm();
        norm += now.values[i].squaredNorm();
      }
  return norm > 0.0 ? std::sqrt(residual / norm) : 0.0;
}

Vec3 centroid(const CartesianField& field, const Vec3& origin) {
  const double length = field.grid.length;
  Vec3 sum = Vec3::Zero();
  double weight = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    Vec3 d = field.grid.position(i) - origin;
    for (int k = 0; k < 3; ++k) d[k] -= length * std::floor(d[k] / length + 0.5);
    const double w = field.values[i].squaredNorm();
    sum += w * d;
    weight += w;
  }
  return weight > 0.0 ? Vec3(origin + sum / weight) : origin;
}

}  // namespace majorana
