#include "majorana/fourier.hpp"

#include "majorana/clifford.hpp"
#include "majorana/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace majorana {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// (iγʲ)(iγ⁰) for j = 1..3.
const std::array<RealMatrix4, 3>& momentum_generators() {
  static const std::array<RealMatrix4, 3> b = [] {
    const auto& g = canonical_rep().gamma;
    return std::array<RealMatrix4, 3>{g[1] * g[0], g[2] * g[0], g[3] * g[0]};
  }();
  return b;
}

RealMatrix4 momentum_matrix(const Vec3& p) {
  const auto& b = momentum_generators();
  return p[0] * b[0] + p[1] * b[1] + p[2] * b[2];
}

// One-dimensional rotor transform out[a] = Σ_b (C(a,b) + S(a,b)·iγ⁰) in[b].
struct LineTransform {
  Eigen::MatrixXd c;
  Eigen::MatrixXd s;
};

LineTransform spatial_line(const CartesianGrid& grid, int sign) {
  const int n = grid.n;
  LineTransform t{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (int q = 0; q < n; ++q)
    for (int i = 0; i < n; ++i) {
      const double angle = grid.wavenumber(q) * grid.coordinate(i);
      if (sign < 0) {
        t.c(q, i) = std::cos(angle);
        t.s(q, i) = -std::sin(angle);
      } else {
        t.c(i, q) = std::cos(angle);
        t.s(i, q) = std::sin(angle);
      }
    }
  return t;
}

void apply_along_axis(const CartesianGrid& grid, const LineTransform& t, int axis,
                      const std::vector<Spinor4>& in, std::vector<Spinor4>& out) {
  const int n = grid.n;
  const std::size_t stride = axis == 0 ? static_cast<std::size_t>(n) * n : axis == 1 ? n : 1;
  const auto lines = static_cast<std::size_t>(n) * n;
  parallel_for(lines, [&](std::size_t line) {
    const std::size_t outer = line / n;
    const std::size_t inner = line % n;
    std::size_t base = 0;
    if (axis == 0) base = outer * n + inner;
    if (axis == 1) base = outer * n * n + inner;
    if (axis == 2) base = (outer * n + inner) * n;
    for (int a = 0; a < n; ++a) {
      Spinor4 cos_part = Spinor4::Zero();
      Spinor4 sin_part = Spinor4::Zero();
      for (int b = 0; b < n; ++b) {
        const Spinor4& v = in[base + b * stride];
        cos_part += t.c(a, b) * v;
        sin_part += t.s(a, b) * v;
      }
      out[base + a * stride] = cos_part + apply_gamma0(sin_part);
    }
  });
}

std::vector<std::uint8_t> degenerate_flags(const CartesianGrid& grid, double m) {
  std::vector<std::uint8_t> flags(grid.size(), 0);
  for (std::size_t q = 0; q < grid.size(); ++q) flags[q] = is_degenerate(grid, q, m) ? 1 : 0;
  return flags;
}

}  // namespace

CartesianGrid CartesianGrid::make(int n, double length) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("CartesianGrid: n must be even and ≥ 2");
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("CartesianGrid: length must be positive");
  return {n, length};
}

double CartesianGrid::wavenumber(int q) const { return kTwoPi * (q - n / 2) / length; }

double CartesianGrid::spectral_wavenumber(int q) const { return q == 0 ? 0.0 : wavenumber(q); }

Vec3 CartesianGrid::position(std::size_t flat) const {
  const auto un = static_cast<std::size_t>(n);
  return {coordinate(static_cast<int>(flat / (un * un))), coordinate(static_cast<int>(flat / un % un)),
          coordinate(static_cast<int>(flat % un))};
}

Vec3 CartesianGrid::momentum(std::size_t flat) const {
  const auto un = static_cast<std::size_t>(n);
  return {wavenumber(static_cast<int>(flat / (un * un))), wavenumber(static_cast<int>(flat / un % un)),
          wavenumber(static_cast<int>(flat % un))};
}

Vec3 CartesianGrid::spectral_momentum(std::size_t flat) const {
  const auto un = static_cast<std::size_t>(n);
  return {spectral_wavenumber(static_cast<int>(flat / (un * un))),
          spectral_wavenumber(static_cast<int>(flat / un % un)),
          spectral_wavenumber(static_cast<int>(flat % un))};
}

std::size_t CartesianGrid::negated(std::size_t flat) const {
  const auto un = static_cast<std::size_t>(n);
  auto neg = [&](std::size_t q) { return (un - q) % un; };
  return index(static_cast<int>(neg(flat / (un * un))), static_cast<int>(neg(flat / un % un)),
               static_cast<int>(neg(flat % un)));
}

CartesianField CartesianField::zeros(const CartesianGrid& grid, double mass) {
  return {grid, mass, std::vector<Spinor4>(grid.size(), Spinor4::Zero())};
}

double CartesianField::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values) s += v.squaredNorm();
  return s * grid.cell_volume();
}

MomentumSpectrum MomentumSpectrum::zeros(const CartesianGrid& grid, double mass) {
  return {grid, mass, std::vector<Spinor4>(grid.size(), Spinor4::Zero()),
          degenerate_flags(grid, mass)};
}

double MomentumSpectrum::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values) s += v.squaredNorm();
  return s / grid.box_volume();
}

std::size_t MomentumSpectrum::degenerate_count() const {
  std::size_t c = 0;
  for (auto f : degenerate) c += f;
  return c;
}

double MomentumSpectrum::mean_energy() const {
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t q = 0; q < values.size(); ++q) {
    const double w = values[q].squaredNorm();
    weighted += energy(grid.spectral_momentum(q), mass) * w;
    total += w;
  }
  return total > 0.0 ? weighted / total : 0.0;
}

double energy(const Vec3& p, double m) { return std::sqrt(p.squaredNorm() + m * m); }

RealMatrix4 kernel_amplitude(const Vec3& p, double m) {
  if (m == 0.0 && p.norm() < 1e-12)
    throw std::domain_error("kernel_amplitude: degenerate kernel (m = 0, p = 0)");
  const double e = energy(p, m);
  const double norm = std::sqrt((e + m) * 2.0 * e);
  return ((e + m) * RealMatrix4::Identity() + momentum_matrix(p)) / norm;
}

RealMatrix4 kernel_O(const Vec3& p, const Vec3& x, double m) {
  return rotor(-p.dot(x)) * kernel_amplitude(p, m);
}

bool is_degenerate(const CartesianGrid& grid, std::size_t momentum, double m) {
  return m == 0.0 && grid.spectral_momentum(momentum).norm() < 1e-12;
}

RealMatrix4 grid_kernel(const CartesianGrid& grid, std::size_t momentum, std::size_t position,
                        double m) {
  return rotor(-grid.momentum(momentum).dot(grid.position(position))) *
         kernel_amplitude(grid.spectral_momentum(momentum), m);
}

std::vector<Spinor4> rotor_dft(const CartesianGrid& grid, const std::vector<Spinor4>& in,
                               int sign, double weight) {
  if (in.size() != grid.size()) throw std::invalid_argument("rotor_dft: size mismatch");
  const LineTransform t = spatial_line(grid, sign);
  std::vector<Spinor4> a(in.size());
  std::vector<Spinor4> b(in.size());
  apply_along_axis(grid, t, 0, in, a);
  apply_along_axis(grid, t, 1, a, b);
  apply_along_axis(grid, t, 2, b, a);
  for (auto& v : a) v *= weight;
  return a;
}

MomentumSpectrum forward(const CartesianField& field) {
  const CartesianGrid& grid = field.grid;
  const double m = field.mass;
  const std::vector<Spinor4> f = rotor_dft(grid, field.values, -1, grid.cell_volume());
  MomentumSpectrum spec = MomentumSpectrum::zeros(grid, m);
  parallel_for(grid.size(), [&](std::size_t q) {
    if (spec.degenerate[q]) return;
    const Vec3 p = grid.spectral_momentum(q);
    const double e = energy(p, m);
    const double norm = std::sqrt((e + m) * 2.0 * e);
    spec.values[q] = ((e + m) * f[q] + momentum_matrix(p) * f[grid.negated(q)]) / norm;
  });
  return spec;
}

CartesianField inverse(const MomentumSpectrum& spec) {
  const CartesianGrid& grid = spec.grid;
  const double m = spec.mass;
  std::vector<Spinor4> u(grid.size(), Spinor4::Zero());
  std::vector<Spinor4> w(grid.size(), Spinor4::Zero());
  parallel_for(grid.size(), [&](std::size_t q) {
    if (is_degenerate(grid, q, m)) return;
    const Vec3 p = grid.spectral_momentum(q);
    const double e = energy(p, m);
    const double norm = std::sqrt((e + m) * 2.0 * e);
    u[q] = (e + m) / norm * spec.values[q];
    w[q] = momentum_matrix(p) * spec.values[q] / norm;
  });
  std::vector<Spinor4> g(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) g[q] = u[q] + w[grid.negated(q)];
  return {grid, m, rotor_dft(grid, g, +1, 1.0 / grid.box_volume())};
}

MomentumSpectrum evolve(const MomentumSpectrum& spec, double t) {
  MomentumSpectrum out = spec;
  for (std::size_t q = 0; q < spec.values.size(); ++q) {
    const double e = energy(spec.grid.spectral_momentum(q), spec.mass);
    out.values[q] = apply_rotor(-e * t, spec.values[q]);
  }
  return out;
}

ComplexMatrix4 dirac_gamma(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("dirac_gamma: μ must be 0..3");
  return std::complex<double>(0.0, -1.0) * canonical_rep().gamma[mu].cast<std::complex<double>>();
}

ComplexMatrix4 particle_projector(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("particle_projector: sign must be ±1");
  return 0.5 * (ComplexMatrix4::Identity() + static_cast<double>(sign) * dirac_gamma(0));
}

ComplexSpectrum project_particle(const MomentumSpectrum& spec, int sign) {
  const ComplexMatrix4 proj = particle_projector(sign);
  ComplexSpectrum out{spec.grid, spec.mass, std::vector<DiracSpinor>(spec.values.size())};
  for (std::size_t q = 0; q < spec.values.size(); ++q)
    out.values[q] = proj * spec.values[q].cast<std::complex<double>>();
  return out;
}

std::vector<DiracSpinor> reconstruct(const ComplexSpectrum& spec, double t) {
  MomentumSpectrum re = MomentumSpectrum::zeros(spec.grid, spec.mass);
  MomentumSpectrum im = re;
  for (std::size_t q = 0; q < spec.values.size(); ++q) {
    re.values[q] = spec.values[q].real();
    im.values[q] = spec.values[q].imag();
  }
  const CartesianField fr = inverse(evolve(re, t));
  const CartesianField fi = inverse(evolve(im, t));
  std::vector<DiracSpinor> out(fr.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].real() = fr.values[i];
    out[i].imag() = fi.values[i];
  }
  return out;
}

SpacetimeField SpacetimeField::zeros(const CartesianGrid& grid, int nt, double period,
                                     double mass) {
  if (nt < 2 || nt % 2 != 0) throw std::invalid_argument("SpacetimeField: nt must be even and ≥ 2");
  if (!(period > 0.0)) throw std::invalid_argument("SpacetimeField: period must be positive");
  return {grid, nt, period, mass,
          std::vector<Spinor4>(static_cast<std::size_t>(nt) * grid.size(), Spinor4::Zero())};
}

double SpacetimeField::frequency(int q) const { return kTwoPi * (q - nt / 2) / period; }

std::vector<Spinor4> time_rotor_dft(int nt, double period, const std::vector<Spinor4>& in,
                                    int sign, double weight) {
  const double dt = period / nt;
  std::vector<Spinor4> out(static_cast<std::size_t>(nt));
  for (int a = 0; a < nt; ++a) {
    Spinor4 cos_part = Spinor4::Zero();
    Spinor4 sin_part = Spinor4::Zero();
    for (int b = 0; b < nt; ++b) {
      const int q = sign > 0 ? a : b;
      const int j = sign > 0 ? b : a;
      const double angle = kTwoPi * (q - nt / 2) / period * (j * dt);
      cos_part += std::cos(angle) * in[b];
      sin_part += std::sin(angle) * in[b];
    }
    if (sign < 0) sin_part = -sin_part;
    out[a] = weight * (cos_part + apply_gamma0(sin_part));
  }
  return out;
}

SpacetimeSpectrum spacetime_forward(const SpacetimeField& field) {
  const CartesianGrid& grid = field.grid;
  const std::size_t ns = grid.size();
  const auto nt = static_cast<std::size_t>(field.nt);
  std::vector<Spinor4> spatial(nt * ns);
  for (std::size_t j = 0; j < nt; ++j) {
    CartesianField slice{grid, field.mass,
                         std::vector<Spinor4>(field.values.begin() + j * ns,
                                              field.values.begin() + (j + 1) * ns)};
    const MomentumSpectrum s = forward(slice);
    std::copy(s.values.begin(), s.values.end(), spatial.begin() + j * ns);
  }
  SpacetimeSpectrum out{grid, field.nt, field.period, field.mass,
                        std::vector<Spinor4>(nt * ns), degenerate_flags(grid, field.mass)};
  parallel_for(ns, [&](std::size_t q) {
    std::vector<Spinor4> series(nt);
    for (std::size_t j = 0; j < nt; ++j) series[j] = spatial[j * ns + q];
    const auto f = time_rotor_dft(field.nt, field.period, series, +1, field.dt());
    for (std::size_t k = 0; k < nt; ++k) out.values[k * ns + q] = f[k];
  });
  return out;
}

SpacetimeField spacetime_inverse(const SpacetimeSpectrum& spec) {
  const CartesianGrid& grid = spec.grid;
  const std::size_t ns = grid.size();
  const auto nt = static_cast<std::size_t>(spec.nt);
  std::vector<Spinor4> per_time(nt * ns);
  parallel_for(ns, [&](std::size_t q) {
    std::vector<Spinor4> series(nt);
    for (std::size_t k = 0; k < nt; ++k) series[k] = spec.values[k * ns + q];
    const auto f = time_rotor_dft(spec.nt, spec.period, series, -1, 1.0 / spec.period);
    for (std::size_t j = 0; j < nt; ++j) per_time[j * ns + q] = f[j];
  });
  SpacetimeField out = SpacetimeField::zeros(grid, spec.nt, spec.period, spec.mass);
  for (std::size_t j = 0; j < nt; ++j) {
    MomentumSpectrum slice = MomentumSpectrum::zeros(grid, spec.mass);
    std::copy(per_time.begin() + j * ns, per_time.begin() + (j + 1) * ns, slice.values.begin());
    const CartesianField f = inverse(slice);
    std::copy(f.values.begin(), f.values.end(), out.values.begin() + j * ns);
  }
  return out;
}

}  // namespace majorana
