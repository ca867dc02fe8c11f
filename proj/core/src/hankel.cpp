#include "majorana/hankel.hpp"

#include "majorana/clifford.hpp"
#include "majorana/fourier.hpp"
#include "majorana/parallel.hpp"
#include "majorana/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace majorana {

MomentumNodes MomentumNodes::make(int np, double pmax) {
  if (np < 1 || !(pmax > 0.0)) throw std::invalid_argument("MomentumNodes: need np ≥ 1, pmax > 0");
  MomentumNodes nodes;
  nodes.dp = pmax / np;
  nodes.p.resize(np);
  for (int k = 0; k < np; ++k) nodes.p[k] = (k + 1) * nodes.dp;
  return nodes;
}

MomentumNodes MomentumNodes::for_grid(const SphericalGrid& grid, int np) {
  return make(np, std::numbers::pi * grid.nr / grid.rmax);
}

HankelSpectrum HankelSpectrum::zeros(const MomentumNodes& nodes, int lmax, double mass) {
  if (lmax < 1) throw std::invalid_argument("HankelSpectrum: lmax must be ≥ 1");
  HankelSpectrum s;
  s.nodes = nodes;
  s.lmax = lmax;
  s.mass = mass;
  s.values.assign(nodes.p.size() * s.mode_count(), Spinor4::Zero());
  return s;
}

double HankelSpectrum::weight(std::size_t k) const {
  const double p = nodes.p[k];
  const double e = std::sqrt(p * p + mass * mass);
  return (e + mass) / (e * std::numbers::pi) * nodes.dp;
}

double HankelSpectrum::norm_squared() const {
  double total = 0.0;
  const std::size_t modes = mode_count();
  for (std::size_t k = 0; k < nodes.p.size(); ++k) {
    double s = 0.0;
    for (std::size_t a = 0; a < modes; ++a) s += values[k * modes + a].squaredNorm();
    total += weight(k) * s;
  }
  return total;
}

RealMatrix4 hankel_kernel(double p, const AngularMode& mode, double r, double theta, double phi,
                          double m) {
  if (!(p > 0.0)) throw std::domain_error("hankel_kernel: p must be positive");
  const int l = mode.l;
  const auto j = spherical_bessel_sequence(l, p * r);
  const double e = std::sqrt(p * p + m * m);
  const RealMatrix4 omega = omega_matrix(mode, theta, phi);
  const RealMatrix4 gr = gamma_r(theta, phi);
  const RealMatrix4 id = RealMatrix4::Identity();
  return (p * j[l] * id + (e - m) * j[l - 1] * gr) * omega * spin_up_projector() +
         (p * j[l - 1] * id - (e - m) * j[l] * gr) * omega * spin_down_projector();
}

HankelTransform::HankelTransform(const SphericalGrid& grid, const MomentumNodes& nodes, int lmax,
                                 double mass)
    : grid_(grid), nodes_(nodes), lmax_(lmax), mass_(mass), modes_(angular_modes(lmax)) {
  if (lmax < 1) throw std::invalid_argument("HankelTransform: lmax must be ≥ 1");
  const std::size_t na = grid_.angular_size();
  omega_.resize(modes_.size() * na);
  for (std::size_t a = 0; a < modes_.size(); ++a)
    for (int it = 0; it < grid_.ntheta; ++it)
      for (int ip = 0; ip < grid_.nphi; ++ip)
        omega_[a * na + grid_.angular_index(it, ip)] =
            omega_matrix(modes_[a], grid_.theta[it], grid_.phi[ip]);
  gamma_r_.resize(na);
  for (int it = 0; it < grid_.ntheta; ++it)
    for (int ip = 0; ip < grid_.nphi; ++ip)
      gamma_r_[grid_.angular_index(it, ip)] = gamma_r(grid_.theta[it], grid_.phi[ip]);

  const std::size_t nr = grid_.r.size();
  const auto nl = static_cast<std::size_t>(lmax_ + 1);
  bessel_.resize(nodes_.p.size() * nr * nl);
  parallel_for(nodes_.p.size(), [&](std::size_t k) {
    for (std::size_t ir = 0; ir < nr; ++ir) {
      const auto j = spherical_bessel_sequence(lmax_, nodes_.p[k] * grid_.r[ir]);
      std::copy(j.begin(), j.end(), bessel_.begin() + static_cast<std::ptrdiff_t>((k * nr + ir) * nl));
    }
  });
}

HankelSpectrum HankelTransform::forward(const SphericalField& field) const {
  if (field.values.size() != grid_.size())
    throw std::invalid_argument("HankelTransform::forward: field does not match the grid");
  const std::size_t na = grid_.angular_size();
  const std::size_t nr = grid_.r.size();
  const std::size_t nm = modes_.size();

  // Angular projections a = Σ w Ωᵀ Ψ and b = Σ w Ωᵀ iγʳ Ψ per shell and mode.
  std::vector<Spinor4> proj_a(nr * nm);
  std::vector<Spinor4> proj_b(nr * nm);
  parallel_for(nr, [&](std::size_t ir) {
    std::vector<Spinor4> weighted(na);
    std::vector<Spinor4> weighted_r(na);
    for (int it = 0; it < grid_.ntheta; ++it)
      for (int ip = 0; ip < grid_.nphi; ++ip) {
        const std::size_t a = grid_.angular_index(it, ip);
        weighted[a] = grid_.angular_weight(it) * field.values[ir * na + a];
        weighted_r[a] = gamma_r_[a] * weighted[a];
      }
    for (std::size_t mi = 0; mi < nm; ++mi) {
      Spinor4 sa = Spinor4::Zero();
      Spinor4 sb = Spinor4::Zero();
      const RealMatrix4* om = &omega_[mi * na];
      for (std::size_t a = 0; a < na; ++a) {
        sa.noalias() += om[a].transpose() * weighted[a];
        sb.noalias() += om[a].transpose() * weighted_r[a];
      }
      proj_a[ir * nm + mi] = sa;
      proj_b[ir * nm + mi] = sb;
    }
  });

  HankelSpectrum spec = HankelSpectrum::zeros(nodes_, lmax_, mass_);
  const RealMatrix4& up = spin_up_projector();
  const RealMatrix4& down = spin_down_projector();
  parallel_for(nodes_.p.size(), [&](std::size_t k) {
    const double p = nodes_.p[k];
    const double em = std::sqrt(p * p + mass_ * mass_) - mass_;
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const int l = modes_[mi].l;
      Spinor4 upper = Spinor4::Zero();
      Spinor4 lower = Spinor4::Zero();
      for (std::size_t ir = 0; ir < nr; ++ir) {
        const double w = grid_.r_weight[ir];
        const double jl = bessel(k, ir, l);
        const double jl1 = bessel(k, ir, l - 1);
        const Spinor4& a = proj_a[ir * nm + mi];
        const Spinor4& b = proj_b[ir * nm + mi];
        upper += w * (p * jl * a + em * jl1 * b);
        lower += w * (p * jl1 * a - em * jl * b);
      }
      spec.values[k * nm + mi] = up * upper + down * lower;
    }
  });

  double total = 0.0;
  double tail = 0.0;
  for (std::size_t ir = 0; ir < nr; ++ir) {
    double shell = 0.0;
    for (int it = 0; it < grid_.ntheta; ++it)
      for (int ip = 0; ip < grid_.nphi; ++ip)
        shell += grid_.angular_weight(it) *
                 field.values[ir * na + grid_.angular_index(it, ip)].squaredNorm();
    shell *= grid_.r_weight[ir];
    total += shell;
    if (grid_.r[ir] > 0.9 * grid_.rmax) tail += shell;
  }
  spec.tail_fraction = total > 0.0 ? tail / total : 0.0;
  return spec;
}

SphericalField HankelTransform::inverse(const HankelSpectrum& spec) const {
  if (spec.lmax != lmax_ || spec.nodes.p.size() != nodes_.p.size())
    throw std::invalid_argument("HankelTransform::inverse: spectrum does not match the transform");
  const std::size_t na = grid_.angular_size();
  const std::size_t nr = grid_.r.size();
  const std::size_t nm = modes_.size();
  const RealMatrix4& up = spin_up_projector();
  const RealMatrix4& down = spin_down_projector();

  SphericalField out = SphericalField::zeros(grid_, mass_);
  parallel_for(nr, [&](std::size_t ir) {
    // Radial sums first: Ψ = Σ_modes Ω·A + iγʳ Σ_modes Ω·B.
    std::vector<Spinor4> coeff_a(nm, Spinor4::Zero());
    std::vector<Spinor4> coeff_b(nm, Spinor4::Zero());
    for (std::size_t k = 0; k < nodes_.p.size(); ++k) {
      const double p = nodes_.p[k];
      const double em = std::sqrt(p * p + mass_ * mass_) - mass_;
      const double w = spec.weight(k);
      for (std::size_t mi = 0; mi < nm; ++mi) {
        const int l = modes_[mi].l;
        const double jl = bessel(k, ir, l);
        const double jl1 = bessel(k, ir, l - 1);
        const Spinor4& psi = spec.values[k * nm + mi];
        const Spinor4 pu = up * psi;
        const Spinor4 pd = down * psi;
        coeff_a[mi] += w * p * (jl * pu + jl1 * pd);
        coeff_b[mi] += w * em * (jl1 * pu - jl * pd);
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      Spinor4 sa = Spinor4::Zero();
      Spinor4 sb = Spinor4::Zero();
      for (std::size_t mi = 0; mi < nm; ++mi) {
        const RealMatrix4& om = omega_[mi * na + a];
        sa.noalias() += om * coeff_a[mi];
        sb.noalias() += om * coeff_b[mi];
      }
      out.values[ir * na + a] = sa + gamma_r_[a] * sb;
    }
  });
  return out;
}

HankelSpectrum forward_hankel(const SphericalField& field, int lmax, const MomentumNodes& nodes) {
  return HankelTransform(field.grid, nodes, lmax, field.mass).forward(field);
}

SphericalField inverse_hankel(const HankelSpectrum& spec, const SphericalGrid& grid) {
  return HankelTransform(grid, spec.nodes, spec.lmax, spec.mass).inverse(spec);
}

HankelSpectrum evolve_hankel(const HankelSpectrum& spec, double t) {
  HankelSpectrum out = spec;
  const std::size_t nm = spec.mode_count();
  for (std::size_t k = 0; k < spec.nodes.p.size(); ++k) {
    const double p = spec.nodes.p[k];
    const double e = std::sqrt(p * p + spec.mass * spec.mass);
    for (std::size_t mi = 0; mi < nm; ++mi)
      out.values[k * nm + mi] = apply_rotor(-e * t, spec.values[k * nm + mi]);
  }
  return out;
}

Spinor4 evaluate_hankel(const HankelSpectrum& spec, const Vec3& x, double t) {
  const double r = x.norm();
  if (r == 0.0) throw std::domain_error("evaluate_hankel: r must be positive");
  const double theta = std::acos(std::clamp(x[2] / r, -1.0, 1.0));
  const double phi = std::atan2(x[1], x[0]);
  const auto modes = angular_modes(spec.lmax);
  std::vector<RealMatrix4> omega(modes.size());
  for (std::size_t mi = 0; mi < modes.size(); ++mi) omega[mi] = omega_matrix(modes[mi], theta, phi);
  const RealMatrix4 gr = gamma_r(theta, phi);
  const RealMatrix4& up = spin_up_projector();
  const RealMatrix4& down = spin_down_projector();

  Spinor4 sa = Spinor4::Zero();
  Spinor4 sb = Spinor4::Zero();
  for (std::size_t k = 0; k < spec.nodes.p.size(); ++k) {
    const double p = spec.nodes.p[k];
    const double e = std::sqrt(p * p + spec.mass * spec.mass);
    const double em = e - spec.mass;
    const double w = spec.weight(k);
    const auto j = spherical_bessel_sequence(spec.lmax, p * r);
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      const int l = modes[mi].l;
      const Spinor4 psi = apply_rotor(-e * t, spec.values[k * modes.size() + mi]);
      const Spinor4 pu = up * psi;
      const Spinor4 pd = down * psi;
      sa += w * p * (omega[mi] * (j[l] * pu + j[l - 1] * pd));
      sb += w * em * (omega[mi] * (j[l - 1] * pu - j[l] * pd));
    }
  }
  return sa + gr * sb;
}

SpacetimeHankelSpectrum spacetime_hankel_forward(const HankelTransform& transform,
                                                 const std::vector<SphericalField>& slices,
                                                 double period) {
  const int nt = static_cast<int>(slices.size());
  if (nt < 2 || nt % 2 != 0)
    throw std::invalid_argument("spacetime_hankel_forward: need an even number of time slices");
  std::vector<HankelSpectrum> per_time;
  per_time.reserve(slices.size());
  for (const auto& s : slices) per_time.push_back(transform.forward(s));

  SpacetimeHankelSpectrum out{nt, period, {}};
  const HankelSpectrum blank =
      HankelSpectrum::zeros(transform.nodes(), transform.lmax(), transform.mass());
  out.frequencies.assign(slices.size(), blank);
  const std::size_t ncoef = blank.values.size();
  std::vector<Spinor4> series(slices.size());
  for (std::size_t c = 0; c < ncoef; ++c) {
    for (std::size_t j = 0; j < slices.size(); ++j) series[j] = per_time[j].values[c];
    const auto f = time_rotor_dft(nt, period, series, +1, period / nt);
    for (std::size_t q = 0; q < slices.size(); ++q) out.frequencies[q].values[c] = f[q];
  }
  return out;
}

std::vector<SphericalField> spacetime_hankel_inverse(const HankelTransform& transform,
                                                     const SpacetimeHankelSpectrum& spec) {
  const auto nt = static_cast<std::size_t>(spec.nt);
  const std::size_t ncoef = spec.frequencies.front().values.size();
  std::vector<HankelSpectrum> per_time(nt, spec.frequencies.front());
  std::vector<Spinor4> series(nt);
  for (std::size_t c = 0; c < ncoef; ++c) {
    for (std::size_t q = 0; q < nt; ++q) series[q] = spec.frequencies[q].values[c];
    const auto f = time_rotor_dft(spec.nt, spec.period, series, -1, 1.0 / spec.period);
    for (std::size_t j = 0; j < nt; ++j) per_time[j].values[c] = f[j];
  }
  std::vector<SphericalField> out;
  out.reserve(nt);
  for (const auto& s : per_time) out.push_back(transform.inverse(s));
  return out;
}

}  // namespace majorana
