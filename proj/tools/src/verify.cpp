#include "verify.hpp"

#include "majorana/clifford.hpp"
#include "majorana/diagnostics.hpp"
#include "majorana/fourier.hpp"
#include "majorana/hankel.hpp"
#include "majorana/lorentz.hpp"
#include "majorana/spherical.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace majorana::cli {

namespace {

class Recorder {
 public:
  void add(std::string id, std::string identity, double measured, double tolerance, std::string note = {}) {
    checks_.push_back({std::move(id), std::move(identity), measured, tolerance, false, std::move(note)});
  }
  std::vector<CheckResult>& checks() { return checks_; }

 private:
  std::vector<CheckResult> checks_;
};

RealMatrix4 random_orthogonal(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  RealMatrix4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = n(rng);
  Eigen::HouseholderQR<RealMatrix4> qr(a);
  RealMatrix4 q = qr.householderQ();
  return q;
}

Vec3 random_vec(std::mt19937& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

PinElement random_spin(std::mt19937& rng, double scale) {
  return rotation({random_vec(rng, scale)}) * boost({random_vec(rng, scale)});
}

double max_diff(const std::vector<Spinor4>& a, const std::vector<Spinor4>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return worst;
}

double max_diff(const std::vector<RealMatrix4>& a, const std::vector<RealMatrix4>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, max_abs(a[i] - b[i]));
  return worst;
}

void clifford_checks(Recorder& rec) {
  const auto g = canonical_integer_gammas();
  const Eigen::Matrix4i metric = Eigen::Vector4i(1, -1, -1, -1).asDiagonal();
  int wrong = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (g[mu] * g[nu] + g[nu] * g[mu] != -2 * metric(mu, nu) * Eigen::Matrix4i::Identity()) ++wrong;
  rec.add("clifford.anticommutators", "{iγ^μ,iγ^ν} = -2g^{μν}, integer arithmetic (count of failures)", wrong, 0);

  const auto& rep = canonical_rep();
  double trace = 0.0;
  double det = 0.0;
  for (std::size_t i = 1; i < kBasisSize; ++i) {
    trace = std::max(trace, std::abs(rep.basis[i].trace()));
    det = std::max(det, std::abs(rep.basis[i].determinant() - 1.0));
  }
  rec.add("clifford.trace", "tr A = 0 for the 15 nontrivial basis elements", trace, 1e-12);
  rec.add("clifford.det", "det A = 1 for the 15 nontrivial basis elements", det, 1e-12);
  rec.add("clifford.gram", "tr(A_iᵀA_j) = 4δ_ij", verify_basis_independence(rep).max_deviation, 1e-12);

  int open = 0;
  for (std::size_t i = 0; i < kBasisSize; ++i)
    for (std::size_t j = 0; j < kBasisSize; ++j)
      if (!find_group_element(rep.basis[i] * rep.basis[j], rep)) ++open;
  rec.add("clifford.group_closure", "products of basis elements stay in ±basis (count of failures)", open, 0);

  int bad_split = 0;
  int bad_pairs = 0;
  for (std::size_t i = 1; i < kBasisSize; ++i) {
    const OmegaSets s = omega_sets(rep.basis[i], rep);
    if (s.commuting.size() != 8 || s.anticommuting.size() != 8) ++bad_split;
    for (std::size_t j = 1; j < kBasisSize; ++j) {
      if (j == i || max_abs(commutator(rep.basis[i], rep.basis[j])) != 0.0) continue;
      const OmegaSets t = omega_sets(rep.basis[j], rep);
      std::vector<bool> covered(kBasisSize, false);
      for (auto k : s.anticommuting) covered[k] = true;
      for (auto k : t.anticommuting) covered[k] = true;
      const auto ab = find_group_element(rep.basis[i] * rep.basis[j], rep);
      const std::size_t prod = ab ? ab->index : kBasisSize;
      for (std::size_t k = 0; k < kBasisSize; ++k) {
        const bool excluded = k == 0 || k == i || k == j || k == prod;
        if (covered[k] == excluded) {
          ++bad_pairs;
          break;
        }
      }
    }
  }
  rec.add("clifford.omega_split", "|Ω₊(A)| = |Ω₋(A)| = 8 for A ≠ 1 (count of failures)", bad_split, 0);
  rec.add("clifford.commuting_pairs", "Ω₋(A) ∪ Ω₋(B) = Γ∖{1,A,B,AB} for commuting A,B (count of failures)", bad_pairs,
          0);

  std::mt19937 rng(2024);
  double residual = 0.0;
  double det_s = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const MajoranaRep other = rep.conjugated(random_orthogonal(rng));
    const RealMatrix4 s = intertwiner(rep, other);
    for (int mu = 0; mu < 4; ++mu) residual = std::max(residual, max_abs(s * rep.gamma[mu] - other.gamma[mu] * s));
    det_s = std::max(det_s, std::abs(std::abs(s.determinant()) - 1.0));
  }
  rec.add("clifford.intertwiner", "S·A(iγ^μ) = B(iγ^μ)·S over 100 random conjugations", residual, 1e-9);
  rec.add("clifford.intertwiner_det", "|det S| = 1 over 100 random conjugations", det_s, 1e-9);
}

void lorentz_checks(Recorder& rec) {
  std::mt19937 rng(77);
  const RealMatrix4 metric = minkowski_metric();
  double hom = 0.0;
  double met = 0.0;
  int sign_mismatch = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PinElement s = random_spin(rng, 1.0);
    const PinElement t = random_spin(rng, 1.0);
    const LorentzMatrix lst = lambda_of(s * t);
    hom = std::max(hom, max_abs(lst.entries - (lambda_of(s) * lambda_of(t)).entries));
    met = std::max(met, max_abs(lst.entries.transpose() * metric * lst.entries - metric));
    if (lambda_of(-s).entries != lambda_of(s).entries) ++sign_mismatch;
  }
  rec.add("lorentz.homomorphism", "Λ(SS′) = Λ(S)Λ(S′) over 200 random pairs", hom, 1e-9);
  rec.add("lorentz.metric", "ΛᵀgΛ = g", met, 1e-9);
  rec.add("lorentz.sign", "Λ(-S) = Λ(S) exactly (count of failures)", sign_mismatch, 0);

  double rapidity = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    const LorentzMatrix l = lambda_of(boost({0.45 * Vec3::Unit(axis - 1)}));
    RealMatrix4 expected = RealMatrix4::Identity();
    expected(0, 0) = expected(axis, axis) = std::cosh(0.9);
    expected(0, axis) = expected(axis, 0) = std::sinh(0.9);
    rapidity = std::max(rapidity, max_abs(l.entries - expected));
  }
  rec.add("lorentz.boost_rapidity", "Λ(exp(b γ⁰γʲ)) is a boost of rapidity 2b", rapidity, 1e-12);

  const auto& rep = canonical_rep();
  struct Row {
    std::size_t d;
    int a;
    int b;
  };
  const Row table[] = {{basis::kIdentity, 1, 1},
                       {basis::kGamma5, 1, -1},
                       {basis::kGamma0, -1, 1},
                       {basis::kGamma0Gamma5, -1, -1}};
  int coset_failures = 0;
  for (const auto& row : table)
    for (int trial = 0; trial < 10; ++trial) {
      const PinElement s = random_spin(rng, 0.8);
      for (double sign : {1.0, -1.0}) {
        const auto f = pin_flags(sign * rep.basis[row.d] * s.matrix);
        if (!f || f->a != row.a || f->b != row.b || f->coset != row.d) ++coset_failures;
      }
    }
  rec.add("lorentz.coset_table", "(a,b) flags ↦ coset {1, iγ⁵, iγ⁰, γ⁰γ⁵} (count of failures)", coset_failures, 0);

  double polar = 0.0;
  for (int trial = 0; trial < 50; ++trial) polar = std::max(polar, polar_decompose(random_spin(rng, 1.0)).reconstruction_error);
  rec.add("lorentz.polar", "S = exp(θ·rotation)·exp(b·boost)", polar, 1e-9);

  const CommutantReport c = commutant_check();
  rec.add("lorentz.commutant", "commutant of Spin⁺ in the symmetric span is the scalars (|dim - 1|)",
          std::abs(c.symmetric_dim - 1), 0);
  rec.add("lorentz.commutant_rotations_only",
          "rotations alone leave a commutant larger than span{1, iγ⁵} in End(R⁴) (4 - dim)",
          std::max(0, 4 - c.full_dim_rotations_only), 0,
          "symmetric-span dimension with rotations only is " + std::to_string(c.symmetric_dim_rotations_only));
}

void fourier_checks(Recorder& rec, const RunConfig& config, std::vector<std::string>& skipped) {
  const double m = config.mass;
  const CartesianGrid g = CartesianGrid::make(config.grid.n, config.grid.length);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::size_t degenerate = 0;
  for (std::size_t q = 0; q < g.size(); ++q) degenerate += is_degenerate(g, q, m) ? 1 : 0;
  const std::string note = degenerate ? std::to_string(degenerate) + " degenerate momenta skipped" : "";
  if (degenerate)
    skipped.push_back("fourier: " + std::to_string(degenerate) +
                      " massless modes with zero spectral momentum are zeroed and excluded");

  double ortho = 0.0;
  for (int pairs = 0; pairs < 20;) {
    const std::size_t q = pick(rng);
    std::size_t p = pick(rng);
    if (pairs % 3 == 0) p = q;
    if (pairs % 3 == 1) p = g.negated(q);
    if (is_degenerate(g, q, m) || is_degenerate(g, p, m)) continue;
    RealMatrix4 sum = RealMatrix4::Zero();
    for (std::size_t x = 0; x < g.size(); ++x)
      sum += grid_kernel(g, q, x, m) * grid_kernel(g, p, x, m).transpose() * g.cell_volume();
    ortho = std::max(ortho, max_abs(sum - (p == q ? g.box_volume() : 0.0) * RealMatrix4::Identity()) / g.box_volume());
    ++pairs;
  }
  rec.add("fourier.orthogonality", "Σ_x O(q,x)Oᵀ(p,x)dx³ = L³δ_qp, 20 sampled pairs", ortho, 1e-9, note);

  const std::size_t y = pick(rng);
  auto column = [&](std::size_t p, std::size_t x) {
    return is_degenerate(g, p, m) ? rotor(-g.momentum(p).dot(g.position(x))) : grid_kernel(g, p, x, m);
  };
  std::vector<RealMatrix4> at_y(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) at_y[p] = column(p, y);
  double complete = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    RealMatrix4 sum = RealMatrix4::Zero();
    for (std::size_t p = 0; p < g.size(); ++p) sum += at_y[p].transpose() * column(p, x);
    complete = std::max(complete, max_abs(sum / g.box_volume() * g.cell_volume() -
                                          (x == y ? 1.0 : 0.0) * RealMatrix4::Identity()));
  }
  rec.add("fourier.completeness", "L⁻³Σ_p Oᵀ(p,y)O(p,x) = δ_yx/dx³, one sampled row", complete, 1e-8, note);

  {
    const CartesianGrid small = CartesianGrid::make(std::min(config.grid.n, 8), config.grid.length);
    CartesianField f = CartesianField::zeros(small, m);
    std::normal_distribution<double> n(0.0, 1.0);
    for (auto& v : f.values) v = Spinor4(n(rng), n(rng), n(rng), n(rng));
    const MomentumSpectrum s = forward(f);
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t q = 0; q < small.size(); ++q) {
      if (is_degenerate(small, q, m)) continue;
      Spinor4 direct = Spinor4::Zero();
      for (std::size_t x = 0; x < small.size(); ++x) direct += grid_kernel(small, q, x, m) * f.values[x] * small.cell_volume();
      err = std::max(err, (s.values[q] - direct).cwiseAbs().maxCoeff());
      scale = std::max(scale, direct.cwiseAbs().maxCoeff());
    }
    rec.add("fourier.separable", "separable rotor transform equals the direct sum Σ_x O(p,x)Ψ(x)dx³", err / scale, 1e-11);
  }

  {
    std::size_t p0 = g.index(g.n / 2 + 1, g.n / 2 - 1, g.n / 2 + 1);
    const Spinor4 chi(0.3, -1.2, 0.7, 2.0);
    CartesianField f = CartesianField::zeros(g, m);
    for (std::size_t x = 0; x < g.size(); ++x) f.values[x] = grid_kernel(g, p0, x, m).transpose() * chi / g.box_volume();
    const MomentumSpectrum s = forward(f);
    double err = (s.values[p0] - chi).cwiseAbs().maxCoeff();
    for (std::size_t q = 0; q < g.size(); ++q)
      if (q != p0) err = std::max(err, s.values[q].cwiseAbs().maxCoeff());
    rec.add("fourier.single_mode", "Ψ = Oᵀ(p₀,x)χ/L³ transforms to χ at p₀ and 0 elsewhere", err, 1e-10);
  }

  const Spinor4 chi(1.0, 0.5, -0.25, 0.75);
  CartesianField gauss = CartesianField::zeros(g, m);
  for (std::size_t i = 0; i < g.size(); ++i)
    gauss.values[i] =
        std::exp(-(g.position(i) - Vec3(0.3, -0.2, 0.1)).squaredNorm() / (2 * std::pow(config.grid.length / 10, 2))) * chi;
  if (degenerate) {
    // Project onto the nondegenerate subspace first.
    gauss = inverse(forward(gauss));
  }
  const MomentumSpectrum gs = forward(gauss);
  rec.add("fourier.parseval", "Σ_p|ψ|²/L³ = Σ_x|Ψ|²dx³ (relative), Gaussian σ = L/10",
          std::abs(gs.norm_squared() - gauss.norm_squared()) / gauss.norm_squared(), 1e-8, note);
  rec.add("fourier.round_trip", "inverse(forward(Ψ)) = Ψ (max norm), Gaussian σ = L/10",
          max_diff(inverse(gs).values, gauss.values), 1e-9, note);

  MomentumSpectrum rs = MomentumSpectrum::zeros(g, m);
  std::normal_distribution<double> n(0.0, 1.0);
  for (std::size_t q = 0; q < g.size(); ++q)
    if (!is_degenerate(g, q, m)) rs.values[q] = Spinor4(n(rng), n(rng), n(rng), n(rng));
  rec.add("fourier.evolve_additivity", "evolve(evolve(ψ,t₁),t₂) = evolve(ψ,t₁+t₂)",
          max_diff(evolve(evolve(rs, 0.4), 1.1).values, evolve(rs, 1.5).values), 1e-12);
  MomentumSpectrum stepped = rs;
  for (int i = 0; i < 1000; ++i) stepped = evolve(stepped, 0.01);
  double drift = 0.0;
  for (std::size_t q = 0; q < g.size(); ++q) drift = std::max(drift, std::abs(stepped.values[q].norm() - rs.values[q].norm()));
  rec.add("fourier.mode_norm", "per-mode norm preserved over 1000 evolution steps", drift, 1e-12);

  {
    const double rm = m > 0.0 ? m : 1.0;
    auto residual = [&](int nn) {
      const CartesianGrid grid = CartesianGrid::make(nn, config.grid.length);
      MomentumSpectrum mode = MomentumSpectrum::zeros(grid, rm);
      mode.values[grid.index(nn / 2 + 1, nn / 2 - 1, nn / 2 + 2)] = Spinor4(1.0, -0.5, 0.25, 0.8);
      const double dt = 0.5 * grid.dx();
      return dirac_residual(inverse(evolve(mode, 0.7 - dt)), inverse(evolve(mode, 0.7)), inverse(evolve(mode, 0.7 + dt)),
                            dt);
    };
    const double ratio = residual(config.grid.n) / residual(2 * config.grid.n);
    rec.add("fourier.dirac_residual_order", "centered-difference Dirac residual ratio when dx halves (|ratio - 4|)",
            std::abs(ratio - 4.0), 0.3, "ratio " + std::to_string(ratio));
  }

  const ComplexMatrix4 plus = particle_projector(1);
  const ComplexMatrix4 minus = particle_projector(-1);
  const ComplexMatrix4 id = ComplexMatrix4::Identity();
  rec.add("fourier.projectors", "P±² = P±, P₊ + P₋ = 1",
          std::max({(plus * plus - plus).cwiseAbs().maxCoeff(), (minus * minus - minus).cwiseAbs().maxCoeff(),
                    (plus + minus - id).cwiseAbs().maxCoeff()}),
          1e-14);

  {
    const double pm = m > 0.0 ? m : 0.8;
    const std::size_t p0 = g.index(g.n / 2 - 1, g.n / 2 + 1, g.n / 2 + 2);
    MomentumSpectrum s = MomentumSpectrum::zeros(g, pm);
    s.values[p0] = Spinor4(0.4, 1.1, -0.3, 0.9);
    const Vec3 p = g.momentum(p0);
    const double en = energy(p, pm);
    ComplexMatrix4 pslash = en * dirac_gamma(0);
    for (int j = 0; j < 3; ++j) pslash -= p[j] * dirac_gamma(j + 1);
    const double norm = std::sqrt((en + pm) * 2 * en);
    for (int sign : {1, -1}) {
      const ComplexSpectrum proj = project_particle(s, sign);
      const auto field = reconstruct(proj, 0.35);
      double err = 0.0;
      for (std::size_t x = 0; x < g.size(); ++x) {
        const double phase = sign * (p.dot(g.position(x)) - en * 0.35);
        const DiracSpinor ref = (pm * id + static_cast<double>(sign) * pslash) / norm *
                                std::exp(std::complex<double>(0.0, phase)) * proj.values[p0] / g.box_volume();
        err = std::max(err, (field[x] - ref).cwiseAbs().maxCoeff());
      }
      if (sign > 0)
        rec.add("fourier.electron_form", "P₊ solution equals the γ⁰ → 1 phase substitution", err, 1e-10);
      else
        rec.add("fourier.positron_form", "P₋ solution equals the γ⁰ → -1 phase substitution", err, 1e-10);
    }
  }

  {
    const CartesianGrid g8 = CartesianGrid::make(8, config.grid.length);
    SpacetimeField f = SpacetimeField::zeros(g8, 8, 4.0, m);
    const double w = config.grid.length / 10;
    for (int j = 0; j < 8; ++j)
      for (std::size_t x = 0; x < g8.size(); ++x) {
        const double tt = f.time(j) - 2.0;
        f.values[j * g8.size() + x] = std::exp(-(g8.position(x).squaredNorm() + tt * tt) / (2 * w * w)) * chi;
      }
    if (degenerate) f = spacetime_inverse(spacetime_forward(f));
    rec.add("fourier.spacetime_round_trip", "4D transform round trip on an 8⁴ grid (max norm)",
            max_diff(spacetime_inverse(spacetime_forward(f)).values, f.values), 1e-9, note);
  }

  {
    const int nt = 32;
    const double period = 3.7;
    double worst = 0.0;
    for (int b = 0; b < nt; ++b) {
      const double wb = 2 * std::numbers::pi * (b - nt / 2) / period;
      std::vector<Spinor4> series(nt);
      for (int j = 0; j < nt; ++j) series[j] = rotor(-wb * j * period / nt) * chi;
      const auto out = time_rotor_dft(nt, period, series, 1, period / nt);
      for (int a = 0; a < nt; ++a)
        worst = std::max(worst, (out[a] - (a == b ? period : 0.0) * chi).cwiseAbs().maxCoeff() / period);
    }
    rec.add("fourier.time_orthogonality", "Σ_j rotor((ω_a - ω_b)t_j)dt = Tδ_ab on 32 time points", worst, 1e-10);
  }
}

void angular_checks(Recorder& rec, const RunConfig& config) {
  const SphericalGrid grid = SphericalGrid::make(1, 1.0, config.spherical.ntheta, config.spherical.nphi);
  const AngularDifferentiator d(grid);
  const int lmax = config.spherical.lmax;
  const RealMatrix4& g0 = canonical_rep().gamma[0];

  int algebra = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      RealMatrix4 rhs = RealMatrix4::Zero();
      for (int k = 1; k <= 3; ++k) rhs += (i - j) * (j - k) * (k - i) / 2 * g0 * sigma(k) / 2.0;
      if (commutator(sigma(i) / 2.0, sigma(j) / 2.0) != rhs) ++algebra;
      if (commutator(g0, sigma(i)) != RealMatrix4::Zero()) ++algebra;
    }
  rec.add("angular.spin_algebra", "[σⁱ/2,σʲ/2] = iγ⁰εⁱʲᵏσᵏ/2 and [iγ⁰,σᵏ] = 0 exactly (count of failures)", algebra, 0);

  double y_ortho = 0.0;
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) {
      const auto a = sample_angular(grid, [&](double t, double p) { return majorana_Y(l, m, t, p); });
      for (int l2 = 0; l2 <= lmax; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const auto b = sample_angular(grid, [&](double t, double p) { return majorana_Y(l2, m2, t, p); });
          y_ortho = std::max(y_ortho, max_abs(angular_inner(grid, a, b) -
                                              ((l == l2 && m == m2) ? 1.0 : 0.0) * RealMatrix4::Identity()));
        }
    }
  rec.add("angular.Y_orthonormality", "⟨Y_l′m′, Y_lm⟩ = δδ on the angular grid", y_ortho, 1e-9);

  const auto modes = angular_modes(lmax);
  std::vector<std::vector<RealMatrix4>> omega;
  for (const auto& m : modes) omega.push_back(sample_angular(grid, [&](double t, double p) { return omega_matrix(m, t, p); }));
  double o_ortho = 0.0;
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = 0; b < modes.size(); ++b)
      o_ortho = std::max(o_ortho, max_abs(angular_inner(grid, omega[a], omega[b]) -
                                          (a == b ? 1.0 : 0.0) * RealMatrix4::Identity()));
  rec.add("angular.Omega_orthonormality", "⟨Ω_l′μ′, Ω_lμ⟩ = δδ·1 on the angular grid", o_ortho, 1e-9);

  const RealMatrix4& g5 = canonical_rep().gamma5;
  double j3 = 0.0;
  double sl = 0.0;
  double sr = 0.0;
  double gr = 0.0;
  double slr = 0.0;
  for (std::size_t mi = 0; mi < modes.size(); ++mi) {
    const auto& m = modes[mi];
    const auto& om = omega[mi];
    auto jz = angular_momentum(d, om, 3);
    std::vector<RealMatrix4> expect(om.size());
    for (std::size_t a = 0; a < om.size(); ++a) {
      jz[a] += sigma(3) * om[a] / 2.0;
      expect[a] = (m.mu + 0.5) * om[a];
    }
    j3 = std::max(j3, max_diff(jz, expect));
    const auto s = sigma_dot_L(d, om);
    for (std::size_t a = 0; a < om.size(); ++a) expect[a] = -om[a] * (m.l * sigma(3) + RealMatrix4::Identity());
    sl = std::max(sl, max_diff(s, expect));
    std::vector<RealMatrix4> rom(om.size());
    for (int it = 0; it < grid.ntheta; ++it)
      for (int ip = 0; ip < grid.nphi; ++ip) {
        const std::size_t a = grid.angular_index(it, ip);
        const double t = grid.theta[it];
        const double p = grid.phi[ip];
        sr = std::max(sr, max_abs(sigma_r(t, p) * om[a] + om[a] * sigma(1)));
        const double sign = (m.mu % 2 == 0) ? 1.0 : -1.0;
        gr = std::max(gr, max_abs(gamma_r(t, p) * om[a] - sign * omega_matrix({m.l, -m.mu - 1}, t, p) * g5));
        rom[a] = gamma_r(t, p) * om[a];
      }
    const auto s2 = sigma_dot_L(d, rom);
    for (std::size_t a = 0; a < om.size(); ++a) expect[a] = rom[a] * (m.l * sigma(3) - RealMatrix4::Identity());
    slr = std::max(slr, max_diff(s2, expect));
  }
  rec.add("angular.J3", "(L₃ + σ³/2)Ω_lμ = (μ + ½)Ω_lμ", j3, 1e-6);
  rec.add("angular.sigma_L", "σ·L Ω_lμ = -Ω_lμ(lσ³ + 1)", sl, 1e-6);
  rec.add("angular.sigma_r", "σʳΩ_lμ = -Ω_lμσ¹", sr, 1e-6);
  rec.add("angular.gamma_r", "iγʳΩ_lμ = (-1)^μ Ω_l,-μ-1 iγ⁵", gr, 1e-6);
  rec.add("angular.sigma_L_gamma_r", "σ·L iγʳΩ_lμ = iγʳΩ_lμ(lσ³ - 1)", slr, 1e-6);

  const auto f = sample_angular(grid, [](double t, double p) {
    return majorana_Y(2, 1, t, p) * (RealMatrix4::Identity() + sigma(2)) + majorana_Y(3, -1, t, p);
  });
  const auto sf = sigma_dot_L(d, f);
  std::vector<RealMatrix4> rhs(f.size(), RealMatrix4::Zero());
  for (int k = 1; k <= 3; ++k) {
    auto jk = [&](const std::vector<RealMatrix4>& v) {
      auto out = angular_momentum(d, v, k);
      for (std::size_t a = 0; a < v.size(); ++a) out[a] += sigma(k) * v[a] / 2.0;
      return out;
    };
    const auto jj = jk(jk(f));
    const auto ll = angular_momentum(d, angular_momentum(d, f, k), k);
    for (std::size_t a = 0; a < f.size(); ++a) rhs[a] += jj[a] - ll[a];
  }
  for (std::size_t a = 0; a < f.size(); ++a) rhs[a] -= 0.75 * f[a];
  rec.add("angular.sigma_L_identity", "σ·L = (L + σ/2)² - L² - 3/4", max_diff(sf, rhs), 1e-6);
}

template <class F>
SphericalField sample(const SphericalGrid& grid, double mass, F&& f) {
  SphericalField out = SphericalField::zeros(grid, mass);
  for (int ir = 0; ir < grid.nr; ++ir)
    for (int it = 0; it < grid.ntheta; ++it)
      for (int ip = 0; ip < grid.nphi; ++ip) out.values[grid.index(ir, it, ip)] = f(grid.r[ir], grid.theta[it], grid.phi[ip]);
  return out;
}

void hankel_checks(Recorder& rec, const RunConfig& config) {
  const auto& sc = config.spherical;
  const double mass = config.mass;
  const SphericalGrid grid = SphericalGrid::make(sc.nr, sc.rmax, sc.ntheta, sc.nphi);
  const HankelTransform tr(grid, MomentumNodes::for_grid(grid, sc.np), sc.lmax, mass);
  const AngularDifferentiator d(grid);
  const auto& g = canonical_rep().gamma;
  const auto modes = angular_modes(sc.lmax);

  double eigen = 0.0;
  const std::size_t nk = tr.nodes().p.size();
  for (const auto& mode : modes)
    for (std::size_t k : {nk / 50, nk / 6})
      for (int ir : {grid.nr / 25, grid.nr / 4, 3 * grid.nr / 4}) {
        const double p = tr.nodes().p[k];
        const double r = grid.r[ir];
        const double e = std::sqrt(p * p + mass * mass);
        const auto j = spherical_bessel_sequence(mode.l + 1, p * r);
        auto dj = [&](int l) { return p * (l == 0 ? -j[1] : j[l - 1] - (l + 1) * j[l] / (p * r)); };
        const auto lam = sample_angular(grid, [&](double t, double ph) { return hankel_kernel(p, mode, r, t, ph, mass); });
        const auto sl = sigma_dot_L(d, lam);
        double res = 0.0;
        double scale = 0.0;
        for (int it = 0; it < grid.ntheta; ++it)
          for (int ip = 0; ip < grid.nphi; ++ip) {
            const double t = grid.theta[it];
            const double ph = grid.phi[ip];
            const RealMatrix4 om = omega_matrix(mode, t, ph);
            const RealMatrix4 gr = gamma_r(t, ph);
            const RealMatrix4 id = RealMatrix4::Identity();
            const RealMatrix4 dlam = (p * dj(mode.l) * id + (e - mass) * dj(mode.l - 1) * gr) * om * spin_up_projector() +
                                     (p * dj(mode.l - 1) * id - (e - mass) * dj(mode.l) * gr) * om * spin_down_projector();
            const std::size_t a = grid.angular_index(it, ip);
            res = std::max(res, max_abs(g[0] * (gr * (dlam - sl[a] / r) - mass * lam[a]) + e * lam[a] * g[0]));
            scale = std::max(scale, e * max_abs(lam[a]));
          }
        eigen = std::max(eigen, res / scale);
      }
  rec.add("hankel.eigen_relation", "iγ⁰(iγʲ∂_j - m)Λ = -E_pΛiγ⁰ with spectral angular derivatives (relative)", eigen,
          1e-5);

  const Spinor4 c(1.0, 0.3, -0.5, 0.8);
  const double width = sc.rmax / 40.0 * 6.0;
  const SphericalField f = sample(grid, mass, [&](double r, double t, double ph) -> Spinor4 {
    return std::exp(-r * r / (2 * width * width)) * omega_matrix({1, 0}, t, ph) * c;
  });
  const HankelSpectrum s = tr.forward(f);
  double inside = 0.0;
  double outside = 0.0;
  for (std::size_t k = 0; k < nk; ++k)
    for (const auto& m : modes) {
      const double v = s.values[s.index(k, m)].cwiseAbs().maxCoeff();
      ((m.l == 1 && (m.mu == 0 || m.mu == -1)) ? inside : outside) =
          std::max((m.l == 1 && (m.mu == 0 || m.mu == -1)) ? inside : outside, v);
    }
  rec.add("hankel.angular_sector", "Gaussian×Ω₁₀ has no weight outside (l,μ) ∈ {(1,0),(1,-1)} (relative)",
          outside / inside, 1e-8);

  const SphericalField back = tr.inverse(s);
  SphericalField diff = back;
  for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= f.values[i];
  rec.add("hankel.round_trip", "inverse(forward(Ψ)) = Ψ, Gaussian×Ω₁₀ (relative L²)",
          std::sqrt(diff.norm_squared() / f.norm_squared()), 1e-4, "tail fraction " + std::to_string(s.tail_fraction));

  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double inner = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::pair<AngularMode, Spinor4>> terms;
    terms.emplace_back(AngularMode{1, 0}, Spinor4(u(rng), u(rng), u(rng), u(rng)));
    terms.emplace_back(AngularMode{1, -1}, Spinor4(u(rng), u(rng), u(rng), u(rng)));
    for (int i = 0; i < 2; ++i)
      terms.emplace_back(modes[static_cast<std::size_t>((u(rng) + 1) * 0.5 * (modes.size() - 1))],
                         Spinor4(u(rng), u(rng), u(rng), u(rng)));
    const double pw = (4.0 + 2.0 * (u(rng) + 1)) * sc.rmax / 40.0;
    const SphericalField phi = sample(grid, mass, [&](double r, double t, double ph) -> Spinor4 {
      Spinor4 v = Spinor4::Zero();
      for (const auto& [m, coeff] : terms) v += omega_matrix(m, t, ph) * coeff;
      return std::exp(-r * r / (2 * pw * pw)) * v;
    });
    inner = std::max(inner, std::abs(phi.inner(back) - phi.inner(f)) / std::sqrt(phi.norm_squared() * f.norm_squared()));
  }
  rec.add("hankel.inner_products", "⟨Φ, Ψ′⟩ = ⟨Φ, Ψ⟩ for 5 random test functions (relative)", inner, 1e-6);

  const HankelSpectrum later = evolve_hankel(s, 2.5);
  rec.add("hankel.evolve_norm", "Σ weight·|ψ|² preserved by evolution (relative)",
          std::abs(later.norm_squared() - s.norm_squared()) / s.norm_squared(), 1e-12);
}

}  // namespace

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["check_count"] = checks.size();
  j["failed"] = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
  j["skipped"] = skipped;
  auto& list = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["identity"] = c.identity;
    e["measured"] = c.measured;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    if (!c.note.empty()) e["note"] = c.note;
    list.push_back(e);
  }
  return j.dump(2) + "\n";
}

VerifyReport run_verify(const RunConfig& config) {
  Recorder rec;
  VerifyReport report;
  clifford_checks(rec);
  lorentz_checks(rec);
  fourier_checks(rec, config, report.skipped);
  angular_checks(rec, config);
  hankel_checks(rec, config);

  for (const auto& [id, tol] : config.tolerances) {
    auto it = std::find_if(rec.checks().begin(), rec.checks().end(), [&](const auto& c) { return c.id == id; });
    if (it == rec.checks().end()) throw ConfigError("tolerance override for unknown check '" + id + "'");
    it->tolerance = tol;
  }
  report.pass = true;
  for (auto& c : rec.checks()) {
    c.pass = std::isfinite(c.measured) && c.measured <= c.tolerance;
    report.pass = report.pass && c.pass;
  }
  report.checks = std::move(rec.checks());
  return report;
}

}  // namespace majorana::cli
