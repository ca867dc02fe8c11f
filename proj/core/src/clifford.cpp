#include "majorana/clifford.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>

namespace majorana {

namespace {

constexpr std::array<std::string_view, kBasisSize> kLabels = {
    "1",      "iγ⁰",    "iγ¹",    "iγ²",    "iγ³",    "iγ⁵",    "γ⁰γ¹",   "γ⁰γ²",
    "γ⁰γ³",   "iγ⁵γ⁰γ¹", "iγ⁵γ⁰γ²", "iγ⁵γ⁰γ³", "γ⁰γ⁵",   "γ¹γ⁵",   "γ²γ⁵",   "γ³γ⁵",
};

Eigen::Matrix4i integer_matrix(std::initializer_list<int> rows) {
  Eigen::Matrix4i m;
  auto it = rows.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

MajoranaRep MajoranaRep::from_generators(const std::array<RealMatrix4, 4>& gamma) {
  MajoranaRep rep;
  rep.gamma = gamma;
  // Products of two gammas pick up a sign from i·i; products of four do not.
  rep.gamma5 = -(gamma[0] * gamma[1] * gamma[2] * gamma[3]);

  auto& b = rep.basis;
  b[basis::kIdentity] = RealMatrix4::Identity();
  for (int mu = 0; mu < 4; ++mu) b[basis::gamma(mu)] = gamma[mu];
  b[basis::kGamma5] = rep.gamma5;
  for (int j = 1; j <= 3; ++j) {
    const RealMatrix4 g0gj = -(gamma[0] * gamma[j]);
    b[basis::boost(j)] = g0gj;
    b[basis::rotation(j)] = rep.gamma5 * g0gj;
    b[basis::sigma(j)] = -(gamma[j] * rep.gamma5);
  }
  b[basis::kGamma0Gamma5] = -(gamma[0] * rep.gamma5);

  for (std::size_t i = 0; i < kBasisSize; ++i) {
    const RealMatrix4 sq = b[i] * b[i];
    rep.square_sign[i] = sq.trace() >= 0.0 ? 1 : -1;
    rep.group[i] = {i, 1};
    rep.group[i + kBasisSize] = {i, -1};
  }
  return rep;
}

MajoranaRep MajoranaRep::conjugated(const RealMatrix4& q) const {
  std::array<RealMatrix4, 4> g;
  for (int mu = 0; mu < 4; ++mu) g[mu] = q * gamma[mu] * q.transpose();
  return from_generators(g);
}

std::string_view basis_label(std::size_t index) {
  if (index >= kBasisSize) throw std::out_of_range("basis index out of range");
  return kLabels[index];
}

std::array<Eigen::Matrix4i, 4> canonical_integer_gammas() {
  return {
      integer_matrix({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0}),
      integer_matrix({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1}),
      integer_matrix({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}),
      integer_matrix({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0}),
  };
}

Eigen::Matrix4i canonical_integer_gamma5() {
  const auto g = canonical_integer_gammas();
  return -(g[0] * g[1] * g[2] * g[3]);
}

MajoranaRep build_canonical_rep() {
  const auto gi = canonical_integer_gammas();
  std::array<RealMatrix4, 4> g;
  for (int mu = 0; mu < 4; ++mu) g[mu] = gi[mu].cast<double>();
  return MajoranaRep::from_generators(g);
}

const MajoranaRep& canonical_rep() {
  static const MajoranaRep rep = build_canonical_rep();
  return rep;
}

RealMatrix4 anticommutator(const RealMatrix4& a, const RealMatrix4& b) { return a * b + b * a; }

RealMatrix4 commutator(const RealMatrix4& a, const RealMatrix4& b) { return a * b - b * a; }

double clifford_residual(const MajoranaRep& rep) {
  const RealMatrix4& g = minkowski_metric();
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const RealMatrix4 r = anticommutator(rep.gamma[mu], rep.gamma[nu]) +
                            2.0 * g(mu, nu) * RealMatrix4::Identity();
      worst = std::max(worst, max_abs(r));
    }
  return worst;
}

std::optional<std::size_t> find_basis_element(const RealMatrix4& a, const MajoranaRep& rep,
                                              double tol) {
  for (std::size_t i = 0; i < kBasisSize; ++i)
    if (frobenius_distance(a, rep.basis[i]) < tol) return i;
  return std::nullopt;
}

std::optional<GroupElement> find_group_element(const RealMatrix4& a, const MajoranaRep& rep,
                                               double tol) {
  for (const auto& g : rep.group)
    if (frobenius_distance(a, rep.element(g)) < tol) return g;
  return std::nullopt;
}

OmegaSets omega_sets(const RealMatrix4& a, const MajoranaRep& rep) {
  if (!find_basis_element(a, rep)) throw std::invalid_argument("omega_sets: matrix is not in Γ");
  OmegaSets out;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    const RealMatrix4& b = rep.basis[i];
    if (max_abs(commutator(a, b)) < 1e-9)
      out.commuting.push_back(i);
    else
      out.anticommuting.push_back(i);
  }
  return out;
}

GramReport verify_basis_independence(const MajoranaRep& rep, double tol) {
  GramReport report;
  for (std::size_t i = 0; i < kBasisSize; ++i)
    for (std::size_t j = 0; j < kBasisSize; ++j)
      report.gram(i, j) = (rep.basis[i].transpose() * rep.basis[j]).trace();
  const auto expected = 4.0 * Eigen::Matrix<double, 16, 16>::Identity();
  report.max_deviation = (report.gram - expected).cwiseAbs().maxCoeff();
  report.pass = report.max_deviation <= tol;
  return report;
}

RealMatrix4 intertwiner(const MajoranaRep& rep_a, const MajoranaRep& rep_b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      RealMatrix4 seed = RealMatrix4::Zero();
      seed(i, j) = 1.0;
      RealMatrix4 s = RealMatrix4::Zero();
      for (const auto& g : rep_a.group) s += rep_b.inverse(g) * seed * rep_a.element(g);
      const double scale = s.norm();
      const double det = s.determinant();
      if (scale == 0.0 || std::abs(det) < 1e-8 * std::pow(scale, 4)) continue;
      return s / std::pow(std::abs(det), 0.25);
    }
  throw std::runtime_error("intertwiner: every seed gave a singular average");
}

RealMatrix4 rotor(double angle) {
  return std::cos(angle) * RealMatrix4::Identity() + std::sin(angle) * canonical_rep().gamma[0];
}

RealMatrix4 pin_sign(const RealMatrix4& s, double zero_tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(s(i, j)) > zero_tol) return s(i, j) < 0.0 ? RealMatrix4(-s) : s;
  return s;
}

}  // namespace majorana
