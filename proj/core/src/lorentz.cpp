#include "majorana/lorentz.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace majorana {

namespace {

const RealMatrix4& element(std::size_t i) { return canonical_rep().basis[i]; }

/// Component of m along basis element i (the basis is orthogonal with norm² 4).
double coefficient(const RealMatrix4& m, std::size_t i) {
  return (element(i).transpose() * m).trace() / 4.0;
}

RealMatrix4 combine(const Vec3& v, std::size_t (*index)(int)) {
  RealMatrix4 out = RealMatrix4::Zero();
  for (int j = 1; j <= 3; ++j) out += v[j - 1] * element(index(j));
  return out;
}

// Closed-form exponential of v^j G_j where (v^j G_j)² = sign·|v|²·1.
RealMatrix4 closed_exp(const Vec3& v, std::size_t (*index)(int), bool squares_negative) {
  const double norm = v.norm();
  if (norm == 0.0) return RealMatrix4::Identity();
  const RealMatrix4 unit = combine(v / norm, index);
  if (squares_negative) return std::cos(norm) * RealMatrix4::Identity() + std::sin(norm) * unit;
  return std::cosh(norm) * RealMatrix4::Identity() + std::sinh(norm) * unit;
}

}  // namespace

PinElement operator*(const PinElement& s, const PinElement& t) {
  return {s.matrix * t.matrix, s.flag_a * t.flag_a, s.flag_b * t.flag_b};
}

PinElement operator-(const PinElement& s) { return {-s.matrix, s.flag_a, s.flag_b}; }

double metric_residual(const LorentzMatrix& lambda) {
  const RealMatrix4& g = minkowski_metric();
  return max_abs(lambda.entries.transpose() * g * lambda.entries - g);
}

PinElement boost(const BoostParams& params) {
  return {closed_exp(params.b, basis::boost, false), 1, 1};
}

PinElement rotation(const RotationParams& params) {
  return {closed_exp(params.theta, basis::rotation, true), 1, 1};
}

LorentzMatrix lambda_of(const RealMatrix4& s) {
  const MajoranaRep& rep = canonical_rep();
  const RealMatrix4 s_inv = s.inverse();
  LorentzMatrix out;
  double residual = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const RealMatrix4 conj = s_inv * rep.gamma[mu] * s;
    RealMatrix4 rebuilt = RealMatrix4::Zero();
    for (int nu = 0; nu < 4; ++nu) {
      out.entries(mu, nu) = coefficient(conj, basis::gamma(nu));
      rebuilt += out.entries(mu, nu) * rep.gamma[nu];
    }
    residual = std::max(residual, max_abs(conj - rebuilt) / std::max(1.0, max_abs(conj)));
  }
  if (residual > 1e-8) throw std::domain_error("lambda_of: matrix is not in Pin(3,1)");
  return out;
}

LorentzMatrix lambda_of(const PinElement& s) { return lambda_of(s.matrix); }

std::optional<PinFlags> pin_flags(const RealMatrix4& s, double tol) {
  const MajoranaRep& rep = canonical_rep();
  const double det = s.determinant();
  if (!std::isfinite(det) || std::abs(std::abs(det) - 1.0) > tol) return std::nullopt;
  const double scale = std::max(1.0, max_abs(s));

  const RealMatrix4 g5s = rep.gamma5 * s;
  const RealMatrix4 sg5 = s * rep.gamma5;
  const RealMatrix4 g0s = rep.gamma[0] * s;
  const RealMatrix4 s_inv_t_g0 = s.inverse().transpose() * rep.gamma[0];

  auto pick = [&](const RealMatrix4& lhs, const RealMatrix4& rhs) -> int {
    const double rhs_scale = std::max(scale, max_abs(rhs));
    if (max_abs(lhs - rhs) <= tol * rhs_scale) return 1;
    if (max_abs(lhs + rhs) <= tol * rhs_scale) return -1;
    return 0;
  };
  const int a = pick(g5s, sg5);
  const int b = pick(g0s, s_inv_t_g0);
  if (a == 0 || b == 0) return std::nullopt;

  std::size_t coset = basis::kIdentity;
  if (a == 1 && b == -1) coset = basis::kGamma5;
  if (a == -1 && b == 1) coset = basis::kGamma0;
  if (a == -1 && b == -1) coset = basis::kGamma0Gamma5;
  return PinFlags{a, b, coset};
}

PinElement make_pin_element(const RealMatrix4& s) {
  const auto flags = pin_flags(s);
  if (!flags) throw std::domain_error("make_pin_element: matrix is not in Pin(3,1)");
  return {s, flags->a, flags->b};
}

PolarFactors polar_decompose(const PinElement& s) {
  const RealMatrix4 sts = s.matrix.transpose() * s.matrix;
  const Eigen::SelfAdjointEigenSolver<RealMatrix4> eig(sts);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() < 1e-14)
    throw std::domain_error("polar_decompose: SᵀS is not positive definite");

  const Eigen::Vector4d root = eig.eigenvalues().cwiseSqrt();
  const RealMatrix4 pi = eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().transpose();
  const RealMatrix4 pi_inv =
      eig.eigenvectors() * root.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  const RealMatrix4 theta = s.matrix * pi_inv;

  PolarFactors out;
  out.pi = {pi, 1, 1};
  out.theta = {theta, s.flag_a, s.flag_b};

  Vec3 c;
  Vec3 d;
  for (int j = 1; j <= 3; ++j) {
    c[j - 1] = coefficient(pi, basis::boost(j));
    d[j - 1] = coefficient(theta, basis::rotation(j));
  }
  const double sinh_b = c.norm();
  out.boost.b = sinh_b > 0.0 ? Vec3(std::asinh(sinh_b) * c / sinh_b) : Vec3::Zero();
  const double sin_t = d.norm();
  const double cos_t = theta.trace() / 4.0;
  out.rotation.theta = sin_t > 0.0 ? Vec3(std::atan2(sin_t, cos_t) * d / sin_t) : Vec3::Zero();

  out.reconstruction_error = max_abs(s.matrix - theta * pi);
  return out;
}

int commutant_dimension(const std::vector<RealMatrix4>& span,
                        const std::vector<RealMatrix4>& generators) {
  const auto rows = static_cast<Eigen::Index>(16 * generators.size());
  const auto cols = static_cast<Eigen::Index>(span.size());
  Eigen::MatrixXd system(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const RealMatrix4 comm = commutator(span[c], generators[g]);
      system.block<16, 1>(static_cast<Eigen::Index>(16 * g), c) =
          Eigen::Map<const Eigen::Matrix<double, 16, 1>>(comm.data());
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(1e-10);
  return static_cast<int>(cols - lu.rank());
}

std::vector<RealMatrix4> symmetric_span() {
  std::vector<RealMatrix4> out{element(basis::kIdentity)};
  for (int j = 1; j <= 3; ++j) out.push_back(element(basis::boost(j)));
  for (int j = 1; j <= 3; ++j) out.push_back(element(basis::gamma(j)));
  for (int j = 1; j <= 3; ++j) out.push_back(element(basis::sigma(j)));
  return out;
}

std::vector<RealMatrix4> boost_generators() {
  std::vector<RealMatrix4> out;
  for (int j = 1; j <= 3; ++j) out.push_back(element(basis::boost(j)));
  return out;
}

std::vector<RealMatrix4> rotation_generators() {
  std::vector<RealMatrix4> out;
  for (int j = 1; j <= 3; ++j) out.push_back(element(basis::rotation(j)));
  return out;
}

CommutantReport commutant_check() {
  const auto sym = symmetric_span();
  const auto& full_basis = canonical_rep().basis;
  const std::vector<RealMatrix4> full(full_basis.begin(), full_basis.end());
  const auto boosts = boost_generators();
  const auto rotations = rotation_generators();
  auto all = boosts;
  all.insert(all.end(), rotations.begin(), rotations.end());

  CommutantReport r;
  r.symmetric_dim = commutant_dimension(sym, all);
  r.symmetric_dim_rotations_only = commutant_dimension(sym, rotations);
  r.symmetric_dim_boosts_only = commutant_dimension(sym, boosts);
  r.full_dim = commutant_dimension(full, all);
  r.full_dim_rotations_only = commutant_dimension(full, rotations);
  r.full_dim_boosts_only = commutant_dimension(full, boosts);
  r.identity_commutes = commutant_dimension({RealMatrix4::Identity()}, all) == 1;
  return r;
}

std::array<RealMatrix4, 8> discrete_subgroup() {
  const std::array<std::size_t, 4> idx = {basis::kIdentity, basis::kGamma0, basis::kGamma0Gamma5,
                                          basis::kGamma5};
  std::array<RealMatrix4, 8> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[2 * i] = element(idx[i]);
    out[2 * i + 1] = -element(idx[i]);
  }
  return out;
}

}  // namespace majorana
