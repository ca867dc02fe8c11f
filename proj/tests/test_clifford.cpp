#include "majorana/clifford.hpp"
#include "support/oracles.hpp"

#include <Eigen/LU>
#include <doctest.h>

#include <random>

using namespace majorana;

TEST_CASE("canonical generators have the listed integer entries") {
  const auto g = canonical_integer_gammas();
  CHECK(g[1](0, 0) == 1);
  CHECK(g[1](1, 1) == -1);
  CHECK(g[0](0, 2) == 1);
  CHECK(g[0](2, 0) == -1);
  CHECK(g[2](2, 0) == 1);
  CHECK(g[3](2, 3) == -1);
}

TEST_CASE("pseudo-scalar is minus the product of the four gammas") {
  const auto g = canonical_integer_gammas();
  Eigen::Matrix4i printed;
  printed << 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
  // γ⁰γ¹γ²γ³ equals the product of the four real matrices.
  const Eigen::Matrix4i product = g[0] * g[1] * g[2] * g[3];
  CHECK(canonical_integer_gamma5() == -product);
  CHECK(canonical_integer_gamma5() == -printed);
  CHECK(max_abs(canonical_rep().gamma5 - canonical_integer_gamma5().cast<double>()) == 0.0);
}

TEST_CASE("Clifford relations hold in integer arithmetic") {
  const auto g = canonical_integer_gammas();
  const int metric[4] = {1, -1, -1, -1};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Eigen::Matrix4i ac = g[mu] * g[nu] + g[nu] * g[mu];
      const int expected = mu == nu ? -2 * metric[mu] : 0;
      CHECK(ac == expected * Eigen::Matrix4i::Identity());
    }
  CHECK(clifford_residual(canonical_rep()) == 0.0);
}

TEST_CASE("anticommutator examples") {
  const auto& rep = canonical_rep();
  CHECK(max_abs(anticommutator(rep.gamma[1], rep.gamma[2])) == 0.0);
  CHECK(max_abs(anticommutator(rep.gamma[2], rep.gamma[2]) - 2.0 * RealMatrix4::Identity()) == 0.0);
  CHECK(max_abs(rep.gamma[0] * rep.gamma[0] + RealMatrix4::Identity()) == 0.0);
  std::mt19937 rng(7);
  const RealMatrix4 a = RealMatrix4::Random();
  CHECK(max_abs(anticommutator(a, a) - 2.0 * a * a) < 1e-14);
}

TEST_CASE("basis elements: trace, determinant, squares, symmetry") {
  const auto& rep = canonical_rep();
  int plus = 0;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    const RealMatrix4& a = rep.basis[i];
    const RealMatrix4 sq = a * a;
    CHECK(max_abs(sq - rep.square_sign[i] * RealMatrix4::Identity()) == 0.0);
    if (i == 0) continue;
    CHECK(a.trace() == 0.0);
    CHECK(std::abs(a.determinant() - 1.0) < 1e-12);
    // Elements squaring to +1 are symmetric, to -1 antisymmetric.
    CHECK(max_abs(a.transpose() - rep.square_sign[i] * a) == 0.0);
    plus += rep.square_sign[i] > 0;
  }
  CHECK(plus == 9);  // plus the identity gives ten
}

TEST_CASE("Γ₂ is closed under multiplication") {
  const auto& rep = canonical_rep();
  for (const auto& a : rep.group)
    for (const auto& b : rep.group)
      CHECK(find_group_element(rep.element(a) * rep.element(b), rep).has_value());
}

TEST_CASE("omega sets") {
  const auto& rep = canonical_rep();
  const OmegaSets id = omega_sets(RealMatrix4::Identity(), rep);
  CHECK(id.commuting.size() == 16);
  CHECK(id.anticommuting.empty());

  const OmegaSets g0 = omega_sets(rep.gamma[0], rep);
  CHECK(std::find(g0.anticommuting.begin(), g0.anticommuting.end(), basis::kGamma5) !=
        g0.anticommuting.end());

  for (std::size_t i = 1; i < kBasisSize; ++i) {
    const OmegaSets s = omega_sets(rep.basis[i], rep);
    CHECK(s.commuting.size() == 8);
    CHECK(s.anticommuting.size() == 8);
    for (const auto* set : {&s.commuting, &s.anticommuting}) {
      int pos = 0;
      int neg = 0;
      for (auto j : *set) (rep.square_sign[j] > 0 ? pos : neg)++;
      CHECK(pos > 0);
      CHECK(neg > 0);
    }
  }

  CHECK_THROWS_AS(omega_sets(2.0 * RealMatrix4::Identity(), rep), std::invalid_argument);
}

TEST_CASE("commuting pairs: union of anticommuting sets is Γ minus {1, A, B, AB}") {
  const auto& rep = canonical_rep();
  for (std::size_t i = 1; i < kBasisSize; ++i)
    for (std::size_t j = 1; j < kBasisSize; ++j) {
      if (i == j) continue;
      const RealMatrix4& a = rep.basis[i];
      const RealMatrix4& b = rep.basis[j];
      if (max_abs(commutator(a, b)) != 0.0) continue;
      const auto sa = omega_sets(a, rep).anticommuting;
      const auto sb = omega_sets(b, rep).anticommuting;
      std::vector<bool> in_union(kBasisSize, false);
      for (auto k : sa) in_union[k] = true;
      for (auto k : sb) in_union[k] = true;
      const auto ab = find_group_element(a * b, rep);
      REQUIRE(ab.has_value());
      for (std::size_t k = 0; k < kBasisSize; ++k) {
        const bool excluded = k == 0 || k == i || k == j || k == ab->index;
        CHECK(in_union[k] == !excluded);
      }
    }
}

TEST_CASE("Gram matrix") {
  const auto report = verify_basis_independence(canonical_rep());
  CHECK(report.pass);
  CHECK(report.max_deviation == 0.0);
  for (int i = 0; i < 16; ++i) CHECK(report.gram(i, i) == 4.0);

  std::mt19937 rng(11);
  const MajoranaRep conj = canonical_rep().conjugated(oracle::random_orthogonal(rng));
  const auto r2 = verify_basis_independence(conj, 1e-10);
  CHECK(r2.pass);
  CHECK_FALSE(verify_basis_independence(conj, 0.0).max_deviation > 1e-10);
}

namespace {

double intertwining_residual(const RealMatrix4& s, const MajoranaRep& a, const MajoranaRep& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < kBasisSize; ++i)
    worst = std::max(worst, max_abs(s * a.basis[i] - b.basis[i] * s));
  return worst;
}

}  // namespace

TEST_CASE("intertwiner of a representation with itself is ±1") {
  const RealMatrix4 s = intertwiner(canonical_rep(), canonical_rep());
  CHECK(max_abs(pin_sign(s) - RealMatrix4::Identity()) < 1e-12);
}

TEST_CASE("intertwiner recovers a permutation similarity") {
  RealMatrix4 p = RealMatrix4::Zero();
  p(0, 2) = p(1, 0) = p(2, 3) = p(3, 1) = 1.0;
  const MajoranaRep b = canonical_rep().conjugated(p);
  const RealMatrix4 s = intertwiner(canonical_rep(), b);
  CHECK(intertwining_residual(s, canonical_rep(), b) < 1e-12);
  CHECK(std::abs(std::abs(s.determinant()) - 1.0) < 1e-12);
  CHECK(max_abs(pin_sign(s) - pin_sign(p)) < 1e-12);
}

TEST_CASE("intertwiner with swapped, sign-adjusted generators") {
  const auto& g = canonical_rep().gamma;
  // Swapping two spatial generators reverses orientation; negating one restores the algebra.
  const MajoranaRep b = MajoranaRep::from_generators({g[0], g[2], g[1], RealMatrix4(-g[3])});
  CHECK(clifford_residual(b) == 0.0);
  const RealMatrix4 s = intertwiner(canonical_rep(), b);
  CHECK(std::abs(std::abs(s.determinant()) - 1.0) < 1e-10);
  for (int mu = 0; mu < 4; ++mu) CHECK(max_abs(s * g[mu] - b.gamma[mu] * s) < 1e-10);
}

TEST_CASE("intertwiner property over random orthogonal conjugations") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const MajoranaRep b = canonical_rep().conjugated(oracle::random_orthogonal(rng));
    const RealMatrix4 s = intertwiner(canonical_rep(), b);
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu) worst = std::max(worst, max_abs(s * canonical_rep().gamma[mu] - b.gamma[mu] * s));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("intertwiner rejects an invalid representation") {
  const MajoranaRep zero = MajoranaRep::from_generators(
      {RealMatrix4::Zero(), RealMatrix4::Zero(), RealMatrix4::Zero(), RealMatrix4::Zero()});
  CHECK_THROWS_AS(intertwiner(canonical_rep(), zero), std::runtime_error);
}

TEST_CASE("rotor") {
  CHECK(max_abs(rotor(0.0) - RealMatrix4::Identity()) == 0.0);
  CHECK(max_abs(rotor(std::numbers::pi) + RealMatrix4::Identity()) < 1e-15);
  CHECK(max_abs(rotor(0.3) * rotor(1.1) - rotor(1.4)) < 1e-12);
  CHECK(max_abs(rotor(0.7).transpose() * rotor(0.7) - RealMatrix4::Identity()) < 1e-15);
  const Spinor4 v(1.0, -2.0, 0.5, 3.0);
  CHECK((apply_rotor(0.9, v) - rotor(0.9) * v).norm() < 1e-15);
}
