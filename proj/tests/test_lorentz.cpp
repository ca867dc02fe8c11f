#include "majorana/lorentz.hpp"
#include "support/oracles.hpp"

#include <Eigen/LU>
#include <doctest.h>

#include <numbers>
#include <random>

using namespace majorana;

namespace {

PinElement random_spin(std::mt19937& rng, double scale) {
  return rotation({oracle::random_vec(rng, scale)}) * majorana::boost({oracle::random_vec(rng, scale)});
}

RealMatrix4 generator_sum(const Vec3& v, std::size_t (*index)(int)) {
  RealMatrix4 out = RealMatrix4::Zero();
  for (int j = 1; j <= 3; ++j) out += v[j - 1] * canonical_rep().basis[index(j)];
  return out;
}

}  // namespace

TEST_CASE("boost closed form") {
  const PinElement id = majorana::boost({Vec3::Zero()});
  CHECK(max_abs(id.matrix - RealMatrix4::Identity()) == 0.0);
  CHECK(id.proper_orthochronous());

  const PinElement b = majorana::boost({Vec3(0.8, 0.0, 0.0)});
  CHECK(max_abs(b.matrix - b.matrix.transpose()) < 1e-15);
  CHECK(b.matrix.llt().info() == Eigen::Success);
  CHECK(std::abs(b.matrix.determinant() - 1.0) < 1e-12);

  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Vec3 v = oracle::random_vec(rng, 1.0);
    v *= 3.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng) / v.norm();
    const RealMatrix4 ref = oracle::expm(generator_sum(v, basis::boost));
    CHECK(max_abs(majorana::boost({v}).matrix - ref) < 1e-12 * std::max(1.0, max_abs(ref)));
  }
}

TEST_CASE("rotation closed form") {
  CHECK(max_abs(rotation({Vec3::Zero()}).matrix - RealMatrix4::Identity()) == 0.0);
  CHECK(max_abs(rotation({Vec3(std::numbers::pi, 0, 0)}).matrix + RealMatrix4::Identity()) < 1e-15);
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Vec3 v = oracle::random_vec(rng, 2.0);
    const RealMatrix4 r = rotation({v}).matrix;
    CHECK(max_abs(r - oracle::expm(generator_sum(v, basis::rotation))) < 1e-12);
    CHECK(max_abs(r.transpose() * r - RealMatrix4::Identity()) < 1e-13);
  }
}

TEST_CASE("Λ of a quarter-turn spinor rotation is a half-turn") {
  const LorentzMatrix l = lambda_of(rotation({Vec3(std::numbers::pi / 2, 0, 0)}));
  CHECK(max_abs(l.entries - oracle::lorentz_rotation(1, std::numbers::pi)) < 1e-12);
  // A generic angle pins the factor two and the orientation.
  for (int axis = 1; axis <= 3; ++axis) {
    Vec3 v = Vec3::Zero();
    v[axis - 1] = 0.35;
    const LorentzMatrix lr = lambda_of(rotation({v}));
    const bool plus = max_abs(lr.entries - oracle::lorentz_rotation(axis, 0.7)) < 1e-12;
    const bool minus = max_abs(lr.entries - oracle::lorentz_rotation(axis, -0.7)) < 1e-12;
    CHECK((plus || minus));
  }
}

TEST_CASE("Λ of a boost doubles the rapidity") {
  CHECK(max_abs(lambda_of(PinElement{}).entries - RealMatrix4::Identity()) == 0.0);
  for (int axis = 1; axis <= 3; ++axis) {
    Vec3 b = Vec3::Zero();
    b[axis - 1] = 0.45;
    const LorentzMatrix l = lambda_of(majorana::boost({b}));
    CHECK(max_abs(l.entries - oracle::lorentz_boost(axis, 0.9)) < 1e-12);
  }
}

TEST_CASE("Λ is a two-to-one homomorphism preserving the metric") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const PinElement s = random_spin(rng, 1.0);
    const PinElement t = random_spin(rng, 1.0);
    const LorentzMatrix ls = lambda_of(s);
    const LorentzMatrix lt = lambda_of(t);
    const LorentzMatrix lst = lambda_of(s * t);
    CHECK(max_abs(lst.entries - (ls * lt).entries) < 1e-9);
    CHECK(metric_residual(lst) < 1e-9);
    CHECK(max_abs(lambda_of(-s).entries - ls.entries) == 0.0);
    CHECK(max_abs((-s).matrix - s.matrix) > 0.0);
  }
}

TEST_CASE("lambda_of rejects a non-member") {
  RealMatrix4 m = RealMatrix4::Identity();
  m(0, 1) = 0.5;
  CHECK_THROWS_AS(lambda_of(m), std::domain_error);
}

TEST_CASE("pin flags and the coset table") {
  const auto& rep = canonical_rep();
  const auto f0 = pin_flags(rep.gamma[0]);
  REQUIRE(f0.has_value());
  CHECK(f0->a == -1);
  CHECK(f0->b == 1);
  const auto f5 = pin_flags(rep.gamma5);
  REQUIRE(f5.has_value());
  CHECK(f5->a == 1);
  CHECK(f5->b == -1);

  std::mt19937 rng(6);
  struct Row {
    std::size_t d;
    int a;
    int b;
  };
  const Row table[] = {{basis::kIdentity, 1, 1},
                       {basis::kGamma5, 1, -1},
                       {basis::kGamma0, -1, 1},
                       {basis::kGamma0Gamma5, -1, -1}};
  for (int trial = 0; trial < 20; ++trial) {
    const PinElement s = random_spin(rng, 0.8);
    for (const auto& row : table)
      for (double sign : {1.0, -1.0}) {
        const auto f = pin_flags(sign * rep.basis[row.d] * s.matrix);
        REQUIRE(f.has_value());
        CHECK(f->a == row.a);
        CHECK(f->b == row.b);
        CHECK(f->coset == row.d);
      }
  }

  // A spatial rotation matrix that is not a conjugation of the gammas.
  RealMatrix4 bad = RealMatrix4::Identity();
  bad(0, 0) = bad(1, 1) = std::cos(0.3);
  bad(0, 1) = -std::sin(0.3);
  bad(1, 0) = std::sin(0.3);
  CHECK_FALSE(pin_flags(bad).has_value());
  CHECK_FALSE(pin_flags(2.0 * RealMatrix4::Identity()).has_value());
  CHECK_THROWS_AS(make_pin_element(bad), std::domain_error);
}

TEST_CASE("discrete subgroup has eight elements and is closed") {
  const auto delta = discrete_subgroup();
  for (const auto& a : delta)
    for (const auto& b : delta) {
      bool found = false;
      for (const auto& c : delta) found = found || max_abs(a * b - c) == 0.0;
      CHECK(found);
    }
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (std::size_t j = i + 1; j < delta.size(); ++j) CHECK(max_abs(delta[i] - delta[j]) > 0.0);
}

TEST_CASE("polar decomposition") {
  const PolarFactors r = polar_decompose(rotation({Vec3(0.2, -0.4, 0.1)}));
  CHECK(max_abs(r.pi.matrix - RealMatrix4::Identity()) < 1e-12);

  const Vec3 b(0.3, -0.2, 0.5);
  const PolarFactors pb = polar_decompose(majorana::boost({b}));
  CHECK(max_abs(pb.theta.matrix - RealMatrix4::Identity()) < 1e-12);
  CHECK((pb.boost.b - b).norm() < 1e-10);

  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    Vec3 t = oracle::random_vec(rng, 1.0);
    Vec3 bb = oracle::random_vec(rng, 1.0);
    if (t.norm() > 1.0) t /= t.norm();
    if (bb.norm() > 1.0) bb /= bb.norm();
    const PinElement s = rotation({t}) * majorana::boost({bb});
    const PolarFactors f = polar_decompose(s);
    CHECK(f.reconstruction_error < 1e-9);
    CHECK((f.rotation.theta - t).norm() < 1e-9);
    CHECK((f.boost.b - bb).norm() < 1e-9);
    const RealMatrix4 rebuilt = rotation(f.rotation).matrix * majorana::boost(f.boost).matrix;
    CHECK(max_abs(rebuilt - s.matrix) < 1e-9);
  }
  CHECK_THROWS_AS(polar_decompose(PinElement{RealMatrix4::Zero(), 1, 1}), std::domain_error);
}

TEST_CASE("commutant") {
  const CommutantReport r = commutant_check();
  CHECK(r.symmetric_dim == 1);
  CHECK(r.identity_commutes);
  CHECK(r.full_dim == 2);
  CHECK(r.full_dim_rotations_only == 4);
  CHECK(r.full_dim_boosts_only == 2);
  // Rotations alone act irreducibly over the reals on the symmetric span.
  CHECK(r.symmetric_dim_rotations_only == 1);
  CHECK(r.symmetric_dim_boosts_only == 1);
  CHECK(commutant_dimension(symmetric_span(), {}) == 10);
}
