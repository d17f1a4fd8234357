#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "algflow/algebra.hpp"
#include "algflow/flow.hpp"
#include "test_support.hpp"

using namespace algflow;
using algflow::testing::random_tensor;
using std::numbers::pi;

namespace {

Vector vec(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

StructMatrix2x4 m2x4(std::initializer_list<double> row0, std::initializer_list<double> row1) {
  StructMatrix2x4 m;
  int c = 0;
  for (double x : row0) m(0, c++) = x;
  c = 0;
  for (double x : row1) m(1, c++) = x;
  return m;
}

BasisChange random_well_conditioned(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    Matrix p(2, 2);
    p << u(rng), u(rng), u(rng), u(rng);
    const double d = std::abs(p.determinant());
    if (d >= 0.5 && d <= 2.0) return BasisChange(p);
  }
}

}  // namespace

TEST_CASE("products of basis vectors in the flow algebra") {
  const double t = 0.7;
  const Algebra a = flow_algebra(t);
  const Vector e1 = vec(1, 0), e2 = vec(0, 1);
  CHECK((a.product(e1, e1) - vec(std::cos(t), std::sin(t))).norm() < 1e-15);
  CHECK((a.product(e2, e1) - vec(-std::sin(t), std::cos(t))).norm() < 1e-15);
  CHECK(a.product(vec(0, 0), vec(0.3, -2.0)).isZero());
  CHECK_THROWS_AS(a.product(Vector::Zero(3), e1), std::invalid_argument);
}

TEST_CASE("product is bilinear") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const Algebra a(random_tensor(rng, 3));
    Vector x(3), y(3), z(3);
    for (int i = 0; i < 3; ++i) {
      x(i) = g(rng);
      y(i) = g(rng);
      z(i) = g(rng);
    }
    const double l = g(rng);
    CHECK((a.product(x + l * z, y) - a.product(x, y) - l * a.product(z, y)).norm() < 1e-12);
    CHECK((a.product(x, y + l * z) - a.product(x, y) - l * a.product(x, z)).norm() < 1e-12);
  }
}

TEST_CASE("commutativity predicate") {
  CHECK(is_commutative(flow_algebra(3 * pi / 4)));
  CHECK_FALSE(is_commutative(flow_algebra(0.0)));
  CHECK(commutativity_residual(flow_algebra(0.0)) == 1.0);

  std::mt19937_64 rng(12);
  CubicTensor sym = random_tensor(rng, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < 3; ++k) sym(j, i, k) = sym(i, j, k);
  CHECK(is_commutative(Algebra(sym)));
  CHECK(commutativity_residual(Algebra(sym)) == 0.0);
}

TEST_CASE("associativity predicate") {
  CHECK(is_associative(flow_algebra(0.0)));
  CHECK(is_associative(flow_algebra(3 * pi / 4)));
  CHECK_FALSE(is_associative(flow_algebra(pi / 3)));
  CHECK(associativity_residual(flow_algebra(pi / 3)) > 0.1);
}

TEST_CASE("associativity residual matches the associator of basis vectors") {
  std::mt19937_64 rng(13);
  const Algebra a(random_tensor(rng, 2));
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Vector ei = Vector::Unit(2, i), ej = Vector::Unit(2, j), ek = Vector::Unit(2, k);
        const Vector assoc = a.product(a.product(ei, ej), ek) - a.product(ei, a.product(ej, ek));
        worst = std::max(worst, assoc.cwiseAbs().maxCoeff());
      }
  CHECK(associativity_residual(a) == doctest::Approx(worst).epsilon(1e-12));
}

TEST_CASE("basis change construction") {
  CHECK_THROWS_AS(BasisChange::from_rows(1, 2, 2, 4), std::domain_error);
  CHECK_THROWS_AS(BasisChange(Matrix::Zero(2, 3)), std::invalid_argument);
  const auto p = BasisChange::from_rows(1, 2, 3, 4);
  CHECK(p.determinant() == doctest::Approx(-2.0));
  CHECK((p.matrix() * p.inverse() - Matrix::Identity(2, 2)).norm() < 1e-15);
  CHECK(p.u() == 3.0);
  CHECK(p.v() == 7.0);
  CHECK(p.alpha() == -1.0);
  CHECK(p.beta() == -1.0);
  CHECK_THROWS_AS(BasisChange::identity(3).u(), std::logic_error);
}

TEST_CASE("change of basis examples") {
  const Algebra a1 = flow_algebra(0.0);
  const Algebra neg = change_of_basis(a1, BasisChange(-Matrix::Identity(2, 2)));
  CHECK(max_abs_diff(neg.constants(), scale(-1.0, a1.constants())) == 0.0);
  CHECK(change_of_basis(a1, BasisChange::identity(2)) == a1);

  const double r = std::sqrt(2.0) / 4;
  const auto p = BasisChange::from_rows(r, r, 0.5, -0.5);
  const auto got = to_2x4(change_of_basis(flow_algebra(pi / 4), p));
  const auto want = m2x4({0.5, 0, 0, 1}, {0, -0.5, 0.5, 0});
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("change of basis agrees with brute-force re-derivation") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const Algebra a(random_tensor(rng, 2));
    const BasisChange p = random_well_conditioned(rng);
    const Algebra b = change_of_basis(a, p);
    const Matrix& m = p.matrix();
    const Vector f[2] = {m.row(0).transpose(), m.row(1).transpose()};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Vector z = a.product(f[i], f[j]);
        // z = w_0 f_0 + w_1 f_1, solved as a 2x2 system
        const Vector w = m.transpose().fullPivLu().solve(z);
        for (int k = 0; k < 2; ++k) CHECK(std::abs(b.constants()(i, j, k) - w(k)) < 1e-10);
      }
  }
}

TEST_CASE("change of basis composes and inverts") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Algebra a(random_tensor(rng, 2));
    const BasisChange p = random_well_conditioned(rng);
    const BasisChange q = random_well_conditioned(rng);
    const Algebra back = change_of_basis(change_of_basis(a, p), p.inverted());
    CHECK(max_abs_diff(back.constants(), a.constants()) < 1e-11);
    const Algebra two_step = change_of_basis(change_of_basis(a, p), q);
    const Algebra one_step = change_of_basis(a, p.then(q));
    CHECK(max_abs_diff(two_step.constants(), one_step.constants()) < 1e-10);
  }
}

TEST_CASE("predicates and rank are invariant under basis change") {
  std::mt19937_64 rng(16);
  const Algebra samples[] = {flow_algebra(0.0), flow_algebra(3 * pi / 4), flow_algebra(pi / 2), flow_algebra(1.1)};
  for (const auto& a : samples) {
    for (int trial = 0; trial < 20; ++trial) {
      const Algebra b = change_of_basis(a, random_well_conditioned(rng));
      CHECK(is_commutative(a) == is_commutative(b));
      CHECK(is_associative(a) == is_associative(b));
      CHECK(rank_2x4(a) == rank_2x4(b));
    }
  }
}

TEST_CASE("2x4 form") {
  const double t = 0.9, c = std::cos(t), s = std::sin(t);
  CHECK((to_2x4(flow_algebra(t)) - m2x4({c, c, -s, s}, {s, -s, c, c})).cwiseAbs().maxCoeff() == 0.0);
  CHECK(to_2x4(flow_algebra(0.0)) == m2x4({1, 1, 0, 0}, {0, 0, 1, 1}));
  CHECK((to_2x4(flow_algebra(pi / 2)) - m2x4({0, 0, -1, 1}, {1, -1, 0, 0})).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(17);
  const Algebra a(random_tensor(rng, 2));
  CHECK(from_2x4(to_2x4(a)) == a);
  CHECK_THROWS_AS(to_2x4(Algebra(CubicTensor(3))), std::invalid_argument);
}

TEST_CASE("rank of the 2x4 form") {
  CHECK(rank_2x4(flow_algebra(0.0)) == 2);
  CHECK(rank_2x4(Algebra(CubicTensor(2))) == 0);
  CHECK(rank_2x4(from_2x4(m2x4({0, 0, 0, 0}, {1, 0, 0, 0}))) == 1);
}
