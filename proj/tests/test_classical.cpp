#include "doctest.h"
#include "toda2/checks.hpp"
#include "toda2/classical.hpp"

#include <random>

using namespace toda2;

TEST_CASE("Jacobi Lax matrix layout") {
  ClassicalModel m = build_model(3);
  Scalar mu = mu_var();
  auto L = m.L(mu);
  auto Q = [&](int n) { return m.chart.gen("Q", n); };
  CHECK(L(0, 2) == mu.pow(-1) * Q(3));
  CHECK(L(2, 0) == mu * Q(3));
  for (int n = 0; n < 3; ++n) CHECK(L(n, n) == -m.chart.gen("P", n + 1));
  CHECK(L(0, 1) == Q(1));
  CHECK(L(2, 1) == Q(2));
  CHECK_THROWS_AS(build_model(1), std::invalid_argument);
}

TEST_CASE("two-site Lax matrix sums corners into off-diagonals") {
  ClassicalModel m = build_model(2);
  Scalar mu = mu_var(), lam = Scalar::var("lam");
  Scalar Q1 = m.chart.gen("Q", 1), Q2 = m.chart.gen("Q", 2), P1 = m.chart.gen("P", 1),
         P2 = m.chart.gen("P", 2);
  auto L = m.L(mu);
  CHECK(L(0, 1) == Q1 + mu.pow(-1) * Q2);
  CHECK(L(1, 0) == Q1 + mu * Q2);
  // 2x2 cofactor oracle
  auto M = L + lam * Matrix<Scalar>::identity(2, Scalar(), Scalar(1L));
  Scalar expect = (lam - P1) * (lam - P2) - (Q1 + mu.pow(-1) * Q2) * (Q1 + mu * Q2);
  CHECK(det_comm(M).first == expect);
  CHECK(expect == lam * lam - lam * (P1 + P2) + P1 * P2 - Q1 * Q1 - (mu + mu.pow(-1)) * Q1 * Q2 - Q2 * Q2);
}

TEST_CASE("structure matrices") {
  ClassicalModel m = build_model(3);
  Scalar mu1 = mu_var(1), mu2 = mu_var(2);
  auto r = build_structure(StructureKind::r12, mu1, mu2, m);
  CHECK(r.den() == mu1 - mu2);
  CHECK(r(0, 0) == mu1 + mu2);                  // E11 (x) E11
  CHECK(r(0 * 3 + 1, 1 * 3 + 0) == Scalar(2L) * mu2);  // E12 (x) E21
  CHECK(r(1 * 3 + 0, 0 * 3 + 1) == Scalar(2L) * mu1);  // E21 (x) E12
  auto a = build_structure(StructureKind::a12, mu1, mu2, m);
  CHECK(a(0 * 3 + 1, 0 * 3 + 1) == Scalar(Rational(1, 2)));   // E11 (x) E22
  CHECK(a(1 * 3 + 0, 1 * 3 + 0) == Scalar(Rational(-1, 2)));  // E22 (x) E11
  CHECK(a(0, 0).is_zero());
  // a12 is antisymmetric under the leg flip
  auto P = flip<Scalar>(3, Scalar(), Scalar(1L));
  CHECK((P * a * P + a).all_zero());
}

TEST_CASE("monodromy determinant") {
  for (int N = 2; N <= 3; ++N) {
    ClassicalModel m = build_model(N);
    auto T = m.T(Scalar::var("lam"));
    CHECK(det_comm(T).first == m.prod_Q() * m.prod_Q());
  }
}

TEST_CASE("bracket identity at random spectral points") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(1, 9);
  ClassicalModel m = build_model(3);
  for (int it = 0; it < 4; ++it) {
    Scalar a(Rational(num(rng), 2)), b(Rational(num(rng) + 10, 3));
    CHECK(residual(bracket_matrix(m, a, b), explicit_rhs(m, a, b)).all_zero());
  }
}

TEST_CASE("classical checks") {
  CheckParams p;
  for (const char* id : {"poissonL_explicit", "poissonL_dform", "involution", "curve_NxN", "curve_2x2",
                         "pN_equals_trT"}) {
    CAPTURE(id);
    CHECK(check_classical(id, p).status == Status::pass);
  }
  p.sites = 2;
  auto r = check_classical("poissonL_dform", p);
  CHECK(r.status == Status::degenerate);
  CHECK(check_classical("curve_NxN", p).status == Status::pass);
  p.sites = 1;
  CHECK_THROWS(check_classical("curve_NxN", p));
  p.sites = 3;
  p.mutation = "zero_L_corner";
  r = check_classical("poissonL_explicit", p);
  CHECK(r.status == Status::fail);
  CHECK(!r.witness.empty());
}
