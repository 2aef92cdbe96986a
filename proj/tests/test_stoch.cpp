#include "doctest.h"
#include "toda2/checks.hpp"
#include "toda2/quantum.hpp"
#include "toda2/stoch.hpp"

using namespace toda2;

namespace {

Scalar s(int k) { return Scalar::s_pow(k); }

FockVector v(int k, int K = 6) { return build_state(StateKind::vk, K, 1, k); }

}  // namespace

TEST_CASE("left actions on basis covectors") {
  CHECK(fock_act(FockOp::a, 1, v(0)).is_zero());
  auto q2 = fock_act(FockOp::qD, 1, v(2));
  CHECK(q2.coeffs().size() == 1);
  CHECK(q2.coeff({2}) == s(-8));
  auto a1 = fock_act(FockOp::a, 1, v(1));
  CHECK(a1.coeff({0}) == Scalar(1L) - s(-4));
  CHECK(a1.coeffs().size() == 1);
  CHECK(fock_act(FockOp::astar, 1, v(3)).coeff({4}) == Scalar(1L));
}

TEST_CASE("raising past the truncation is recorded as overflow") {
  auto top = fock_act(FockOp::astar, 1, v(6));
  REQUIRE(top.overflow().size() == 1);
  CHECK(top.overflow()[0] == Levels{7});
  CHECK(top.max_level() == 7);
  CHECK(v(3).overflow().empty());
  CHECK_THROWS(fock_act(FockOp::a, 2, v(1)));
  CHECK_THROWS(FockVector::basis(2, 6, {1}));
}

TEST_CASE("omega coefficients") {
  auto w = build_state(StateKind::omega, 6);
  // c_1 = q^-2 / (1 - q^-2)
  CHECK(w.coeff({0}) == w.den());
  CHECK(w.coeff({1}) * (Scalar(1L) - s(-4)) == s(-4) * w.coeff({0}));
  auto w0 = build_state(StateKind::omega, 0);
  CHECK(w0.coeffs().size() == 1);
  CHECK(w0.coeff({0}) == Scalar(1L));
  CHECK(w0.den() == Scalar(1L));
  CHECK_THROWS(build_state(StateKind::vk, 6, 1, -1));
}

TEST_CASE("omega a - q^-2 omega lives at the top level only") {
  for (int K : {1, 3, 6}) {
    CAPTURE(K);
    auto w = build_state(StateKind::omega, K);
    auto d = fock_act(FockOp::a, 1, w) - s(-4) * w;
    REQUIRE(!d.is_zero());
    CHECK(d.coeffs().size() == 1);
    CHECK(d.coeffs().begin()->first == Levels{K});
  }
}

TEST_CASE("Omega is the tensor power of omega") {
  auto w = build_state(StateKind::omega, 4);
  auto W = build_state(StateKind::Omega, 4, 2);
  CHECK(W.den() == w.den() * w.den());
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(W.coeff({i, j}) == w.coeff({i}) * w.coeff({j}));
  CHECK(W.coeffs().size() == 25);
}

TEST_CASE("actions are linear") {
  const Scalar c = Scalar::var("d1") + s(3);
  auto x = v(2) + c * v(4);
  for (FockOp op : {FockOp::a, FockOp::astar, FockOp::qD}) {
    auto lhs = fock_act(op, 1, x);
    auto rhs = fock_act(op, 1, v(2)) + c * fock_act(op, 1, v(4));
    CHECK((lhs - rhs).is_zero());
  }
  const Lattice one{1, true};
  WeylOp h = qosc_a(one, 1) + qosc_q2D(one, 1) * qosc_astar(one, 1);
  CHECK((weyl_act(x, h) - weyl_act(v(2), h) - c * weyl_act(v(4), h)).is_zero());
}

TEST_CASE("Weyl realisation agrees with the Fock action") {
  const Lattice one{1, true};
  for (int k = 0; k < 6; ++k) {
    CAPTURE(k);
    CHECK((weyl_act(v(k), qosc_a(one, 1)) - fock_act(FockOp::a, 1, v(k))).is_zero());
    CHECK((weyl_act(v(k), qosc_astar(one, 1)) - fock_act(FockOp::astar, 1, v(k))).is_zero());
    CHECK((weyl_act(v(k), qosc_q2D(one, 1)) - fock_act(FockOp::qD, 1, v(k))).is_zero());
  }
  CHECK_THROWS_AS(weyl_act(v(1), WeylOp::U(one, 1, 1)), std::domain_error);
  CHECK_THROWS(weyl_act(v(1), WeylOp::U(Lattice{2, true}, 1)));
}

TEST_CASE("stochastic checks") {
  CheckParams p;
  for (int sites : {2, 3}) {
    p.sites = sites;
    for (const char* id :
         {"qosc_algebra", "Lqosc_match", "column_eigen", "omega_identity", "Omega_H1", "zero_column_sum"}) {
      CAPTURE(id);
      CAPTURE(sites);
      CHECK(check_stoch(id, p).status == Status::pass);
    }
  }
  p.sites = 2;
  p.trunc = 2;
  CHECK_THROWS_AS(check_stoch("column_eigen", p), std::invalid_argument);
  p.trunc = 6;
  CHECK_THROWS(check_stoch("nope", p));
}

TEST_CASE("zeroed oscillator Lax entry is detected") {
  CheckParams p;
  p.mutation = "zero_Lqosc_21";
  for (const char* id : {"column_eigen", "Lqosc_match"}) {
    auto r = check_stoch(id, p);
    CHECK(r.status == Status::fail);
    CHECK(r.residual_terms > 0);
    CHECK(!r.witness.empty());
  }
}
