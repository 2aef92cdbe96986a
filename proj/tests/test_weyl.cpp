#include "doctest.h"
#include "toda2/weyl.hpp"

#include <random>

using namespace toda2;

namespace {

const Lattice L3{3, true};

Scalar s(int e) { return Scalar::s_pow(e); }

// Bubble-sort reducer: swaps adjacent letters one at a time, collecting the
// s-exponent of each swap. Independent of the normal-form multiplication.
struct Letter {
  int site;
  bool is_u;
  int e2;
};

WeylOp oracle(std::vector<Letter> w, Lattice lat) {
  int sexp = 0;
  auto key = [](const Letter& l) { return 2 * l.site + (l.is_u ? 1 : 0); };
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (key(w[j]) > key(w[j + 1])) {
        if (w[j].site == w[j + 1].site && w[j].is_u && !w[j + 1].is_u) sexp += w[j].e2 * w[j + 1].e2;
        std::swap(w[j], w[j + 1]);
      }
  std::vector<SiteExp> exps;
  for (const auto& l : w) exps.push_back({l.site, l.is_u ? 0 : l.e2, l.is_u ? l.e2 : 0});
  return WeylOp::monomial(lat, exps, s(sexp));
}

std::vector<Letter> random_word(std::mt19937_64& rng, int sites, int len) {
  std::uniform_int_distribution<int> site(1, sites), e(-3, 3), coin(0, 1);
  std::vector<Letter> w;
  for (int i = 0; i < len; ++i) w.push_back({site(rng), coin(rng) == 1, e(rng)});
  return w;
}

WeylOp word_op(const std::vector<Letter>& w, Lattice lat) {
  WeylOp r(lat, Scalar(1L));
  for (const auto& l : w) r = r * (l.is_u ? WeylOp::U(lat, l.site, l.e2) : WeylOp::V(lat, l.site, l.e2));
  return r;
}

WeylOp random_op(std::mt19937_64& rng, Lattice lat, int terms, bool integral = false) {
  std::uniform_int_distribution<int> c(-3, 3), k(0, 2);
  WeylOp r(lat);
  for (int i = 0; i < terms; ++i) {
    auto w = random_word(rng, lat.sites, 3);
    if (integral)
      for (auto& l : w) l.e2 = 2 * (l.e2 / 2);
    r += (Scalar(static_cast<long>(c(rng))) + Scalar::var("l1", k(rng))) * word_op(w, lat);
  }
  return r;
}

}  // namespace

TEST_CASE("defining relation UV = q^2 VU") {
  WeylOp U = WeylOp::U(L3, 1), V = WeylOp::V(L3, 1);
  CHECK(U * V == s(4) * (V * U));
  CHECK(WeylOp::U(L3, 1, 1) * WeylOp::V(L3, 1, 1) == s(1) * (WeylOp::V(L3, 1, 1) * WeylOp::U(L3, 1, 1)));
  CHECK(U * WeylOp::U(L3, 1, -2) == WeylOp(L3, Scalar(1L)));
}

TEST_CASE("distinct sites commute") {
  WeylOp U1 = WeylOp::U(L3, 1), V2 = WeylOp::V(L3, 2), U3 = WeylOp::U(L3, 3, 1);
  CHECK(commutator(U1, V2).is_zero());
  CHECK(commutator(V2, U3).is_zero());
  CHECK_FALSE(commutator(U1, WeylOp::V(L3, 1)).is_zero());
}

TEST_CASE("periodic and open site handling") {
  CHECK(WeylOp::U(L3, 4) == WeylOp::U(L3, 1));
  CHECK(WeylOp::V(L3, 0) == WeylOp::V(L3, 3));
  Lattice open{3, false};
  CHECK_THROWS_AS(WeylOp::U(open, 4), std::out_of_range);
  CHECK_THROWS_AS(WeylOp::U(open, 0), std::out_of_range);
  CHECK_THROWS_AS(WeylOp::U(L3, 1) + WeylOp::U(open, 1), LatticeMismatch);
}

TEST_CASE("normal ordering matches bubble-sort oracle") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 200; ++it) {
    auto w = random_word(rng, 3, 6);
    std::vector<WeylLetter> letters;
    for (const auto& l : w) letters.push_back({l.site, l.is_u ? Gen::U : Gen::V, Rational(l.e2, 2)});
    CHECK(normal_order(letters, Scalar(1L), L3) == oracle(w, L3));
    CHECK(word_op(w, L3) == oracle(w, L3));
  }
}

TEST_CASE("non-half-integer exponents are rejected") {
  CHECK_THROWS(normal_order({{1, Gen::U, Rational(1, 3)}}, Scalar(1L), L3));
}

TEST_CASE("algebra axioms on random operators") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 25; ++it) {
    WeylOp a = random_op(rng, L3, 3), b = random_op(rng, L3, 3), c = random_op(rng, L3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    WeylOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                 commutator(c, commutator(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("reorder factors are integral powers of s") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 50; ++it) {
    WeylOp p = word_op(random_word(rng, 3, 5), L3);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0].second.is_monomial());
    const auto& m = p.terms()[0].second.terms()[0].first;
    for (std::size_t i = 1; i < m.span(); ++i) CHECK(m[i] == 0);
  }
}

TEST_CASE("monomial inverse") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 30; ++it) {
    WeylOp m = Scalar::var("d2", 2) * s(3) * word_op(random_word(rng, 3, 4), L3);
    WeylOp one(L3, Scalar(1L));
    CHECK(m * m.monomial_inverse() == one);
    CHECK(m.monomial_inverse() * m == one);
  }
  CHECK_THROWS(( WeylOp::U(L3, 1) + WeylOp::V(L3, 1)).monomial_inverse());
}

TEST_CASE("conjugation by the shift operator") {
  WeylOp U = WeylOp::U(L3, 2), V = WeylOp::V(L3, 2);
  Scalar d2 = Scalar::var("d2");
  CHECK(conjugate_V(U) == d2.pow(-1) * U);
  CHECK(conjugate_V(V) == d2 * V);
  CHECK_THROWS_AS(conjugate_V(WeylOp::U(L3, 1, 1)), std::domain_error);
  // per-site version only scales the chosen site
  WeylOp x = WeylOp::V(L3, 1) * WeylOp::U(L3, 2, -2);
  CHECK(conjugate_V_site(x, 1) == d2 * x);
  CHECK(conjugate_V_site(x, 2) == d2 * x);
  CHECK(conjugate_V_site(x, 3) == x);
  CHECK(conjugate_V(x) == d2 * d2 * x);

  std::mt19937_64 rng(6);
  for (int it = 0; it < 20; ++it) {
    WeylOp a = random_op(rng, L3, 3, true), b = random_op(rng, L3, 3, true);
    CHECK(conjugate_V(a * b) == conjugate_V(a) * conjugate_V(b));
    CHECK(conjugate_V(a + b) == conjugate_V(a) + conjugate_V(b));
  }
}

TEST_CASE("coefficient extraction and substitution") {
  Scalar l = Scalar::var("l1");
  WeylOp a = l * l * WeylOp::U(L3, 1) + l * WeylOp::V(L3, 2) + WeylOp(L3, Scalar(3L));
  auto c = a.coefficients_in("l1");
  CHECK(c.at(2) == WeylOp::U(L3, 1));
  CHECK(c.at(1) == WeylOp::V(L3, 2));
  CHECK(c.at(0) == WeylOp(L3, Scalar(3L)));
  WeylOp b = a.substitute({{"l1", Scalar(0L)}});
  CHECK(b == WeylOp(L3, Scalar(3L)));
  CHECK(b.is_scalar());
  CHECK(a.support() == std::vector<int>{1, 2});
}

TEST_CASE("term cap is a hard error") {
  std::size_t old = term_cap();
  set_term_cap(10);
  WeylOp a(L3);
  for (int k = 1; k <= 4; ++k) a += WeylOp::U(L3, 1, k) + WeylOp::V(L3, 2, k);
  CHECK_THROWS_AS(a * a, TermCapExceeded);
  set_term_cap(old);
  CHECK_NOTHROW(a * a);
}

TEST_CASE("printing") {
  WeylOp a = s(-1) * WeylOp::V(L3, 2, -1) * WeylOp::U(L3, 1, 1);
  CHECK(a.to_string() == "(1*s^-1) U1^{1/2} V2^{-1/2}");
  CHECK(WeylOp(L3).to_string() == "0");
}
