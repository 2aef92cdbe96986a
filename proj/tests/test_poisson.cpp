#include "doctest.h"
#include "toda2/poisson.hpp"

#include <random>

using namespace toda2;

namespace {

Scalar random_poly(std::mt19937_64& rng, const Chart& c, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), e(-1, 2);
  std::uniform_int_distribution<std::size_t> pick(0, c.generators().size() - 1);
  Scalar r;
  for (int k = 0; k < terms; ++k) {
    Scalar t(static_cast<long>(coef(rng)));
    for (int f = 0; f < 2; ++f) t *= Scalar(Monomial::unit(c.generators()[pick(rng)], e(rng)), 1);
    r += t;
  }
  return r;
}

bool jacobi_on_generators(const Chart& c) {
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        Scalar a(Monomial::unit(g[i], 1), 1), b(Monomial::unit(g[j], 1), 1),
            d(Monomial::unit(g[k], 1), 1);
        Scalar J = poisson_bracket(a, poisson_bracket(b, d, c), c) +
                   poisson_bracket(b, poisson_bracket(d, a, c), c) +
                   poisson_bracket(d, poisson_bracket(a, b, c), c);
        if (!J.is_zero()) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("qp chart table entries") {
  Chart c = Chart::make(ChartKind::qp, 3, true);
  Scalar Q1 = c.gen("Q", 1), Q2 = c.gen("Q", 2), P1 = c.gen("P", 1);
  CHECK(poisson_bracket(Q1, Q2, c) == Q1 * Q2);
  CHECK(poisson_bracket(Q1, P1, c) == Q1 * P1 * -2L);
  CHECK(poisson_bracket(Q1 * Q1, P1, c) == Q1 * 2L * poisson_bracket(Q1, P1, c));
  CHECK(poisson_bracket(Q1 * Q1, P1, c) == Q1 * Q1 * P1 * -4L);
  CHECK(c.gen("Q", 4) == Q1);
}

TEST_CASE("qp chart at two sites sums coinciding deltas") {
  Chart c = Chart::make(ChartKind::qp, 2, true);
  Scalar Q1 = c.gen("Q", 1), Q2 = c.gen("Q", 2);
  CHECK(poisson_bracket(c.gen("P", 1), c.gen("P", 2), c) == Q1 * Q1 * 4L - Q2 * Q2 * 4L);
  // both deltas fire for {Q1,Q2}
  CHECK(poisson_bracket(Q1, Q2, c).is_zero());
}

TEST_CASE("darboux chart") {
  Chart c = Chart::make(ChartKind::darboux, 4, false);
  Scalar g1 = c.gen("g", 1), h1 = c.gen("h", 1), h2 = c.gen("h", 2);
  CHECK(poisson_bracket(g1, h2, c).is_zero());
  CHECK(poisson_bracket(g1, h1, c) == g1 * h1);
  CHECK(poisson_bracket(g1 * g1, h1, c) == g1 * g1 * h1 * 2L);
}

TEST_CASE("exlat table is frozen") {
  auto rp = exlat_r(true), rm = exlat_r(false);
  CHECK(rp(1, 2) == Scalar(4L));
  CHECK(rm(2, 1) == Scalar(-4L));
  CHECK(rp(0, 0) == Scalar(1L));
  CHECK(rm(0, 0) == Scalar(-1L));
  Chart c = Chart::make(ChartKind::exlat, 3, false);
  Scalar a1 = c.gen("xi1", 1), b1 = c.gen("xi2", 1), a2 = c.gen("xi1", 2), b2 = c.gen("xi2", 2);
  // same site uses theta(0) = 1/2: (r+ + r-)/2
  CHECK(poisson_bracket(a1, b1, c) == a1 * b1 * -2L);
  CHECK(poisson_bracket(a2, a1, c) == a2 * a1);
  CHECK(poisson_bracket(b2, a1, c) == a2 * b1 * 4L - b2 * a1);
  CHECK(poisson_bracket(a2, b1, c) == a2 * b1 * -1L);
}

TEST_CASE("generator tables are antisymmetric") {
  for (auto c : {Chart::make(ChartKind::qp, 3, true), Chart::make(ChartKind::qp, 2, true),
                 Chart::make(ChartKind::qp, 4, false), Chart::make(ChartKind::exlat, 5, false),
                 Chart::make(ChartKind::darboux, 4, false)}) {
    const auto n = c.generators().size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK((c.table(i, j) + c.table(j, i)).is_zero());
  }
}

TEST_CASE("Jacobi identity on generator triples") {
  CHECK(jacobi_on_generators(Chart::make(ChartKind::qp, 3, true)));
  CHECK(jacobi_on_generators(Chart::make(ChartKind::qp, 2, true)));
  CHECK(jacobi_on_generators(Chart::make(ChartKind::exlat, 4, false)));
  CHECK(jacobi_on_generators(Chart::make(ChartKind::darboux, 3, false)));
}

TEST_CASE("antisymmetry and Leibniz on random elements") {
  std::mt19937_64 rng(8);
  Chart c = Chart::make(ChartKind::qp, 3, true);
  for (int it = 0; it < 20; ++it) {
    Scalar f = random_poly(rng, c, 3), g = random_poly(rng, c, 3), h = random_poly(rng, c, 2);
    CHECK(poisson_bracket(f, f, c).is_zero());
    CHECK(poisson_bracket(f, g, c) == -poisson_bracket(g, f, c));
    CHECK(poisson_bracket(f * g, h, c) ==
          f * poisson_bracket(g, h, c) + poisson_bracket(f, h, c) * g);
  }
}

TEST_CASE("quotient rule") {
  std::mt19937_64 rng(12);
  Chart c = Chart::make(ChartKind::exlat, 3, false);
  for (int it = 0; it < 10; ++it) {
    Scalar f = random_poly(rng, c, 2) + Scalar(3L), g = random_poly(rng, c, 3);
    PoissonElem inv = PoissonElem(Scalar(1L), f);
    PoissonElem lhs = poisson_bracket(inv, PoissonElem(g), c);
    PoissonElem rhs = -PoissonElem(poisson_bracket(f, g, c), f * f);
    CHECK(lhs == rhs);
    // {f * (1/f), g} = 0
    CHECK(poisson_bracket(PoissonElem(f) * inv, PoissonElem(g), c).is_zero());
  }
}

TEST_CASE("classical building blocks") {
  Chart d = Chart::make(ChartKind::darboux, 4, false);
  CHECK(build_classical(ClassicalSymbol::repP, 2, d).num().size() == 2);
  CHECK(build_classical(ClassicalSymbol::repQ2, 2, d).num().size() == 1);
  CHECK(build_classical(ClassicalSymbol::xi2_darboux, 2, d).num().size() == 2);
  CHECK(build_classical(ClassicalSymbol::xi1_darboux, 3, d).num().is_monomial());
  Chart e = Chart::make(ChartKind::exlat, 8, false);
  CHECK(build_classical(ClassicalSymbol::W1, 3, e).num().size() == 2);
  CHECK_THROWS_AS(build_classical(ClassicalSymbol::W2, 7, e), std::out_of_range);
  CHECK_THROWS_AS(build_classical(ClassicalSymbol::S, 1, e), std::out_of_range);
  CHECK_THROWS(build_classical(ClassicalSymbol::repP, 1, e));
  // Q = 1/W1
  CHECK(build_classical(ClassicalSymbol::Q, 3, e) * build_classical(ClassicalSymbol::W1, 3, e) ==
        PoissonElem(1L));
}

TEST_CASE("chart errors") {
  CHECK_THROWS(Chart::make(ChartKind::exlat, 4, true));
  CHECK_THROWS(Chart::make(ChartKind::darboux, 1, false));
  Chart c = Chart::make(ChartKind::qp, 3, true);
  Chart big = Chart::make(ChartKind::qp, 5, true);
  CHECK_THROWS_AS(poisson_bracket(big.gen("Q", 5), c.gen("P", 1), c), ForeignGenerator);
  CHECK_THROWS_AS(poisson_bracket(Scalar::var("g1"), c.gen("P", 1), c), ForeignGenerator);
  // non-generator parameters are constants
  CHECK(poisson_bracket(Scalar::var("mu") * c.gen("Q", 1), c.gen("Q", 2), c) ==
        Scalar::var("mu") * c.gen("Q", 1) * c.gen("Q", 2));
  Chart open = Chart::make(ChartKind::exlat, 3, false);
  CHECK_THROWS_AS(open.gen("xi1", 4), std::out_of_range);
}
