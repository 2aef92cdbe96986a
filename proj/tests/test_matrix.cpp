#include "doctest.h"
#include "toda2/matrix.hpp"

#include <random>

using namespace toda2;

namespace {

Scalar rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-1, 2);
  return Scalar(static_cast<long>(c(rng))) + Scalar::var("l1", e(rng)) * static_cast<long>(c(rng)) +
         Scalar::s_pow(e(rng)) * static_cast<long>(c(rng));
}

Matrix<Scalar> rnd_mat(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Matrix<Scalar> a(n, m, Scalar());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = rnd(rng);
  return a;
}

Matrix<Scalar> eye(std::size_t n) { return Matrix<Scalar>::identity(n, Scalar(), Scalar(1L)); }

bool same(const Matrix<Scalar>& a, const Matrix<Scalar>& b) { return residual(a, b).all_zero(); }

template <class M>
concept HasDet = requires(const M& m) { det_comm(m); };

}  // namespace

static_assert(HasDet<Matrix<Scalar>>);
static_assert(!HasDet<Matrix<WeylOp>>, "operator-valued determinant must not compile");

TEST_CASE("product is associative and distributive") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 10; ++it) {
    auto a = rnd_mat(rng, 2, 3), b = rnd_mat(rng, 3, 2), c = rnd_mat(rng, 2, 2);
    CHECK(same((a * b) * c, a * (b * c)));
    auto d = rnd_mat(rng, 3, 2);
    CHECK(same(a * (b + d), a * b + a * d));
  }
  CHECK_THROWS(rnd_mat(rng, 2, 3) * rnd_mat(rng, 2, 3));
}

TEST_CASE("denominators combine as fractions") {
  Scalar x = Scalar::var("l1"), y = Scalar::var("l2");
  Matrix<Scalar> a = eye(2), b = eye(2);
  a.set_den(x - y);
  b.set_den(x + y);
  Matrix<Scalar> sum = a + b;
  Matrix<Scalar> closed = (x * 2L) * eye(2);
  closed.set_den(x * x - y * y);
  CHECK(same(sum, closed));
  CHECK_FALSE(same(a, b));
  CHECK_THROWS(a.set_den(Scalar()));
}

TEST_CASE("tensor embeddings and flip") {
  std::mt19937_64 rng(2);
  auto A = rnd_mat(rng, 2, 2);
  auto e1 = tensor_embed(A, 1, Scalar(1L));
  auto e2 = tensor_embed(A, 2, Scalar(1L));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        CHECK(e1(2 * i + k, 2 * j + k) == A(i, j));
        CHECK(e2(2 * k + i, 2 * k + j) == A(i, j));
      }
  CHECK(e1(0, 1).is_zero());
  auto P = flip(2, Scalar(), Scalar(1L));
  CHECK(same(P * e1 * P, e2));
  CHECK(same(P * P, eye(4)));
  CHECK_THROWS(tensor_embed(A, 3, Scalar(1L)));
}

TEST_CASE("mixed product property of kron") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 5; ++it) {
    auto A = rnd_mat(rng, 2, 2), B = rnd_mat(rng, 2, 2), C = rnd_mat(rng, 2, 2), D = rnd_mat(rng, 2, 2);
    CHECK(same(kron(A, B) * kron(C, D), kron(A * C, B * D)));
  }
}

TEST_CASE("partial transposes") {
  std::mt19937_64 rng(4);
  auto M = rnd_mat(rng, 4, 4);
  auto t1 = partial_transpose(M, 2, 1);
  CHECK(same(partial_transpose(t1, 2, 1), M));
  CHECK(same(partial_transpose(t1, 2, 2), M.transpose()));
  // entry (ij),(kl) moves to (kj),(il)
  CHECK(t1(1 * 2 + 0, 0 * 2 + 1) == M(0 * 2 + 0, 1 * 2 + 1));
  auto A = rnd_mat(rng, 2, 2), B = rnd_mat(rng, 2, 2);
  CHECK(same(partial_transpose(kron(A, B), 2, 1), kron(A.transpose(), B)));
}

TEST_CASE("trace") {
  std::mt19937_64 rng(5);
  auto A = rnd_mat(rng, 3, 3), B = rnd_mat(rng, 3, 3);
  CHECK(trace(A * B) == trace(B * A));
  Matrix<Scalar> C = A;
  C.set_den(Scalar::s_pow(2));
  CHECK(trace(C) == Scalar::s_pow(-2) * trace(A));
  C.set_den(Scalar::var("l1") + Scalar(1L));
  CHECK_THROWS_AS(trace(C), std::domain_error);
}

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 8; ++it) {
    auto A = rnd_mat(rng, 3, 3), B = rnd_mat(rng, 3, 3);
    CHECK(det_comm(A * B).first == det_comm(A).first * det_comm(B).first);
    if (det_comm(A).first.is_zero()) continue;
    auto Ai = inverse(A);
    CHECK(same(A * Ai, eye(3)));
    CHECK(same(Ai * A, eye(3)));
  }
  Matrix<Scalar> diag = eye(2);
  diag(0, 0) = Scalar::s_pow(2);
  diag(1, 1) = Scalar::s_pow(-2);
  auto inv = inverse(diag);
  CHECK(inv.den() == Scalar(1L));
  CHECK(inv(0, 0) == Scalar::s_pow(-2));
  Matrix<Scalar> sing(2, 2, Scalar(1L));
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("operator-valued matrices keep entry order") {
  Lattice lat{2, true};
  WeylOp U = WeylOp::U(lat, 1), V = WeylOp::V(lat, 1), z(lat), one(lat, Scalar(1L));
  auto A = from_rows<WeylOp>({{U, z}, {z, one}});
  auto B = from_rows<WeylOp>({{V, z}, {z, one}});
  CHECK((A * B)(0, 0) == U * V);
  CHECK((B * A)(0, 0) == V * U);
  CHECK_FALSE((A * B)(0, 0) == (B * A)(0, 0));
  auto l = lift(eye(2), lat);
  CHECK(residual(l * A, A).all_zero());
  CHECK(trace(A) == U + one);
}
