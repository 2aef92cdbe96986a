#pragma once

// Classical periodic Toda2 chain in the second Hamiltonian structure: the
// N x N Lax matrix with spectral corners, the 2x2 monodromy, and the
// structure matrices of the quadratic bracket {L1 (x) L2}.

#include "toda2/matrix.hpp"
#include "toda2/poisson.hpp"

#include <string>
#include <utility>

namespace toda2 {

struct ClassicalModel {
  ClassicalModel(int n, Chart c) : N(n), chart(std::move(c)) {}

  int N;
  Chart chart;
  /// Deliberate corruption for sensitivity tests; empty when faithful.
  std::string mutation;

  /// Jacobi matrix: diagonal -P_n, off-diagonals Q_n, corners mu^{-1} Q_N and mu Q_N.
  /// Entries are Laurent in mu, so no denominator is needed.
  Matrix<Scalar> L(const Scalar& mu) const;
  /// 2x2 Lax matrix l_n = [[lam - P_n, -1], [Q_n^2, 0]].
  Matrix<Scalar> l(int n, const Scalar& lam) const;
  /// T = l_N ... l_1.
  Matrix<Scalar> T(const Scalar& lam) const;
  Scalar prod_Q() const;
};

ClassicalModel build_model(int N);

enum class StructureKind { r12, a12, d12, d21 };
/// N^2 x N^2 structure matrices. r12, d12 and d21 carry the denominator
/// (mu1 - mu2) (mu2 - mu1 for d21); d12 and d21 contain L entries.
Matrix<Scalar> build_structure(StructureKind kind, const Scalar& mu1, const Scalar& mu2,
                               const ClassicalModel& m);

/// {L(mu1) (x), L(mu2)} with rows (a,c) and columns (b,d) holding {L_ab, L_cd}.
Matrix<Scalar> bracket_matrix(const ClassicalModel& m, const Scalar& mu1, const Scalar& mu2);

/// The five-term right-hand side with legs L1 = L(mu1) (x) id, L2 = id (x) L(mu2).
Matrix<Scalar> explicit_rhs(const ClassicalModel& m, const Scalar& mu1, const Scalar& mu2);
/// d12 L1 - L1 d12 - (d21 L2 - L2 d21).
Matrix<Scalar> dform_rhs(const ClassicalModel& m, const Scalar& mu1, const Scalar& mu2);

Scalar mu_var(int i = 0);

}  // namespace toda2
