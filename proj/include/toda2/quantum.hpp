#pragma once

// Quantum Toda2 objects: structure matrices, scalar auxiliary matrices, Lax
// operators on the periodic q-Weyl lattice, transfer matrices, the quantum
// xi realisation and the Hamiltonian family.

#include "toda2/matrix.hpp"
#include "toda2/ring.hpp"
#include "toda2/weyl.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toda2 {

enum class Preset { generic, qToda, Toda2, qOsc };

struct ModelParams {
  int N = 3;
  Preset preset = Preset::generic;
  Scalar d1, d2, d3;
  /// Deliberate corruption for sensitivity tests; empty when faithful.
  std::string mutation;

  static ModelParams make(int N, Preset preset = Preset::generic);
  Lattice lattice() const { return {N, true}; }
};

class GammaOneBranch : public std::domain_error {
public:
  GammaOneBranch() : std::domain_error("M0 with gamma = 1 is a separate branch and is not built") {}
};

/// Heaviside step deformed at zero: 1/(s + 1/s) there.
ScalarFraction theta_q(int n);

enum class AuxKind { A, B, C, D, Rplus, Rminus, Rtwisted, Btilde, Ctilde };
/// 4x4 structure matrices in the basis (11,12,21,22). A, D and Rtwisted carry
/// the denominator (l2 q^2 - l1).
Matrix<Scalar> build_aux(AuxKind kind, const Scalar& l1, const Scalar& l2);

struct AuxConstants {
  Scalar alpha{1L}, beta, gamma, delta;
};

enum class ScalarAuxKind { M0, Mtilde0, G0, Gtilde0 };
/// 2x2 numerical matrices. M0 and Mtilde0 read `c`; G0 and Gtilde0 read the
/// model constants d1, d2, d3.
Matrix<Scalar> build_scalar_aux(ScalarAuxKind kind, const Scalar& lam, const ModelParams& p,
                                const AuxConstants& c = {});

/// P_n = V_n^{-1} + U_n U_{n+1}^{-1}.
WeylOp P_hat(int n, Lattice lat);
/// Q_n^2 = s V_{n+1}^{-1} U_n U_{n+1}^{-1}.
WeylOp Q2_hat(int n, Lattice lat);
/// The square root V_{n+1}^{-1/2} U_n^{1/2} U_{n+1}^{-1/2}.
WeylOp Q_hat(int n, Lattice lat);

enum class LaxKind {
  l,
  lhat,
  lhat_display,
  gauge_l_display,
  G0n,
  G0n_display,
  scriptL,
  scriptL_display,
  scriptLtilde,
  scriptLtilde_literal,
  Lloc,
  Lqosc,
  gaugeN,
  gaugeNinv,
};
/// 2x2 operator-valued Lax-type matrices at site n of the periodic lattice.
Matrix<WeylOp> build_lax(LaxKind kind, int n, const Scalar& lam, const ModelParams& p);

/// T = lhat_N ... lhat_2 l_1.
Matrix<WeylOp> monodromy(const Scalar& lam, const ModelParams& p);

enum class TraceKind { tau, tloc };
WeylOp transfer_trace(TraceKind kind, const Scalar& lam, const ModelParams& p);

/// H_j = (-1)^j [lam^{N-j}] t_loc(lam), j = 0..N.
std::vector<WeylOp> hamiltonians(const ModelParams& p);
/// tr_q[L] = sum P_n and tr_q[L^2] = sum P_n^2 + (s^3 + s^-1) Q_n^2.
WeylOp trq(int power, Lattice lat);

/// Quantum xi components on an open lattice.
WeylOp xi_quantum(int component, int n, Lattice lat);
/// W^(p)_n = q xi1_n xi2_{n+p} - xi2_n xi1_{n+p}.
WeylOp W_quantum(int p, int n, Lattice lat);

/// Standard variable names.
Scalar lam_var();
Scalar l_var(int i);

}  // namespace toda2
