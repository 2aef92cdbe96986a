#pragma once

// q-oscillator specialisation: truncated Fock covectors v^(k) per site, the
// left actions of a, a*, q^{2D}, the eigencovectors omega and Omega, and the
// left action of Weyl operators through a = (1 - V^-1) U^-1, a* = U, q^{2D} = V^-1.

#include "toda2/ring.hpp"
#include "toda2/weyl.hpp"

#include <map>
#include <vector>

namespace toda2 {

using Levels = std::vector<int>;

/// Covector sum_k c_k v^(k_1) (x) ... (x) v^(k_N), coefficients c_k / den.
/// Components above the truncation are kept as overflow data.
class FockVector {
public:
  FockVector(int sites, int trunc);
  static FockVector basis(int sites, int trunc, const Levels& k);

  int sites() const { return sites_; }
  int trunc() const { return K_; }
  const Scalar& den() const { return den_; }
  void set_den(Scalar d) { den_ = std::move(d); }
  const std::map<Levels, Scalar>& coeffs() const { return c_; }
  Scalar coeff(const Levels& k) const;

  void add(const Levels& k, const Scalar& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector v);

  bool is_zero() const { return c_.empty(); }
  /// Components with some level above the truncation.
  std::vector<Levels> overflow() const;
  /// Largest single-site level among nonzero components, -1 when zero.
  int max_level() const;
  /// Smallest over components of the largest single-site level, -1 when zero.
  int min_top_level() const;
  std::size_t term_count() const;
  std::string first_term() const;

private:
  void same_shape(const FockVector& o) const;
  int sites_, K_;
  Scalar den_{1L};
  std::map<Levels, Scalar> c_;
};

enum class FockOp { a, astar, qD };

/// Left action at a 1-based site.
FockVector fock_act(FockOp op, int site, const FockVector& v);

/// Left action of a Weyl operator; all exponents must be integral.
FockVector weyl_act(const FockVector& v, const WeylOp& op);

enum class StateKind { vk, omega, Omega };
/// vk: basis covector at level k on one site; omega: one site truncated at K;
/// Omega: N-fold tensor power of omega. Coefficients share the common
/// denominator prod_{j<=K} (1 - q^{-2j}).
FockVector build_state(StateKind kind, int K, int N = 1, int k = 0);

/// Weyl realisation on site n.
WeylOp qosc_a(Lattice lat, int n);
WeylOp qosc_astar(Lattice lat, int n);
WeylOp qosc_q2D(Lattice lat, int n);
/// H_1 = sum_n a_n a*_{n+1} + q^{2 D_n} on the periodic lattice.
WeylOp qosc_H1(Lattice lat);

}  // namespace toda2
