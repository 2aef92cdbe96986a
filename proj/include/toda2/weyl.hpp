#pragma once

// Multi-site q-Weyl algebra: per site an invertible pair U_n, V_n with
// U_n V_n = q^2 V_n U_n, half-integer powers allowed. Elements are kept in the
// normal form  sum_k c_k prod_n V_n^{b_n} U_n^{a_n}  (V before U, sites ascending),
// exponents stored doubled; every reorder factor is then an integer power of s.

#include "toda2/ring.hpp"

#include <boost/container/small_vector.hpp>

#include <atomic>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace toda2 {

class TermCapExceeded : public std::runtime_error {
public:
  explicit TermCapExceeded(std::size_t n)
      : std::runtime_error("term cap exceeded (" + std::to_string(n) + " terms)") {}
};

class LatticeMismatch : public std::logic_error {
public:
  LatticeMismatch() : std::logic_error("operators live on different lattices") {}
};

struct Lattice {
  int sites = 1;
  bool periodic = true;

  /// 1-based site index in range; periodic lattices reduce mod sites.
  int normalize(int site) const;
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// V^{v2/2} U^{u2/2} at one site.
struct SiteExp {
  int site;
  int v2;
  int u2;
  friend bool operator==(const SiteExp&, const SiteExp&) = default;
  friend auto operator<=>(const SiteExp&, const SiteExp&) = default;
};

using WeylMonomial = boost::container::small_vector<SiteExp, 4>;

enum class Gen { U, V };

struct WeylLetter {
  int site;
  Gen gen;
  Rational power;  // must lie in (1/2)Z
};

/// Global cap on the number of expanded terms of any product.
void set_term_cap(std::size_t cap);
std::size_t term_cap();

class WeylOp {
public:
  using Term = std::pair<WeylMonomial, Scalar>;

  explicit WeylOp(Lattice lat = {}, Scalar c = Scalar());

  /// U_site^{u2/2} or V_site^{v2/2} with unit coefficient.
  static WeylOp U(Lattice lat, int site, int u2 = 2);
  static WeylOp V(Lattice lat, int site, int v2 = 2);
  static WeylOp monomial(Lattice lat, const std::vector<SiteExp>& exps, Scalar c = Scalar(1L));

  const Lattice& lattice() const { return lat_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of (Weyl monomial, scalar monomial) pairs.
  std::size_t flat_size() const;
  bool is_scalar() const;
  /// Sites carrying a nonzero exponent in some term.
  std::vector<int> support() const;

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(const Scalar& c, const WeylOp& a);
  friend WeylOp operator*(const WeylOp& a, const Scalar& c) { return c * a; }
  friend bool operator==(const WeylOp& a, const WeylOp& b);

  WeylOp substitute(const std::map<std::string, Scalar>& bindings) const;
  /// Splits by powers of a scalar variable, e.g. the spectral parameter.
  std::map<int, WeylOp> coefficients_in(std::string_view var) const;

  /// Inverse of a single-term operator with monomial coefficient.
  WeylOp monomial_inverse() const;

  std::string to_string() const;

private:
  void add_term(WeylMonomial m, Scalar c);
  Lattice lat_;
  std::vector<Term> terms_;  // sorted by monomial, coefficients nonzero
};

/// Product of the letters in order, reduced to normal form.
WeylOp normal_order(const std::vector<WeylLetter>& word, const Scalar& coeff, Lattice lat);

/// Monomial product with the reorder exponent of s it produces.
WeylMonomial multiply_monomials(const WeylMonomial& a, const WeylMonomial& b, int& s_exp);

WeylOp commutator(const WeylOp& a, const WeylOp& b);

/// Conjugation by the global shift operator: U_n -> d2^{-1} U_n, V_n -> d2 V_n.
WeylOp conjugate_V(const WeylOp& a);
/// Same automorphism restricted to one site.
WeylOp conjugate_V_site(const WeylOp& a, int site);

std::string weyl_monomial_to_string(const WeylMonomial& m);

inline bool is_zero(const WeylOp& a) { return a.is_zero(); }

}  // namespace toda2
