#pragma once

// Sparse multivariate Laurent polynomials over Q.
//
// Every coefficient in the toolkit lives here: the half-power variable
// s = q^{1/2}, spectral parameters, model constants and (through the Poisson
// module) classical phase-space generators. Variables are interned in a
// Registry; a Scalar's exponent vectors index into that registry.

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace toda2 {

using Rational = mpq_class;

class RegistryMismatch : public std::logic_error {
public:
  RegistryMismatch() : std::logic_error("scalars belong to different variable registries") {}
};

class SubstitutionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Append-only table of variable names. Index 0 is always `s`.
class Registry {
public:
  Registry();
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  static Registry& global();

  std::size_t intern(std::string_view name);
  std::size_t index_of(std::string_view name) const;  // throws if unknown
  bool contains(std::string_view name) const;
  std::string name(std::size_t index) const;
  std::size_t size() const;

  static constexpr std::size_t s_index = 0;

private:
  mutable std::shared_mutex mutex_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Exponent vector with trailing zeros trimmed, so equal monomials compare equal
/// regardless of how many variables were registered when they were built.
class Monomial {
public:
  using Storage = boost::container::small_vector<int16_t, 12>;

  Monomial() = default;
  static Monomial unit(std::size_t var, int exp);

  int operator[](std::size_t var) const { return var < e_.size() ? e_[var] : 0; }
  std::size_t span() const { return e_.size(); }
  bool is_one() const { return e_.empty(); }
  bool has_negative() const;

  void set(std::size_t var, int exp);
  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Zero-padded lexicographic order; invariant under multiplication.
  friend bool operator<(const Monomial& a, const Monomial& b);

  const Storage& raw() const { return e_; }

private:
  void trim();
  Storage e_;
};

class Scalar {
public:
  using Term = std::pair<Monomial, Rational>;

  Scalar() : reg_(&Registry::global()) {}
  Scalar(long c);  // NOLINT: integers lift implicitly
  Scalar(const Rational& c, Registry& reg = Registry::global());
  Scalar(Monomial m, Rational c, Registry& reg = Registry::global());

  static Scalar var(std::string_view name, int exp = 1, Registry& reg = Registry::global());
  /// q^{e/2}, i.e. s^e.
  static Scalar s_pow(int e, Registry& reg = Registry::global());

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Registry& registry() const { return *reg_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar times_monomial(const Monomial& m, const Rational& c) const;
  /// Integer power; negative powers only for monomials.
  Scalar pow(int k) const;

  /// Image under the ring homomorphism fixing unbound variables.
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;
  Scalar substitute(const std::map<std::size_t, Scalar>& bindings) const;

  /// Splits by powers of one variable: result[e] is the coefficient of var^e.
  std::map<int, Scalar> coefficients_in(std::size_t var) const;

  /// Canonical text, independent of registration order.
  std::string to_string() const;
  static Scalar parse(std::string_view text, Registry& reg = Registry::global());

private:
  void check_same(const Scalar& o) const {
    if (reg_ != o.reg_) throw RegistryMismatch();
  }
  void normalize_sorted();

  Registry* reg_;
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

inline Scalar operator*(const Scalar& a, long c) { return a * Scalar(c); }

std::string monomial_to_string(const Monomial& m, const Registry& reg);

/// num/den kept unreduced; equality by cross multiplication. A monomial
/// denominator is folded into the numerator.
class ScalarFraction {
public:
  ScalarFraction() : num_(), den_(1L) {}
  ScalarFraction(Scalar num);  // NOLINT
  ScalarFraction(long c) : ScalarFraction(Scalar(c)) {}  // NOLINT
  ScalarFraction(Scalar num, Scalar den);

  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Numerator over a unit denominator; throws unless the denominator is a monomial.
  Scalar as_scalar() const;

  ScalarFraction operator-() const { return {-num_, den_}; }
  friend ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b);
  friend ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b);
  friend ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b);
  friend ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b);
  ScalarFraction& operator+=(const ScalarFraction& o) { return *this = *this + o; }
  ScalarFraction& operator-=(const ScalarFraction& o) { return *this = *this - o; }
  ScalarFraction& operator*=(const ScalarFraction& o) { return *this = *this * o; }
  friend bool operator==(const ScalarFraction& a, const ScalarFraction& b);

  ScalarFraction substitute(const std::map<std::string, Scalar>& bindings) const;
  std::string to_string() const;

private:
  void fold();
  Scalar num_;
  Scalar den_;
};

inline bool is_zero(const Scalar& a) { return a.is_zero(); }
inline bool is_zero(const ScalarFraction& a) { return a.is_zero(); }

std::string rational_to_string(const Rational& r);

}  // namespace toda2
