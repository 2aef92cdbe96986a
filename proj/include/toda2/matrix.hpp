#pragma once

// Dense matrices over Scalar, WeylOp or PoissonElem with an optional common
// scalar denominator. Entries never need to commute except in det_comm.

#include "toda2/ring.hpp"
#include "toda2/weyl.hpp"

#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace toda2 {

template <class T>
struct is_commutative : std::false_type {};
template <>
struct is_commutative<Scalar> : std::true_type {};
template <>
struct is_commutative<ScalarFraction> : std::true_type {};

template <class T>
concept CommutativeEntry = is_commutative<T>::value;

inline std::size_t term_count(const Scalar& a) { return a.size(); }
inline std::size_t term_count(const WeylOp& a) { return a.flat_size(); }
inline std::size_t term_count(const ScalarFraction& a) { return a.num().size() + a.den().size(); }

inline Scalar one_like(const Scalar& a) { return Scalar(Rational(1), a.registry()); }
inline ScalarFraction one_like(const ScalarFraction& a) { return ScalarFraction(one_like(a.num())); }

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, zero), den_(1L) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  T zero() const { return data_.front() - data_.front(); }

  /// Entries are numerators over this common denominator.
  const Scalar& den() const { return den_; }
  void set_den(Scalar d) {
    if (d.is_zero()) throw std::domain_error("zero matrix denominator");
    den_ = std::move(d);
  }

  template <class F>
  auto map(F f) const -> Matrix<std::invoke_result_t<F, const T&>> {
    using R = std::invoke_result_t<F, const T&>;
    Matrix<R> out(rows_, cols_, f(data_.front()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    out.set_den(den_);
    return out;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, 1); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, -1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_, a.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!is_zero(y)) r(i, j) += x * y;
        }
      }
    r.den_ = a.den_ * b.den_;
    return r;
  }

  friend Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = c * x;
    return r;
  }

  /// Entries with the denominator multiplied through (den becomes 1).
  Matrix scaled_numerators(const Scalar& c) const {
    Matrix r = c * *this;
    r.den_ = Scalar(1L);
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    r.den_ = den_;
    return r;
  }

  bool all_zero() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  std::size_t term_total() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += term_count(x);
    return n;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ",\n [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]";
    }
    out += "]";
    if (!(den_ == Scalar(1L))) out += " / (" + den_.to_string() + ")";
    return out;
  }

private:
  static Matrix combine(const Matrix& a, const Matrix& b, int sign) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix r = a;
    if (a.den_ == b.den_) {
      for (std::size_t k = 0; k < r.data_.size(); ++k)
        r.data_[k] = sign > 0 ? a.data_[k] + b.data_[k] : a.data_[k] - b.data_[k];
      return r;
    }
    for (std::size_t k = 0; k < r.data_.size(); ++k) {
      T x = b.den_ * a.data_[k];
      T y = a.den_ * b.data_[k];
      r.data_[k] = sign > 0 ? x + y : x - y;
    }
    r.den_ = a.den_ * b.den_;
    return r;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
  Scalar den_{1L};
};

/// a*den(b) - b*den(a); zero iff a and b are equal as fractions.
template <class T>
Matrix<T> residual(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> x = a.scaled_numerators(b.den());
  Matrix<T> y = b.scaled_numerators(a.den());
  return x - y;
}

template <class T>
Matrix<T> from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix<T> m(rows.size(), rows.front().size(), rows.front().front() - rows.front().front());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

/// (A (x) B)[(i,k),(j,l)] = A_ij B_kl, left factor first.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  r.set_den(a.den() * b.den());
  return r;
}

/// A acting in tensor slot `slot` (1 or 2) of an n*n-dimensional space.
template <class T>
Matrix<T> tensor_embed(const Matrix<T>& a, int slot, const T& one) {
  if (a.rows() != a.cols()) throw std::invalid_argument("embedding needs a square matrix");
  auto id = Matrix<T>::identity(a.rows(), a.zero(), one);
  if (slot == 1) return kron(a, id);
  if (slot == 2) return kron(id, a);
  throw std::invalid_argument("tensor slot must be 1 or 2");
}

/// Flip operator on C^n (x) C^n.
template <class T>
Matrix<T> flip(std::size_t n, const T& zero, const T& one) {
  Matrix<T> p(n * n, n * n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) p(i * n + k, k * n + i) = one;
  return p;
}

/// Transpose in the first (slot 1) or second (slot 2) tensor factor.
template <class T>
Matrix<T> partial_transpose(const Matrix<T>& m, std::size_t n, int slot) {
  if (m.rows() != n * n || m.cols() != n * n) throw std::invalid_argument("partial transpose shape");
  Matrix<T> r(m.rows(), m.cols(), m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const T& x = m(i * n + j, k * n + l);
          if (slot == 1)
            r(k * n + j, i * n + l) = x;
          else
            r(i * n + l, k * n + j) = x;
        }
  r.set_den(m.den());
  return r;
}

/// Trace with the denominator divided out; needs a monomial denominator.
template <class T>
T trace(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
  if (!m.den().is_monomial()) throw std::domain_error("trace needs a monomial denominator");
  T t = m.zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return m.den().pow(-1) * t;
}

namespace detail {
template <class T>
T det_rec(const Matrix<T>& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return one_like(m(0, 0));
  T acc = m.zero();
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t col = cols[c];
    if (!is_zero(m(row, col))) {
      cols.erase(cols.begin() + static_cast<long>(c));
      T minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(c), col);
      T term = m(row, col) * minor;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}
}  // namespace detail

/// Determinant by cofactor expansion; only for commuting entries. The
/// denominator is raised to the n-th power and returned alongside.
template <CommutativeEntry T>
std::pair<T, Scalar> det_comm(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return {detail::det_rec(m, cols, 0), m.den().pow(static_cast<int>(m.rows()))};
}

/// Inverse of a Scalar matrix as adjugate over determinant.
Matrix<Scalar> inverse(const Matrix<Scalar>& m);

/// Lifts a scalar matrix into operator entries on `lat`.
Matrix<WeylOp> lift(const Matrix<Scalar>& m, Lattice lat);

}  // namespace toda2
