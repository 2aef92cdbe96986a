#pragma once

// Classical phase space: commutative fractions over chart generators with a
// quadratic Poisson bracket fixed on generators and extended by Leibniz.

#include "toda2/matrix.hpp"
#include "toda2/report.hpp"
#include "toda2/ring.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toda2 {

using PoissonElem = ScalarFraction;

enum class ChartKind { exlat, qp, darboux };

class ForeignGenerator : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Chart {
public:
  static Chart make(ChartKind kind, int size, bool periodic);

  ChartKind kind() const { return kind_; }
  int size() const { return size_; }
  bool periodic() const { return periodic_; }

  /// Generator by family and 1-based site: exlat {xi1, xi2}, qp {Q, P}, darboux {g, h}.
  Scalar gen(const std::string& family, int n) const;
  std::size_t gen_index(const std::string& family, int n) const;
  const std::vector<std::size_t>& generators() const { return vars_; }
  /// Bracket of the i-th and j-th generators (positions in generators()).
  const Scalar& table(std::size_t i, std::size_t j) const { return table_[i * vars_.size() + j]; }

  /// Position of a registry variable among the generators, or -1.
  int position(std::size_t var) const;
  /// Throws ForeignGenerator if `a` mentions a generator of another chart.
  void check_owned(const Scalar& a) const;

private:
  Chart() = default;
  int site(int n) const;
  std::vector<std::string> families() const;

  ChartKind kind_ = ChartKind::qp;
  int size_ = 0;
  bool periodic_ = false;
  std::vector<std::size_t> vars_;
  std::vector<int> pos_;  // registry index -> generator position
  std::vector<Scalar> table_;
};

/// Derivative of a Laurent polynomial in one registry variable.
Scalar derivative(const Scalar& a, std::size_t var);

/// Bracket of Laurent polynomials.
Scalar poisson_bracket(const Scalar& f, const Scalar& g, const Chart& chart);
/// Bracket of fractions by the quotient rule.
PoissonElem poisson_bracket(const PoissonElem& f, const PoissonElem& g, const Chart& chart);

enum class ClassicalSymbol { W1, W2, S, Q, P, xi1_darboux, xi2_darboux, repQ2, repP };

/// Chart-level building blocks: Wronskians, S, Q, P in the exlat chart, the
/// Darboux realisation of xi and the Q^2, P representation in the darboux chart.
PoissonElem build_classical(ClassicalSymbol symbol, int n, const Chart& chart);

/// The classical exchange matrices r^+ and r^- in the component convention
/// {xi^a_n, xi^b_m} = sum xi^a'_n xi^b'_m r[(a'b'),(ab)].
Matrix<Scalar> exlat_r(bool plus);

}  // namespace toda2
