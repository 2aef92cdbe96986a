#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toda2 {

enum class Status { pass, fail, degenerate };

std::string to_string(Status s);

struct CheckReport {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::pass;
  std::size_t residual_terms = 0;
  std::string witness;  // first nonzero residual term, canonical text
  std::string anchor;
  std::optional<double> elapsed_ms;
  std::vector<std::string> failures;  // locations of nonzero residuals
  std::string note;

  bool ok() const { return status != Status::fail; }
};

nlohmann::json to_json(const CheckReport& r);

/// Accumulates residuals per location into a report.
class ResidualLog {
public:
  /// Records a residual whose text is produced lazily, only when nonzero.
  template <class R>
  void add(const std::string& where, const R& residual) {
    std::size_t n = term_count_of(residual);
    if (n == 0) return;
    terms_ += n;
    failures_.push_back(where);
    if (witness_.empty()) witness_ = where + ": " + first_term(residual);
  }
  void add_raw(const std::string& where, std::size_t terms, const std::string& witness) {
    if (terms == 0) return;
    terms_ += terms;
    failures_.push_back(where);
    if (witness_.empty()) witness_ = where + ": " + witness;
  }

  bool clean() const { return terms_ == 0; }
  void fill(CheckReport& r) const;

private:
  template <class R>
  static std::size_t term_count_of(const R& r) {
    if constexpr (requires { r.num(); })
      return r.num().size();
    else if constexpr (requires { r.flat_size(); })
      return r.flat_size();
    else
      return r.size();
  }
  template <class R>
  static std::string first_term(const R& r);

  std::size_t terms_ = 0;
  std::vector<std::string> failures_;
  std::string witness_;
};

}  // namespace toda2

#include "toda2/ring.hpp"
#include "toda2/weyl.hpp"

namespace toda2 {

template <class R>
std::string ResidualLog::first_term(const R& r) {
  if constexpr (requires { r.num(); }) {
    const auto& t = r.num().terms().front();
    return Scalar(t.first, t.second, r.num().registry()).to_string();
  } else if constexpr (requires { r.flat_size(); }) {
    const auto& [m, c] = r.terms().front();
    const auto& t = c.terms().front();
    std::string mono = weyl_monomial_to_string(m);
    return "(" + Scalar(t.first, t.second, c.registry()).to_string() + ")" +
           (m.empty() ? "" : " " + mono);
  } else {
    const auto& t = r.terms().front();
    return Scalar(t.first, t.second, r.registry()).to_string();
  }
}

}  // namespace toda2
