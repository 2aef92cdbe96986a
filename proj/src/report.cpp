#include "toda2/report.hpp"

namespace toda2 {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::degenerate: return "degenerate";
  }
  return "fail";
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["residual_terms"] = r.residual_terms;
  j["witness"] = r.witness;
  j["anchor"] = r.anchor;
  j["elapsed_ms"] = r.elapsed_ms ? nlohmann::json(*r.elapsed_ms) : nlohmann::json(nullptr);
  if (!r.failures.empty()) j["failures"] = r.failures;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void ResidualLog::fill(CheckReport& r) const {
  r.residual_terms += terms_;
  r.failures.insert(r.failures.end(), failures_.begin(), failures_.end());
  if (r.witness.empty()) r.witness = witness_;
  if (terms_ != 0) r.status = Status::fail;
}

}  // namespace toda2
