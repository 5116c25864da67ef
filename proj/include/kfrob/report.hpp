#pragma once

#include <json.hpp>

#include <string>

namespace kfrob {

// FAIL means an identity did not hold; ERROR means the check could not be
// carried out (precondition violated, budget exhausted, bad input).
enum class Status { pass, fail, error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct VerificationReport {
  std::string id;
  std::string kind;
  Status status = Status::error;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json lhs;
  nlohmann::json rhs;
  nlohmann::json trace = nlohmann::json::object();
  std::string message;
  double seconds = 0.0;  // excluded from golden comparisons

  bool passed() const noexcept { return status == Status::pass; }

  // Timing is not part of this object; see suite.hpp for where it goes.
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

}  // namespace kfrob
