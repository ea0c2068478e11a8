#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace convexity {

/// Outcome of a structural check. A failing verdict always carries a witness:
/// a JSON payload naming the sets/elements that exhibit the failure, plus a
/// short human-readable description.
class Verdict {
 public:
  static Verdict pass() { return Verdict(); }
  static Verdict fail(std::string description, nlohmann::json witness) {
    Verdict v;
    v.failure_ = Failure{std::move(description), std::move(witness)};
    return v;
  }

  bool holds() const { return !failure_.has_value(); }
  explicit operator bool() const { return holds(); }

  const std::string& description() const;
  const nlohmann::json& witness() const;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["holds"] = holds();
    if (failure_) {
      j["description"] = failure_->description;
      j["witness"] = failure_->witness;
    }
    return j;
  }

 private:
  struct Failure {
    std::string description;
    nlohmann::json witness;
  };
  Verdict() = default;
  std::optional<Failure> failure_;
};

inline const std::string& Verdict::description() const {
  static const std::string kEmpty;
  return failure_ ? failure_->description : kEmpty;
}

inline const nlohmann::json& Verdict::witness() const {
  static const nlohmann::json kNull;
  return failure_ ? failure_->witness : kNull;
}

}  // namespace convexity
