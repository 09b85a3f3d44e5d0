#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

namespace combicheck {

enum class Status { verified, counterexample, skipped };

std::string to_string(Status s);

/// Outcome of one theorem check.
///
/// A counterexample report always carries a non-null witness holding enough
/// data to replay the failing instance through the module operation alone.
/// `details` holds payloads such as polynomials or multisets. Wall time is
/// kept out of the JSON so that identical runs serialize identically.
struct Report {
  std::string theorem;
  std::uint64_t instances = 0;
  Status status = Status::verified;
  nlohmann::json witness = nullptr;
  nlohmann::json details = nlohmann::json::object();
  double wall_seconds = 0.0;

  bool ok() const { return status != Status::counterexample; }

  /// Records a failure; keeps the first witness seen.
  void fail(nlohmann::json w) {
    if (status != Status::counterexample) witness = std::move(w);
    status = Status::counterexample;
  }
};

nlohmann::json to_json(const Report& r);

}  // namespace combicheck
