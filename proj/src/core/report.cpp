#include "combicheck/report.hpp"

namespace combicheck {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::counterexample:
      return "counterexample";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["instances"] = r.instances;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

}  // namespace combicheck
