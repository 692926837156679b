// Outcome record for every identity check the library performs. Reports
// serialize to a versioned JSON document (and a plain-text rendering); with a
// fixed configuration and seed the emitted bytes are reproducible, since wall
// time is only recorded on request.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace normforms {

struct VerifyReport {
  static constexpr const char* kSchema = "normforms-report/1";

  std::string identity;
  std::string statement;
  std::string mode;  // exact | probabilistic | exhaustive
  std::map<std::string, std::string> parameters;
  bool pass = false;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::string convention;
  std::uint64_t seed = 0;
  std::string failure_bound;  // exact rational string; probabilistic mode only
  std::int64_t wall_ms = 0;

  nlohmann::ordered_json to_json() const;
  static VerifyReport from_json(const nlohmann::ordered_json& j);
  std::string to_text() const;

  bool operator==(const VerifyReport& o) const = default;
};

}  // namespace normforms
