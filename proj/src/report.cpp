#include "normforms/report.hpp"

#include <sstream>

#include "normforms/error.hpp"

namespace normforms {

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["identity"] = identity;
  j["statement"] = statement;
  j["mode"] = mode;
  j["parameters"] = parameters;
  j["pass"] = pass;
  j["witness"] = witness;
  j["convention"] = convention;
  j["seed"] = seed;
  j["failure_bound"] = failure_bound;
  j["wall_ms"] = wall_ms;
  return j;
}

VerifyReport VerifyReport::from_json(const nlohmann::ordered_json& j) {
  if (!j.contains("schema") || j.at("schema").get<std::string>() != kSchema)
    throw ParseError("unknown report schema");
  VerifyReport r;
  r.identity = j.at("identity").get<std::string>();
  r.statement = j.at("statement").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  r.pass = j.at("pass").get<bool>();
  r.witness = j.at("witness");
  r.convention = j.at("convention").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.failure_bound = j.at("failure_bound").get<std::string>();
  r.wall_ms = j.at("wall_ms").get<std::int64_t>();
  return r;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "identity:      " << identity << "\n";
  os << "statement:     " << statement << "\n";
  os << "mode:          " << mode << "\n";
  for (const auto& [k, v] : parameters) os << "param " << k << ": " << v << "\n";
  os << "pass:          " << (pass ? "true" : "false") << "\n";
  if (!convention.empty()) os << "convention:    " << convention << "\n";
  os << "seed:          " << seed << "\n";
  if (!failure_bound.empty()) os << "failure_bound: " << failure_bound << "\n";
  if (!witness.empty()) os << "witness:       " << witness.dump() << "\n";
  os << "wall_ms:       " << wall_ms << "\n";
  return os.str();
}

}  // namespace normforms
