#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace gsk {

struct Check {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// Outcome of one CLI command. `text` is the human-readable rendering and is
/// not part of the JSON form.
struct RunReport {
  std::string command;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  std::int64_t wall_time_ms = 0;
  std::vector<std::string> text;

  void add(std::string name, bool pass, std::vector<std::string> witnesses = {}) {
    checks.push_back({std::move(name), pass, std::move(witnesses)});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
    return {{"command", command}, {"checks", cs}, {"data", data}, {"wall_time_ms", wall_time_ms}};
  }
};

}  // namespace gsk
