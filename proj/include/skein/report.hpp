#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace skein {

struct Check {
  std::string id;
  bool pass = true;
  std::string witness;  // empty when passing
};

// Folds many instances of one identity into a single check, keeping the first failure.
struct Tally {
  bool ok = true;
  int count = 0;
  std::string witness;
  void add(bool pass, const std::string& w = {}) {
    ++count;
    if (!pass && ok) {
      ok = false;
      witness = w;
    }
  }
};

struct SuiteReport {
  std::string suite;
  int n = 2;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void add(std::string id, bool pass, std::string witness = {}) {
    checks.push_back({std::move(id), pass, pass ? std::string() : std::move(witness)});
  }
  void add(const std::string& id, const Tally& t) { add(id, t.ok, t.witness); }
  void merge(const SuiteReport& o) {
    for (const auto& c : o.checks) checks.push_back({o.suite + "/" + c.id, c.pass, c.witness});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["n"] = n;
    j["seed"] = seed;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
      if (!c.pass) e["witness"] = c.witness;
      j["checks"].push_back(e);
    }
    return j;
  }
};

}  // namespace skein
