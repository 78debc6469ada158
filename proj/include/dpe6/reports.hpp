#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "dpe6/lattice.hpp"
#include "dpe6/point_config.hpp"
#include "dpe6/quadext.hpp"

namespace dpe6 {

/// Insertion-ordered JSON so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const PicClass& c);
Json to_json(const LatticeMap& m);
Json to_json(const QuadExt& x);

template <class S>
Json to_json(const PointConfig<S>& c) {
  Json j;
  j["a0"] = to_json(c.a0);
  j["a1"] = to_json(c.a1);
  j["a2"] = to_json(c.a2);
  j["t"] = to_json(c.t);
  j["q"] = to_json(c.q);
  j["p"] = to_json(c.p);
  return j;
}

/// One named pass/fail check with a free-form detail payload.
struct CheckResult {
  std::string name;
  bool pass = false;
  Json detail;
};

/// A verification suite: named checks plus the configuration that drove them.
struct SuiteReport {
  std::string name;
  Json config = Json::object();
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string check_name, bool ok, Json detail = Json::object()) {
    checks.push_back({std::move(check_name), ok, std::move(detail)});
  }

  Json to_json() const;
};

/// Top-level CLI payload: {command, config, results, failures}.
Json report_envelope(const std::string& command, const Json& config, const SuiteReport& suite);

/// Serializes with a trailing newline, 2-space indentation.
std::string dump_json(const Json& j);

/// Writes atomically: to a temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace dpe6
