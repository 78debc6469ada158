#include "dpe6/reports.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dpe6 {

Json to_json(const PicClass& c) {
  Json coeffs = Json::array();
  for (int i = 0; i < 10; ++i) coeffs.push_back(static_cast<long>(c.coeffs(i)));
  return Json{{"basis", basis_name(c.basis)}, {"coeffs", coeffs}};
}

Json to_json(const LatticeMap& m) {
  Json rows = Json::array();
  for (int i = 0; i < 10; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 10; ++j) row.push_back(static_cast<long>(m.m(i, j)));
    rows.push_back(row);
  }
  return Json{{"source", basis_name(m.source)}, {"target", basis_name(m.target)},
              {"matrix", rows}};
}

Json to_json(const QuadExt& x) {
  if (x.is_rational()) return x.rational_part().str();
  return Json{{"u", x.rational_part().str()}, {"v", x.radical_part().str()}};
}

Json SuiteReport::to_json() const {
  Json results = Json::array();
  Json failures = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    results.push_back(entry);
    if (!c.pass) failures.push_back(entry);
  }
  return Json{{"suite", name}, {"config", config}, {"pass", pass()},
              {"results", results}, {"failures", failures}};
}

Json report_envelope(const std::string& command, const Json& config, const SuiteReport& suite) {
  Json suite_json = suite.to_json();
  return Json{{"command", command},
              {"config", config},
              {"pass", suite.pass()},
              {"results", suite_json["results"]},
              {"failures", suite_json["failures"]}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace dpe6
