#include "algebroid/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace algebroid {

namespace {

std::string index_text(const DefectTensor::Index& idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s + "]";
}

}  // namespace

std::string render_defects(const DefectTensor& t, const Chart& chart, const std::string& label) {
  std::string out;
  for (const auto& [idx, v] : t.entries()) out += label + index_text(idx) + " = " + format(v, chart) + "\n";
  return out;
}

void CheckResult::require_vanishing(const DefectReport& rep, const Chart& chart, const std::string& prefix,
                                    const std::vector<std::string>& families) {
  for (const auto& [name, t] : rep.tensors()) {
    if (!families.empty() && std::find(families.begin(), families.end(), name) == families.end()) continue;
    for (const auto& [idx, v] : t.entries()) {
      passed = false;
      lines.push_back(prefix + name + index_text(idx) + " = " + format(v, chart));
    }
  }
  if (families.empty())
    for (const auto& [name, s] : rep.nonvanishing())
      if (s.is_zero()) {
        passed = false;
        lines.push_back(prefix + name + " vanishes");
      }
}

void CheckResult::expect(bool cond, const std::string& note) {
  if (cond) return;
  passed = false;
  lines.push_back(note);
}

bool ReportDocument::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "digest: " << doc.input_digest << "\n";
  os << "verdict: " << (doc.passed() ? "pass" : "fail") << "\n";
  for (const auto& c : doc.checks) {
    os << "check " << c.name << ": " << (c.passed ? "pass" : "fail");
    if (c.instances > 0) os << " (" << c.instances << " instances)";
    os << "\n";
    for (const auto& l : c.lines) os << "  " << l << "\n";
  }
  return os.str();
}

std::string render_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["digest"] = doc.input_digest;
  j["verdict"] = doc.passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : doc.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["verdict"] = c.passed ? "pass" : "fail";
    e["instances"] = c.instances;
    e["details"] = c.lines;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace algebroid
