#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algebroid/chart.hpp"
#include "algebroid/tensor.hpp"

namespace algebroid {

struct CheckResult {
  std::string name;
  bool passed = true;
  int instances = 0;
  std::vector<std::string> lines;  // nonzero defect entries and notes

  // Renders every nonzero entry of the named families (all when empty) as
  // "prefix family[i,j,...] = value" and fails the check if any is found.
  void require_vanishing(const DefectReport& rep, const Chart& chart, const std::string& prefix = "",
                         const std::vector<std::string>& families = {});
  // Fails unless cond holds; note is recorded on failure.
  void expect(bool cond, const std::string& note);
};

struct ReportDocument {
  std::string input_digest;
  std::vector<CheckResult> checks;
  bool passed() const;
};

std::string sha256_hex(std::string_view data);
std::string render_defects(const DefectTensor& t, const Chart& chart, const std::string& label);

// Stable key order; no timing, so identical input gives identical bytes.
std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);

}  // namespace algebroid
