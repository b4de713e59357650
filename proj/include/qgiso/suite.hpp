// Named verification suites and their reports.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgiso/phi.hpp"
#include "qgiso/report.hpp"

namespace qgiso {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::string suite = "all";
  int n = 3;
  int depth = 6;       // Laurent depth K
  int hbar_order = 6;  // truncation N
  std::string rep = "defining";
  std::string format = "text";
  uint64_t seed = 1;
  FDenominator f_denominator = FDenominator::Shifted;
  // test hook: add hbar^2 to T_11 before the T-based suites run
  bool inject_fault = false;

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

// defaults, with QGISO_DEPTH and QGISO_HBAR_ORDER applied when set
SuiteConfig default_config();
// throws usage_error
void validate(const SuiteConfig& c);

struct SuiteReport {
  SuiteConfig config;
  std::string g_choice = "sqrt";
  std::vector<std::string> notes;
  LawReports laws;

  bool verdict() const { return all_passed(laws); }
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

SuiteReport run_suite(const SuiteConfig& c);

std::string emit_json(const SuiteReport& r, bool with_timing = true);
SuiteReport parse_json(const std::string& text);
std::string emit_text(const SuiteReport& r);
std::string emit(const SuiteReport& r);  // per config.format

}  // namespace qgiso
