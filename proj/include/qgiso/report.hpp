// Per-law verification records shared by every checking module.
#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "qgiso/laurent.hpp"

namespace qgiso {

enum class Status { Pass, Fail, Implied };

const char* status_name(Status s);
Status status_from_name(const std::string& s);

struct LawReport {
  std::string law;
  std::string indices;
  int depth = -1;  // Laurent depth used, -1 if not applicable
  int order = -1;  // hbar truncation order, -1 if exact
  Status status = Status::Pass;
  std::string detail;
  double ms = 0;

  bool passed() const { return status != Status::Fail; }
  friend bool operator==(const LawReport&, const LawReport&) = default;
};

using LawReports = std::vector<LawReport>;

LawReport law_from_residual(const std::string& law, const std::string& indices, const SeriesResidual& r,
                            int depth = -1);
LawReport law_from_equality(const std::string& law, const std::string& indices, const UEAElement& lhs,
                            const UEAElement& rhs);

bool all_passed(const LawReports& rs);

std::string join_ints(const std::vector<int>& v, const char* sep = ",");

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace qgiso
