#include "qgiso/report.hpp"

namespace qgiso {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Implied: return "implied";
  }
  return "?";
}

Status status_from_name(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "implied") return Status::Implied;
  throw std::invalid_argument("unknown status " + s);
}

LawReport law_from_residual(const std::string& law, const std::string& indices, const SeriesResidual& r, int depth) {
  LawReport rep;
  rep.law = law;
  rep.indices = indices;
  rep.depth = depth;
  rep.status = r.zero ? Status::Pass : Status::Fail;
  rep.detail = r.zero ? "residual 0 on " + r.window : "first nonzero at " + r.first_nonzero + " (window " + r.window + ")";
  return rep;
}

LawReport law_from_equality(const std::string& law, const std::string& indices, const UEAElement& lhs,
                            const UEAElement& rhs) {
  LawReport rep;
  rep.law = law;
  rep.indices = indices;
  auto d = lhs - rhs;
  rep.status = d.is_zero() ? Status::Pass : Status::Fail;
  rep.detail = d.is_zero() ? "exact equality" : "difference leads with " + d.leading_term();
  return rep;
}

bool all_passed(const LawReports& rs) {
  for (auto& r : rs)
    if (!r.passed()) return false;
  return true;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace qgiso
