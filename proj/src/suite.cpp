#include "qgiso/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qgiso/evaluation.hpp"
#include "qgiso/psi.hpp"
#include "qgiso/rtt.hpp"
#include "qgiso/spectra.hpp"

namespace qgiso {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rtt", "minors", "center", "psi", "partialfractions", "yangian",
                                              "phi", "all"};
  return names;
}

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end) throw usage_error(std::string(name) + " is not an integer: " + v);
  return static_cast<int>(x);
}

void append(LawReports& out, LawReports more) {
  for (auto& r : more) out.push_back(std::move(r));
}

TMatrix suite_T(const SuiteConfig& c) {
  TMatrix T = build_T(c.n);
  if (c.inject_fault) {
    T.at(1, 1) += UEAElement(c.n, ScalarPoly::hbar(2));
    T.modified = true;
  }
  return T;
}

LawReports run_rtt(const SuiteConfig& c) {
  const TMatrix T = suite_T(c);
  LawReports out;
  append(out, verify_rtt_family(T, RttLaw::Pairwise, 2));
  append(out, verify_rtt_family(T, RttLaw::Entrywise, 2));
  append(out, verify_rtt_family(T, RttLaw::Multi, 3));
  for (int N : {2, 3}) {
    append(out, verify_rtt_family(T, RttLaw::Antisym, N));
    append(out, verify_rtt_family(T, RttLaw::CN, N));
  }
  if (c.n == 2) out.push_back(sl2_principal_minor_check());
  return out;
}

LawReports run_minors(const SuiteConfig& c) {
  const TMatrix T = suite_T(c);
  LawReports out;
  for (MinorLaw law : {MinorLaw::PropFirst, MinorLaw::PropSecond, MinorLaw::Corollary})
    for (int N = 1; N <= 2; ++N) {
      if (law == MinorLaw::Corollary && N < 2) continue;
      if (c.n <= 3) append(out, verify_minor_comm(T, law, N));
      else append(out, verify_minor_comm_sample(T, law, N, 256, c.seed + N));
    }
  return out;
}

LawReports run_center(const SuiteConfig& c) { return gt_subalgebra_checks(c.n, c.n <= 3); }

LawReports run_psi(const SuiteConfig& c) {
  LawReports out;
  const int n = c.n, K = c.depth;
  if (n < 3) {
    LawReport r;
    r.law = "psi";
    r.indices = "n=2";
    r.status = Status::Implied;
    r.detail = "no psi level k >= 1 leaves a matrix of size 2 or more";
    out.push_back(r);
    return out;
  }
  for (int k = 1; k <= n - 2; ++k) append(out, verify_psi(n, PsiLaw::Rtt, k, 0, K));
  for (int k = 1; k <= n - 2; ++k)
    for (int l = 1; k + l <= n - 2; ++l) append(out, verify_psi(n, PsiLaw::Iteration, k, l, K));
  for (int l = 1; l <= n - 2; ++l) append(out, verify_psi(n, PsiLaw::DetIdentity, 0, l, K));
  return out;
}

LawReports run_partial_fractions(const SuiteConfig& c) {
  const SpectrumTable s = spectrum_table(rep_by_name(c.n, c.rep));
  LawReports out;
  for (int k = 1; k < c.n; ++k)
    for (int sign : {1, -1}) out.push_back(verify_partial_fractions(s, k, c.depth, sign));
  return out;
}

LawReports run_yangian(const SuiteConfig& c) {
  LawReports out = verify_yangian_all(c.n, c.depth);
  for (int k = 1; k < c.n; ++k) append(out, recursive_form_check(c.n, k, c.depth));
  append(out, t11_compare(c.n));
  return out;
}

LawReports run_phi(const SuiteConfig& c) {
  LawReports out;
  {
    Stopwatch sw;
    const int order = std::max(12, c.hbar_order);
    auto g = g_series(order);
    auto f = factorization_check(g.plus, g.minus, order);
    LawReport r;
    r.law = "g.factorization";
    r.indices = "sqrt";
    r.order = order;
    if (!f.holds()) r.status = Status::Fail;
    r.detail = f.to_string();
    r.ms = sw.ms();
    out.push_back(r);
  }
  const SpectrumTable s = spectrum_table(rep_by_name(c.n, c.rep));
  PhiOptions opt;
  opt.f_denominator = c.f_denominator;
  const std::string label = "n=" + std::to_string(c.n) + " rep=" + c.rep;
  append(out, verify_qg(phi_images(s, c.hbar_order, opt), label));
  if (c.n == 2) out.push_back(sl2_closed_form_check(s, c.hbar_order));
  append(out, compose_crosscheck(s, c.hbar_order, std::max(c.depth, c.n)));
  out.push_back(root_symmetry_check(s, c.hbar_order, c.seed));
  return out;
}

LawReports run_one(const std::string& name, const SuiteConfig& c) {
  try {
    if (name == "rtt") return run_rtt(c);
    if (name == "minors") return run_minors(c);
    if (name == "center") return run_center(c);
    if (name == "psi") return run_psi(c);
    if (name == "partialfractions") return run_partial_fractions(c);
    if (name == "yangian") return run_yangian(c);
    if (name == "phi") return run_phi(c);
  } catch (const usage_error&) {
    throw;
  } catch (const std::exception& e) {
    LawReport r;
    r.law = name + ".error";
    r.indices = "n=" + std::to_string(c.n);
    r.status = Status::Fail;
    r.detail = e.what();
    return {r};
  }
  throw usage_error("unknown suite '" + name + "'");
}

}  // namespace

SuiteConfig default_config() {
  SuiteConfig c;
  c.depth = env_int("QGISO_DEPTH", c.depth);
  c.hbar_order = env_int("QGISO_HBAR_ORDER", c.hbar_order);
  return c;
}

void validate(const SuiteConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end())
    throw usage_error("unknown suite '" + c.suite + "'");
  if (c.n < 2 || c.n > 4) throw usage_error("n must be in 2..4");
  if (c.depth < 2 || c.depth > 12) throw usage_error("depth must be in 2..12");
  if (c.hbar_order < 2 || c.hbar_order > 16) throw usage_error("hbar order must be in 2..16");
  if (c.rep != "defining" && c.rep != "tensor2") throw usage_error("rep must be defining or tensor2");
  if (c.format != "text" && c.format != "json") throw usage_error("format must be text or json");
}

SuiteReport run_suite(const SuiteConfig& c) {
  validate(c);
  SuiteReport r;
  r.config = c;
  if (c.suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all") append(r.laws, run_one(name, c));
  } else {
    r.laws = run_one(c.suite, c);
  }
  if (c.suite == "phi" || c.suite == "all")
    r.notes.push_back("quantum group relations are certified mod hbar^" + std::to_string(c.hbar_order) + " on the " +
                      c.rep + " representation; this shows a homomorphism there, not an isomorphism");
  if (c.inject_fault) r.notes.push_back("fault injected: T_11 perturbed by hbar^2");
  return r;
}

using nlohmann::ordered_json;

std::string emit_json(const SuiteReport& r, bool with_timing) {
  ordered_json j;
  j["schema"] = 1;
  const SuiteConfig& c = r.config;
  j["config"] = {{"suite", c.suite},
                 {"n", c.n},
                 {"depth", c.depth},
                 {"hbar_order", c.hbar_order},
                 {"rep", c.rep},
                 {"format", c.format},
                 {"seed", c.seed},
                 {"f_denominator", f_denominator_name(c.f_denominator)},
                 {"inject_fault", c.inject_fault},
                 {"g_choice", r.g_choice}};
  j["laws"] = ordered_json::array();
  for (const auto& l : r.laws) {
    ordered_json e{{"id", l.law}, {"indices", l.indices}, {"status", status_name(l.status)}, {"detail", l.detail},
                   {"depth", l.depth}, {"order", l.order}};
    if (with_timing) e["ms"] = l.ms;
    j["laws"].push_back(e);
  }
  j["notes"] = r.notes;
  j["verdict"] = r.verdict() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

SuiteReport parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("schema").get<int>() != 1) throw std::runtime_error("unsupported report schema");
  SuiteReport r;
  const auto& c = j.at("config");
  r.config.suite = c.at("suite").get<std::string>();
  r.config.n = c.at("n").get<int>();
  r.config.depth = c.at("depth").get<int>();
  r.config.hbar_order = c.at("hbar_order").get<int>();
  r.config.rep = c.at("rep").get<std::string>();
  r.config.format = c.at("format").get<std::string>();
  r.config.seed = c.at("seed").get<uint64_t>();
  r.config.f_denominator =
      c.at("f_denominator").get<std::string>() == "printed" ? FDenominator::Printed : FDenominator::Shifted;
  r.config.inject_fault = c.at("inject_fault").get<bool>();
  r.g_choice = c.at("g_choice").get<std::string>();
  for (const auto& e : j.at("laws")) {
    LawReport l;
    l.law = e.at("id").get<std::string>();
    l.indices = e.at("indices").get<std::string>();
    l.status = status_from_name(e.at("status").get<std::string>());
    l.detail = e.at("detail").get<std::string>();
    l.depth = e.at("depth").get<int>();
    l.order = e.at("order").get<int>();
    if (e.contains("ms")) l.ms = e.at("ms").get<double>();
    r.laws.push_back(l);
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string emit_text(const SuiteReport& r) {
  const SuiteConfig& c = r.config;
  std::ostringstream os;
  os << "suite " << c.suite << "  n=" << c.n << "  depth=" << c.depth << "  hbar-order=" << c.hbar_order
     << "  rep=" << c.rep << "  seed=" << c.seed << "  G=" << r.g_choice << "\n\n";
  size_t wl = 3, wi = 7;
  for (const auto& l : r.laws) {
    wl = std::max(wl, l.law.size());
    wi = std::max(wi, l.indices.size());
  }
  os << std::left << std::setw(wl + 2) << "law" << std::setw(wi + 2) << "indices" << std::setw(9) << "status"
     << std::right << std::setw(10) << "ms" << "  detail\n";
  for (const auto& l : r.laws) {
    os << std::left << std::setw(wl + 2) << l.law << std::setw(wi + 2) << l.indices << std::setw(9)
       << status_name(l.status) << std::right << std::setw(10) << std::fixed << std::setprecision(1) << l.ms << "  "
       << l.detail << "\n";
  }
  const auto failed = std::count_if(r.laws.begin(), r.laws.end(), [](const LawReport& l) { return !l.passed(); });
  for (const auto& n : r.notes) os << "\nnote: " << n;
  if (!r.notes.empty()) os << "\n";
  os << "\nverdict: " << (r.verdict() ? "pass" : "fail") << " (" << r.laws.size() << " laws, " << failed
     << " failed)\n";
  return os.str();
}

std::string emit(const SuiteReport& r) { return r.config.format == "json" ? emit_json(r) : emit_text(r); }

}  // namespace qgiso
