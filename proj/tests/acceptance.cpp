// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qgiso/evaluation.hpp"
#include "qgiso/phi.hpp"
#include "qgiso/psi.hpp"
#include "qgiso/rtt.hpp"

using namespace qgiso;

namespace {

void add(LawReports& out, LawReports more) {
  for (auto& r : more) out.push_back(std::move(r));
}

LawReport fact(const std::string& law, bool ok, const std::string& detail) {
  LawReport r;
  r.law = law;
  r.status = ok ? Status::Pass : Status::Fail;
  r.detail = detail;
  return r;
}

struct Criterion {
  int id;
  const char* title;
  std::function<LawReports()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "RTT relation, n = 2, 3, 4",
       [] {
         LawReports out;
         for (int n : {2, 3, 4}) {
           add(out, verify_rtt_family(RttLaw::Pairwise, n));
           add(out, verify_rtt_family(RttLaw::Entrywise, n));
         }
         return out;
       }},
      {2, "antisymmetrizer scalar, N = 2, 3",
       [] {
         LawReports out;
         for (int n : {2, 3})
           for (int N : {2, 3}) {
             add(out, verify_rtt_family(RttLaw::Antisym, n, N));
             add(out, verify_rtt_family(RttLaw::CN, n, N));
           }
         const auto c3 = c_N(3);
         out.push_back(fact("c_3", c3 == ScalarPoly(-2) * ScalarPoly::hbar(3), "c_3 = " + c3.to_string()));
         return out;
       }},
      {3, "sl2 principal minor", [] { return LawReports{sl2_principal_minor_check()}; }},
      {4, "minor commutation, n <= 3 exhaustive, n = 4 sampled",
       [] {
         LawReports out;
         for (int n : {2, 3, 4}) {
           const TMatrix T = build_T(n);
           for (MinorLaw law : {MinorLaw::PropFirst, MinorLaw::PropSecond, MinorLaw::Corollary})
             for (int N = 1; N <= 2; ++N) {
               if (law == MinorLaw::Corollary && N < 2) continue;
               if (n <= 3) add(out, verify_minor_comm(T, law, N));
               else add(out, verify_minor_comm_sample(T, law, N, 256, 17 + N));
             }
         }
         return out;
       }},
      {5, "commutative subalgebra and centrality",
       [] {
         LawReports out;
         add(out, gt_subalgebra_checks(2, true));
         add(out, gt_subalgebra_checks(3, true));
         add(out, gt_subalgebra_checks(4, false));
         return out;
       }},
      {6, "psi-operator laws to depth 4",
       [] {
         LawReports out;
         add(out, verify_psi(3, PsiLaw::Rtt, 1, 0, 4));
         add(out, verify_psi(4, PsiLaw::Rtt, 1, 0, 4));
         add(out, verify_psi(4, PsiLaw::Rtt, 2, 0, 4));
         add(out, verify_psi(4, PsiLaw::Iteration, 1, 1, 4));
         add(out, verify_psi(3, PsiLaw::DetIdentity, 0, 1, 4));
         return out;
       }},
      {7, "evaluation homomorphism to depth 6, n = 2, 3",
       [] {
         LawReports out;
         for (int n : {2, 3}) {
           add(out, verify_yangian_all(n, 6));
           add(out, zero_mode_checks(n));
         }
         return out;
       }},
      {8, "recursive psi form at n = 3, depth 4",
       [] {
         LawReports out;
         for (int k = 1; k <= 2; ++k) add(out, recursive_form_check(3, k, 4));
         return out;
       }},
      {9, "t11 triple agreement at n = 3", [] { return t11_compare(3); }},
      {10, "partial fractions on defining reps, depth 4",
       [] {
         LawReports out;
         for (int n : {2, 3}) {
           const auto s = spectrum_table(defining_rep(n));
           for (int k = 1; k < n; ++k)
             for (int sign : {1, -1}) out.push_back(verify_partial_fractions(s, k, 4, sign));
         }
         return out;
       }},
      {11, "phi satisfies the quantum group relations",
       [] {
         LawReports out;
         for (const char* rep : {"defining", "tensor2"}) {
           const auto s = spectrum_table(rep_by_name(2, rep));
           add(out, verify_qg(phi_images(s, 8), std::string("n=2 rep=") + rep));
           out.push_back(sl2_closed_form_check(s, 8));
           add(out, compose_crosscheck(s, 6, 6));
         }
         const auto s3 = spectrum_table(defining_rep(3));
         add(out, verify_qg(phi_images(s3, 6), "n=3 rep=defining"));
         add(out, compose_crosscheck(s3, 6, 6));
         return out;
       }},
      {12, "G factorization to order 12",
       [] {
         const auto g = g_series(12);
         const auto f = factorization_check(g.plus, g.minus, 12);
         return LawReports{fact("g.factorization", f.holds(), f.to_string())};
       }},
      {13, "root-order invariance at n = 3",
       [] {
         LawReports out;
         for (const char* rep : {"defining", "tensor2"}) {
           const auto s = spectrum_table(rep_by_name(3, rep));
           for (uint64_t seed : {1, 2, 3}) out.push_back(root_symmetry_check(s, 6, seed));
         }
         return out;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    LawReports laws;
    std::string error;
    try {
      laws = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const LawReport* bad = nullptr;
    for (const auto& l : laws)
      if (!l.passed() && !bad) bad = &l;
    const bool ok = error.empty() && !bad && !laws.empty();
    std::printf("criterion %2d  %s  %-52s %4zu laws  %7.2fs", c.id, ok ? "PASS" : "FAIL", c.title, laws.size(), s);
    if (!error.empty()) std::printf("  error: %s", error.c_str());
    if (bad) std::printf("  %s [%s]: %s", bad->law.c_str(), bad->indices.c_str(), bad->detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
