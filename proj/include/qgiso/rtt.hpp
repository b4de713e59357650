// R-matrix laws for T(u), commutation with quantum minors, and the Gelfand-Tsetlin subalgebra.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgiso/report.hpp"
#include "qgiso/tmatrix.hpp"

namespace qgiso {

enum class RttLaw { Pairwise, Entrywise, Multi, Antisym, CN };
const char* rtt_law_name(RttLaw law);

// Dense operator on (C^n)^{(x)N} with U(sl_n) entries.
struct TensorOp {
  int n = 0, N = 0, D = 0;
  std::vector<UEAElement> a;  // row-major D x D
  TensorOp(int n, int N);
  UEAElement& at(int I, int J) { return a[static_cast<size_t>(I) * D + J]; }
  const UEAElement& at(int I, int J) const { return a[static_cast<size_t>(I) * D + J]; }
  int swap_legs(int I, int p, int q) const;  // legs are 0-based
  int leg(int I, int p) const;
};

// R_pq(x) = x Id + hbar P_pq applied on the left or right (legs 0-based)
TensorOp apply_R_left(const TensorOp& M, int p, int q, const ScalarPoly& x);
TensorOp apply_R_right(const TensorOp& M, int p, int q, const ScalarPoly& x);
// T_1(u_1) ... T_N(u_N) and the reversed product, with u_a = args[a]
TensorOp ordered_T_product(const TMatrix& T, const std::vector<ScalarPoly>& args, bool reversed);
// R(u_1..u_N) = R_{N-1,N} (R_{N-2,N} R_{N-2,N-1}) ... (R_{1N} ... R_{12}) applied to M
TensorOp apply_multi_R_left(const TensorOp& M, const std::vector<ScalarPoly>& args);
TensorOp apply_multi_R_right(const TensorOp& M, const std::vector<ScalarPoly>& args);

// R(u_1..u_N) as a scalar matrix, in either of its two factorized forms
std::vector<ScalarPoly> multi_R_matrix(int n, const std::vector<ScalarPoly>& args, bool second_form);
std::vector<ScalarPoly> antisymmetrizer(int n, int N);
ScalarPoly c_N(int N);

LawReports verify_rtt_family(const TMatrix& T, RttLaw law, int N = 2);
LawReports verify_rtt_family(RttLaw law, int n, int N = 2);

enum class MinorLaw { PropFirst, PropSecond, Corollary };
const char* minor_law_name(MinorLaw law);

struct MinorCase {
  int k = 1, l = 1;  // entry T_kl(u); for the corollary, positions i, j into the tuples
  std::vector<int> a, b;
};

LawReport check_minor_case(const TMatrix& T, MinorLaw law, const MinorCase& c);
// every k, l and every pair of tuples in {1..n}^N
LawReports verify_minor_comm(const TMatrix& T, MinorLaw law, int N);
// random cases drawn with the given seed
LawReports verify_minor_comm_sample(const TMatrix& T, MinorLaw law, int N, int count, uint64_t seed);

// [c^(k)_j, c^(k')_j'] = 0 for all pairs; [c^(n)_j, g] = 0 for generators g when with_center
LawReports gt_subalgebra_checks(int n, bool with_center = true);

// P_2(u) at n = 2 against u^2 - (hbar/2)^2 (2C + 1), C = e12 e21 + e21 e12 + h^2/2
LawReport sl2_principal_minor_check();

}  // namespace qgiso
