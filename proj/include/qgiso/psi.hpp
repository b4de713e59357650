// psi-operators: bordered principal minors divided by the principal minor.
#pragma once

#include "qgiso/report.hpp"
#include "qgiso/tmatrix.hpp"

namespace qgiso {

// psi^(k)(M) of size M.size() - k, entries to depth K in u^{-1}; psi^(0)(M) = M
SeriesMatrix psi_operator(const MatrixFn& M, int k, int K);
SeriesMatrix psi_operator(int n, int k, int K);

enum class PsiLaw { Rtt, Iteration, DetIdentity };
const char* psi_law_name(PsiLaw law);

// Rtt uses k; Iteration compares psi^(k)(psi^(l)) with psi^(k+l); DetIdentity uses l on T itself
LawReports verify_psi(int n, PsiLaw law, int k, int l, int K);

// the determinant identity for a matrix satisfying RTT, for all a, b >= l+2
LawReports det_identity_check(const MatrixFn& phi, int l, const std::string& label);

}  // namespace qgiso
