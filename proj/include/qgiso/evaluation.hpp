// The evaluation homomorphism on Drinfeld currents, as truncated series over U(sl_n)[hbar].
#pragma once

#include "qgiso/psi.hpp"
#include "qgiso/report.hpp"
#include "qgiso/tmatrix.hpp"

namespace qgiso {

enum class CurrentKind { Xi, XPlus, XMinus };
const char* current_name(CurrentKind kind);

// ev of xi_k, x^+_k or x^-_k at var + shift, with K coefficients from the top
// (xi: u^0..u^{1-K}; x: u^{-1}..u^{-K})
LaurentOverUEA ev_current(int n, CurrentKind kind, int k, int K, int var = kU,
                          const ScalarPoly& shift = ScalarPoly());

// zero modes: xi_{k,0} and x^{+-}_{k,0} read off the hbar u^{-1} coefficient
UEAElement zero_mode(int n, CurrentKind kind, int k);
// coefficient of u^{-r-1} divided by hbar (xi_{k,r}, x_{k,r})
UEAElement current_mode(const LaurentOverUEA& s, int r);

int cartan_entry(int i, int j);

enum class YLaw { Y1, Y2, Y2Prime, Y3, Y4, Y6Deg0 };
const char* ylaw_name(YLaw law);

// sign = +1 / -1 selects the x^+ / x^- variant (ignored for Y1, Y4)
LawReport verify_yangian(int n, YLaw law, int i, int j, int sign, int K);
// all laws, all index pairs and signs, the zero modes and the implied higher Serre record
LawReports verify_yangian_all(int n, int K);

LawReports zero_mode_checks(int n);

// recursive forms through psi^(k-1), plus the commutator-minor identities
LawReports recursive_form_check(int n, int k, int K);

struct T11Forms {
  UEAElement from_log, closed, casimir;
};
T11Forms t11_forms(int n);
LawReports t11_compare(int n);

}  // namespace qgiso
