#include <doctest.h>

#include "qgiso/psi.hpp"

using namespace qgiso;

TEST_CASE("psi^(0) is T itself") {
  const int n = 3;
  TMatrix T = build_T(n);
  auto psi = psi_operator(n, 0, 4);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      CHECK(residual(psi.entry(i, j), LaurentOverUEA::from_poly(T_entry(T, i, j, ScalarPoly::var(kU)), {kU})).zero);
}

TEST_CASE("leading coefficients of psi^(1) at n=3") {
  // off the diagonal: psi_ij = -hbar T_{1+i,1+j} - hbar^2 T_{1+i,1} T_{1,1+j} u^{-1} + O(u^{-2})
  const int n = 3;
  TMatrix T = build_T(n);
  auto psi = psi_operator(n, 1, 4);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    CHECK(psi.entry(i, j).coeff(1).is_zero());
    CHECK(psi.entry(i, j).coeff(0) == -(ScalarPoly::hbar() * T.at(1 + i, 1 + j)));
    CHECK(psi.entry(i, j).coeff(-1) == -(ScalarPoly::hbar(2) * (T.at(1 + i, 1) * T.at(1, 1 + j))));
  }
  CHECK(psi.entry(1, 1).coeff(1) == UEAElement(n, ScalarPoly(1)));
}

TEST_CASE("psi-operator laws") {
  CHECK(all_passed(verify_psi(3, PsiLaw::Rtt, 1, 0, 4)));
  CHECK(all_passed(verify_psi(3, PsiLaw::DetIdentity, 0, 1, 4)));
  CHECK(all_passed(verify_psi(4, PsiLaw::Rtt, 2, 0, 3)));
}

TEST_CASE("psi levels out of range") {
  CHECK_THROWS_AS(psi_operator(3, 2, 4), std::out_of_range);
  CHECK_THROWS_AS(verify_psi(3, PsiLaw::Iteration, 1, 1, 4), std::out_of_range);
}
