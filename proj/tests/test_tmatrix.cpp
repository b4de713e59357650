#include <doctest.h>

#include "qgiso/rtt.hpp"
#include "qgiso/tmatrix.hpp"

using namespace qgiso;

namespace {

LaurentOverUEA poly_u(const UEAElement& x) { return LaurentOverUEA::from_poly(x, {kU}); }

const ScalarPoly u = ScalarPoly::var(kU);
const ScalarPoly h = ScalarPoly::hbar();

}  // namespace

TEST_CASE("T at n=2") {
  TMatrix T = build_T(2);
  CHECK(T.at(1, 1) == ScalarPoly(frac(1, 2)) * UEAElement::h(2, 1));
  CHECK(T.at(2, 2) == ScalarPoly(frac(-1, 2)) * UEAElement::h(2, 1));
  CHECK(T.at(1, 2) == UEAElement::e(2, 1, 2));
  CHECK(T.trace().is_zero());
  CHECK(T_entry(T, 1, 2, u) == -(h * UEAElement::e(2, 1, 2)));
}

TEST_CASE("2x2 quantum minors from the sigma-sum") {
  const int n = 3;
  TMatrix T = build_T(n);
  TMatrixFn M(T);
  for (auto [a1, a2, b1, b2] : {std::array{1, 2, 1, 2}, std::array{1, 3, 2, 3}, std::array{2, 3, 1, 2}}) {
    UEAElement want = T_entry(T, a1, b1, u) * T_entry(T, a2, b2, u + h) - T_entry(T, a2, b1, u) * T_entry(T, a1, b2, u + h);
    CHECK(residual(qminor(M, {a1, a2}, {b1, b2}), poly_u(want)).zero);
    // antisymmetric in the row tuple
    CHECK(residual(qminor(M, {a2, a1}, {b1, b2}), -poly_u(want)).zero);
  }
}

TEST_CASE("row and column expansions agree") {
  const int n = 3;
  TMatrixFn M(build_T(n));
  std::vector<int> a{1, 2, 3}, b{1, 3, 2};
  auto q = qminor(M, a, b);
  for (Expansion how : {Expansion::LastColumn, Expansion::LastRow, Expansion::FirstColumn, Expansion::FirstRow})
    CHECK(residual(qminor_expanded(M, a, b, how), q).zero);
}

TEST_CASE("quantum determinant is central") {
  for (int n : {2, 3}) {
    auto d = qdet(n);
    const auto& alg = Algebra::get(n);
    for (int g = 0; g < alg.num_gens(); ++g)
      CHECK(commutator(d, LaurentOverUEA::constant(UEAElement::gen(n, g))).is_zero());
  }
}

TEST_CASE("principal minors are monic and homogeneous") {
  for (int n : {2, 3, 4})
    for (int k = 1; k <= n; ++k) {
      auto c = P_coefficients(n, k);
      CHECK(c.size() == static_cast<size_t>(k));
      // P_k(u) = u^k - hbar (trace of the k x k corner) u^{k-1} + ...
      UEAElement tr(n);
      for (int i = 1; i <= k; ++i) tr += build_T(n).at(i, i);
      CHECK(c[k - 1] == -tr);
    }
  CHECK(principal_P(3, 0).coeff(0) == UEAElement(3, ScalarPoly(1)));
  CHECK(principal_P(3, 4).coeff(0) == UEAElement(3, ScalarPoly(1)));
}

TEST_CASE("P_2 at n=2 in terms of the Casimir") {
  CHECK(sl2_principal_minor_check().passed());
}
