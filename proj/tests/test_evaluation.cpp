#include <doctest.h>

#include "qgiso/evaluation.hpp"

using namespace qgiso;

TEST_CASE("ev(x+) at n=2 is (u - hbar(h-1)/2)^{-1} hbar e12") {
  const int n = 2, K = 6;
  auto x = ev_current(n, CurrentKind::XPlus, 1, K);
  const UEAElement one(n, ScalarPoly(1));
  const UEAElement a = ScalarPoly(frac(1, 2)) * (UEAElement::h(n, 1) - one);
  UEAElement power = one;
  for (int m = 0; m < K; ++m) {
    CHECK(x.coeff(-1 - m) == ScalarPoly::hbar(m + 1) * (power * UEAElement::e(n, 1, 2)));
    power = power * a;
  }
}

TEST_CASE("zero modes") {
  for (int n : {2, 3})
    for (int k = 1; k < n; ++k) {
      CHECK(zero_mode(n, CurrentKind::Xi, k) == UEAElement::h(n, k));
      CHECK(zero_mode(n, CurrentKind::XPlus, k) == UEAElement::e(n, k, k + 1));
      CHECK(zero_mode(n, CurrentKind::XMinus, k) == UEAElement::e(n, k + 1, k));
    }
  CHECK(all_passed(zero_mode_checks(3)));
}

TEST_CASE("xi starts at 1") {
  auto xi = ev_current(3, CurrentKind::Xi, 2, 4);
  CHECK(xi.coeff(0) == UEAElement(3, ScalarPoly(1)));
  CHECK(xi.coeff(-1) == ScalarPoly::hbar() * UEAElement::h(3, 2));
}

TEST_CASE("Yangian relations at n=2") {
  for (YLaw law : {YLaw::Y1, YLaw::Y4}) CHECK(verify_yangian(2, law, 1, 1, 0, 6).passed());
  for (YLaw law : {YLaw::Y2, YLaw::Y2Prime, YLaw::Y3})
    for (int s : {1, -1}) CHECK(verify_yangian(2, law, 1, 1, s, 6).passed());
}

TEST_CASE("Yangian relations at n=3, mixed nodes") {
  CHECK(verify_yangian(3, YLaw::Y2, 1, 2, 1, 4).passed());
  CHECK(verify_yangian(3, YLaw::Y3, 2, 1, -1, 4).passed());
  CHECK(verify_yangian(3, YLaw::Y4, 1, 2, 0, 4).passed());
  CHECK(verify_yangian(3, YLaw::Y6Deg0, 1, 2, 1, 4).passed());
}

TEST_CASE("recursive forms through psi") {
  CHECK(all_passed(recursive_form_check(3, 2, 4)));
}

TEST_CASE("three forms of t11") {
  CHECK(all_passed(t11_compare(3)));
  // at n=2 the closed form is -(hbar/2)(e12 e21 + e21 e12)
  auto f = t11_forms(2);
  auto e = UEAElement::e(2, 1, 2), g = UEAElement::e(2, 2, 1);
  CHECK(f.closed == ScalarPoly(frac(-1, 2)) * ScalarPoly::hbar() * (e * g + g * e));
  CHECK(f.from_log == f.closed);
}
