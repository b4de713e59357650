#include <doctest.h>

#include "qgiso/laurent.hpp"

using namespace qgiso;

namespace {

LaurentOverUEA poly_u(const UEAElement& x) { return LaurentOverUEA::from_poly(x, {kU}); }

}  // namespace

TEST_CASE("inverting u - hbar a gives the geometric series") {
  const int n = 2;
  const UEAElement a = UEAElement::h(n, 1);
  auto s = poly_u(UEAElement(n, ScalarPoly::var(kU)) - ScalarPoly::hbar() * a);
  const int K = 6;
  auto inv = s.invert_monic(K);
  UEAElement power(n, ScalarPoly(1));
  for (int m = 0; m < K; ++m) {
    CHECK(inv.coeff(-1 - m) == ScalarPoly::hbar(m) * power);
    power = power * a;
  }
  auto one = s * inv;
  CHECK(one.coeff(0) == UEAElement(n, ScalarPoly(1)));
  for (int p = -1; p > -K; --p) CHECK(one.coeff(p).is_zero());
}

TEST_CASE("inverse is two-sided for noncommuting coefficients") {
  const int n = 2;
  auto u = UEAElement(n, ScalarPoly::var(kU));
  auto e = UEAElement::e(n, 1, 2), f = UEAElement::e(n, 2, 1);
  auto s = poly_u(u * u + ScalarPoly::hbar() * (u * e) + ScalarPoly::hbar(2) * f);
  auto inv = s.invert_monic(5);
  auto l = inv * s, r = s * inv;
  CHECK(l.coeff(0) == UEAElement(n, ScalarPoly(1)));
  CHECK(r.coeff(0) == UEAElement(n, ScalarPoly(1)));
  for (int p = -1; p >= -3; --p) {
    CHECK(l.coeff(p).is_zero());
    CHECK(r.coeff(p).is_zero());
  }
}

TEST_CASE("shift and truncation windows") {
  const int n = 2;
  auto u = UEAElement(n, ScalarPoly::var(kU));
  auto inv = poly_u(u).invert_monic(4);
  CHECK(inv.coeff(-1) == UEAElement(n, ScalarPoly(1)));
  // (u + hbar)^{-1} = u^{-1} - hbar u^{-2} + hbar^2 u^{-3} - ...
  auto shifted = poly_u(u).shift(kU, ScalarPoly::hbar()).invert_monic(4);
  CHECK(shifted.coeff(-3) == UEAElement(n, ScalarPoly::hbar(2)));
  CHECK(shifted.coeff(-2) == UEAElement(n, -ScalarPoly::hbar()));
  Window w = shifted.window(kU);
  CHECK_FALSE(w.exact());
  CHECK(w.top == -1);
  CHECK(w.low == -4);
  auto t = shifted.truncated(kU, -2);
  CHECK(t.window(kU).low == -2);
  CHECK_THROWS_AS(t.coeff(-3), truncation_error);
}

TEST_CASE("residual reports the first nonzero coefficient") {
  const int n = 2;
  auto u = UEAElement(n, ScalarPoly::var(kU));
  auto a = poly_u(u * u + UEAElement::e(n, 1, 2));
  auto b = poly_u(u * u);
  auto r = residual(a, b);
  CHECK_FALSE(r.zero);
  CHECK(r.first_nonzero.find("e12") != std::string::npos);
  CHECK(residual(a, a).zero);
}

TEST_CASE("two-variable commutator of central series vanishes") {
  const int n = 2;
  auto x = LaurentOverUEA::from_poly(UEAElement(n, ScalarPoly::var(kU) * ScalarPoly::var(kV)), {kU, kV});
  auto y = LaurentOverUEA::from_poly(UEAElement(n, ScalarPoly::var(kV)) + UEAElement::h(n, 1), {kV});
  CHECK(commutator(x, y).is_zero());
}
