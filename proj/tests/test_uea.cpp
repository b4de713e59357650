#include <doctest.h>

#include <random>

#include "qgiso/spectra.hpp"
#include "qgiso/uea.hpp"

using namespace qgiso;

namespace {

UEAElement random_element(std::mt19937_64& rng, int n, int len) {
  const auto& alg = Algebra::get(n);
  std::uniform_int_distribution<int> g(0, alg.num_gens() - 1), c(-3, 3);
  UEAElement x(n, ScalarPoly(c(rng)));
  for (int t = 0; t < 3; ++t) {
    UEAElement m(n, ScalarPoly(c(rng)));
    for (int i = 0; i < len; ++i) m = m * UEAElement::gen(n, g(rng));
    x += m;
  }
  return x;
}

}  // namespace

TEST_CASE("PBW straightening at n=2") {
  const int n = 2;
  auto e = UEAElement::e(n, 1, 2), f = UEAElement::e(n, 2, 1), h = UEAElement::h(n, 1);
  CHECK(bracket(e, f) == h);
  CHECK(bracket(h, e) == ScalarPoly(2) * e);
  CHECK(bracket(h, f) == ScalarPoly(-2) * f);
  // lowering before Cartan before raising
  CHECK(e * f == f * e + h);
  CHECK((f * e).terms().size() == 1);
  CHECK((e * h).terms().size() == 2);
}

TEST_CASE("products agree with matrix products on the defining and tensor representations") {
  std::mt19937_64 rng(17);
  for (int n : {2, 3}) {
    Rep d = defining_rep(n);
    Rep t = tensor_rep(d, d);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_element(rng, n, 2), y = random_element(rng, n, 3);
      for (const Rep* r : {&d, &t}) {
        auto rx = rep_of_element(*r, x, 1).coeff(0), ry = rep_of_element(*r, y, 1).coeff(0);
        CHECK(rep_of_element(*r, x * y, 1).coeff(0) == rx * ry);
      }
    }
  }
}

TEST_CASE("associativity and the Jacobi identity on random elements") {
  std::mt19937_64 rng(23);
  const int n = 3;
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_element(rng, n, 2), b = random_element(rng, n, 1), c = random_element(rng, n, 2);
    CHECK((a * b) * c == a * (b * c));
    auto j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("coweights are dual to simple roots") {
  for (int n : {2, 3, 4})
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        auto e = UEAElement::e(n, j, j + 1);
        CHECK(bracket(coweight(i, n), e) == ScalarPoly(i == j ? 1 : 0) * e);
      }
  CHECK(coweight(1, 2) == ScalarPoly(frac(1, 2)) * UEAElement::h(2, 1));
  CHECK(coweight(0, 3).is_zero());
  CHECK(coweight(3, 3).is_zero());
}

TEST_CASE("coefficient extraction in a free variable") {
  const int n = 2;
  ScalarPoly u = ScalarPoly::var(kU);
  auto x = (u * u) * UEAElement::e(n, 1, 2) + ScalarPoly::hbar() * UEAElement::h(n, 1);
  CHECK(x.degree_in(kU) == 2);
  CHECK(x.coeff(kU, 2) == UEAElement::e(n, 1, 2));
  CHECK(x.coeff(kU, 0) == ScalarPoly::hbar() * UEAElement::h(n, 1));
  CHECK(x.substitute({{kU, ScalarPoly(0)}}) == x.coeff(kU, 0));
}
