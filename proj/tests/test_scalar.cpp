#include <doctest.h>

#include <random>

#include "qgiso/scalar.hpp"

using namespace qgiso;

namespace {

// 1/(4^j (2j+1)!) by plain loops, for the even coefficients of sinh(x/2)/(x/2)
Rational sinhc_coeff(int m) {
  if (m % 2) return 0;
  mpz_class fact = 1, four = 1;
  for (int i = 2; i <= m + 1; ++i) fact *= i;
  for (int i = 0; i < m / 2; ++i) four *= 4;
  return Rational(1) / Rational(fact * four);
}

}  // namespace

TEST_CASE("binomial expansion of (u + hbar)^4") {
  ScalarPoly p = (ScalarPoly::var(kU) + ScalarPoly::hbar()).pow(4);
  const long binom[] = {1, 4, 6, 4, 1};
  for (int e = 0; e <= 4; ++e) CHECK(p.coeff(kU, e) == ScalarPoly(binom[e]) * ScalarPoly::hbar(4 - e));
  CHECK(p.total_degree() == 4);
}

TEST_CASE("substitution and self-aliasing addition") {
  ScalarPoly u = ScalarPoly::var(kU), h = ScalarPoly::hbar();
  ScalarPoly p = u * u - h;
  CHECK(p.substitute({{kU, h + 1}}) == h * h + h + 1);
  ScalarPoly q = p;
  q += q;
  CHECK(q == ScalarPoly(2) * p);
  q -= q;
  CHECK(q.is_zero());
}

TEST_CASE("sinhc series against its closed coefficients") {
  auto s = sinhc_series(kX, 12);
  for (int m = 0; m < 12; ++m) CHECK(s[m] == sinhc_coeff(m));
}

TEST_CASE("square-root G series") {
  auto g = g_series(12);
  // sqrt(1 + x^2/24 + x^4/1920 + ...) = 1 + x^2/48 + x^4/23040 + ...
  CHECK(g.plus[0] == 1);
  CHECK(g.plus[1] == 0);
  CHECK(g.plus[2] == frac(1, 48));
  CHECK(g.plus[4] == frac(1, 23040));
  CHECK(g.plus * g.plus == sinhc_series(kX, 12));
  CHECK(g.minus == g.plus.scale_arg(-1));
  auto f = factorization_check(g.plus, g.minus, 12);
  CHECK(f.holds());
}

TEST_CASE("factorization check rejects a broken G") {
  auto g = g_series(8);
  auto bad = g.plus;
  bad[3] = 1;
  CHECK_FALSE(factorization_check(bad, bad.scale_arg(-1), 8).holds());
}

TEST_CASE("series maps are mutually inverse") {
  TruncSeries x = TruncSeries::identity(kX, 10);
  TruncSeries one = TruncSeries::constant(kX, 10, 1);
  auto e = series_map(frac(1, 3) * x, SeriesFn::Exp);
  CHECK(series_map(e, SeriesFn::Log) == frac(1, 3) * x);
  auto geo = series_map(one - x, SeriesFn::Inverse);
  for (int i = 0; i < 10; ++i) CHECK(geo[i] == 1);
  auto r = series_map(one + x, SeriesFn::Sqrt);
  CHECK(r * r == one + x);
}

TEST_CASE("rational roots") {
  QPoly p = QPoly({frac(-1, 2), 1}) * QPoly({3, 1}) * QPoly({-2, 1}) * QPoly({-2, 1});
  auto r = rational_roots(p, true);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == -3);
  CHECK(r[1] == frac(1, 2));
  CHECK(r[2] == 2);
  CHECK(r[3] == 2);
  QPoly irr({-2, 0, 1});
  CHECK_THROWS_AS(rational_roots(irr, true), incomplete_splitting);
  CHECK(rational_roots(irr * QPoly({1, 1}), false) == std::vector<Rational>{-1});
}

TEST_CASE("rational roots of random split polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> want;
    QPoly p({1});
    for (int i = 0; i < 4; ++i) {
      want.push_back(frac(num(rng), den(rng)));
      p = p * QPoly({-want.back(), 1});
    }
    std::sort(want.begin(), want.end());
    CHECK(rational_roots(p, true) == want);
  }
}

TEST_CASE("polynomial gcd and division") {
  QPoly a = QPoly({1, 1}) * QPoly({-1, 1});
  QPoly b = QPoly({1, 1}) * QPoly({2, 1});
  CHECK(QPoly::gcd(a, b).monic() == QPoly({1, 1}));
  auto [q, r] = QPoly::divmod(a, QPoly({1, 1}));
  CHECK(q == QPoly({-1, 1}));
  CHECK(r.is_zero());
}
