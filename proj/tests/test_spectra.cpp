#include <doctest.h>

#include "qgiso/spectra.hpp"
#include "qgiso/tmatrix.hpp"

using namespace qgiso;

TEST_CASE("defining and tensor representations") {
  Rep d = defining_rep(2);
  CHECK(d.h(1) == QMatrix::diag({1, -1}));
  CHECK(commutator(d.e(1, 2), d.e(2, 1)) == d.h(1));
  Rep t = tensor_rep(d, d);
  CHECK(t.dim == 4);
  // h acts on e_a (x) e_b by h_a + h_b
  CHECK(t.h(1) == QMatrix::diag({2, 0, 0, -2}));
  CHECK_NOTHROW(validate_rep(rep_by_name(3, "tensor2")));
  Rep broken = d;
  broken.images[Algebra::get(2).h(1)] = QMatrix::diag({1, 1});
  CHECK_THROWS_AS(validate_rep(broken), std::logic_error);
}

TEST_CASE("images of enveloping algebra elements") {
  const int n = 2;
  Rep d = defining_rep(n);
  auto e = UEAElement::e(n, 1, 2), f = UEAElement::e(n, 2, 1), h = UEAElement::h(n, 1);
  CHECK(rep_of_element(d, e * f, 1).coeff(0) == QMatrix::diag({1, 0}));
  CHECK(rep_of_element(d, UEAElement(n, ScalarPoly(1)), 1).coeff(0) == QMatrix::identity(2));
  auto C = e * f + f * e + ScalarPoly(frac(1, 2)) * (h * h);
  CHECK(rep_of_element(d, ScalarPoly(2) * C + UEAElement(n, ScalarPoly(1)), 1).coeff(0) == QMatrix::diag({4, 4}));
  auto m = rep_of_element(d, ScalarPoly::hbar(2) * h, 4);
  CHECK(m.coeff(2) == d.h(1));
  CHECK(m.valuation() == 2);
  CHECK(rep_of_element(d, ScalarPoly::hbar(5) * h, 4).is_zero());
  CHECK_THROWS_AS(rep_of_element(d, ScalarPoly::var(kU) * h, 2), std::invalid_argument);
}

TEST_CASE("simultaneous eigenbasis") {
  auto eb = simultaneous_eigenbasis({QMatrix::diag({frac(1, 2), frac(-1, 2)})});
  CHECK(eb.basis == QMatrix::identity(2));
  CHECK(eb.eigenvalues[0] == std::vector<Rational>{frac(1, 2), frac(-1, 2)});

  QMatrix nil(2, 2);
  nil(0, 1) = 1;
  CHECK_THROWS_AS(simultaneous_eigenbasis({nil}), spectrum_error);
  QMatrix irr(2, 2);
  irr(0, 1) = 2;
  irr(1, 0) = 1;
  CHECK_THROWS_AS(simultaneous_eigenbasis({irr}), spectrum_error);
  CHECK_THROWS_AS(simultaneous_eigenbasis({nil, nil.transpose()}), spectrum_error);

  // a symmetric pair sharing eigenvectors (1,1), (1,-1)
  QMatrix a(2, 2), b(2, 2);
  a(0, 1) = a(1, 0) = 1;
  b(0, 0) = b(1, 1) = 3;
  b(0, 1) = b(1, 0) = 2;
  auto e2 = simultaneous_eigenbasis({a, b});
  QMatrix D = e2.basis_inv * b * e2.basis;
  CHECK(D.is_diagonal());
  CHECK(D.trace() == 6);
}

TEST_CASE("spectrum of the defining representation at n=2") {
  auto s = spectrum_table(defining_rep(2));
  CHECK(s.eb.basis == QMatrix::identity(2));
  for (int v = 0; v < 2; ++v) CHECK(s.roots[v][2] == std::vector<Rational>{-1, 1});
  CHECK(s.roots[0][1] == std::vector<Rational>{frac(1, 2)});
  CHECK(s.roots[1][1] == std::vector<Rational>{frac(-1, 2)});
  CHECK(s.eigen_poly[0][2] == QPoly({-1, 0, 1}));
}

TEST_CASE("spectrum invariants on every supported representation") {
  for (int n : {2, 3, 4})
    for (const char* name : {"defining", "tensor2"}) {
      if (n == 4 && std::string(name) == "tensor2") continue;
      auto s = spectrum_table(rep_by_name(n, name));
      for (int v = 0; v < s.dim(); ++v)
        for (int k = 1; k <= n; ++k) {
          const auto& r = s.roots[v][k];
          CHECK(r.size() == static_cast<size_t>(k));
          for (size_t i = 1; i < r.size(); ++i) CHECK(r[i - 1] < r[i]);
          for (const auto& x : r) CHECK(s.eigen_poly[v][k].eval(x) == 0);
        }
      // P coefficients are diagonal in the eigenbasis
      for (int k = 1; k <= n; ++k)
        for (const auto& c : P_coefficients(n, k)) CHECK(rep_of_element(s.rep_eb, c, 1).coeff(0).is_diagonal());
    }
}

TEST_CASE("partial fractions") {
  auto s2 = spectrum_table(defining_rep(2));
  for (int sign : {1, -1}) CHECK(verify_partial_fractions(s2, 1, 6, sign).passed());
  auto s3 = spectrum_table(defining_rep(3));
  CHECK(verify_partial_fractions(s3, 1, 4, -1).passed());
  CHECK(verify_partial_fractions(s3, 2, 4, 1).passed());
  // residue of the u^{-1} coefficient is the e12 image
  auto res = residues_from_minors(s2, 1, 1, 4);
  REQUIRE(res.B.size() == 1);
  CHECK(res.B[0] == HbarMatrix(s2.rep_eb.e(1, 2), 4));
}

TEST_CASE("a root diagonal that is not a function of the spectrum is rejected") {
  auto s = spectrum_table(defining_rep(3));
  TMatrixFn T(build_T(3));
  // T_21 mixes the first two basis vectors, so diag(1, 0, 0) cannot commute with it
  CHECK_THROWS_AS(minor_at_root(s, qminor(T, {2}, {1}), {1, 0, 0}, 4), commutation_error);
  CHECK_NOTHROW(minor_at_root(s, qminor(T, {2}, {1}), {1, 1, 0}, 4));
}
