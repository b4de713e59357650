#include <doctest.h>

#include <random>

#include "qgiso/linalg.hpp"

using namespace qgiso;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  std::uniform_int_distribution<int> d(-4, 4);
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

QMatrix eval_poly(const QPoly& p, const QMatrix& a) {
  QMatrix acc(a.rows(), a.cols());
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + p.coeffs()[i] * QMatrix::identity(a.rows());
  return acc;
}

}  // namespace

TEST_CASE("inverse and nullspace on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a = random_matrix(rng, 4, 4);
    if (rank(a) == 4) {
      CHECK(inverse(a) * a == QMatrix::identity(4));
      CHECK(a * inverse(a) == QMatrix::identity(4));
    } else {
      CHECK_THROWS_AS(inverse(a), domain_error);
    }
    QMatrix b = random_matrix(rng, 3, 5);
    QMatrix ns = nullspace(b);
    CHECK((b * ns).is_zero());
    CHECK(rank(b) + ns.cols() == 5);
  }
}

TEST_CASE("characteristic polynomial") {
  // companion matrix of t^3 - 2t^2 + t/2 - 5
  QMatrix c(3, 3);
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = 5;
  c(1, 2) = frac(-1, 2);
  c(2, 2) = 2;
  CHECK(charpoly(c) == QPoly({-5, frac(1, 2), -2, 1}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a = random_matrix(rng, 4, 4);
    auto p = charpoly(a);
    CHECK(p.degree() == 4);
    CHECK(-p.coeffs()[3] == a.trace());
    CHECK(eval_poly(p, a).is_zero());  // Cayley-Hamilton
  }
}

TEST_CASE("kron and commutator") {
  QMatrix x(2, 2);
  x(0, 1) = 1;
  QMatrix k = kron(x, QMatrix::identity(2));
  CHECK(k(0, 2) == 1);
  CHECK(k(1, 3) == 1);
  CHECK(k.trace() == 0);
  CHECK(commutator(x, x.transpose()) == QMatrix::diag({1, -1}));
}

TEST_CASE("hbar matrices: exact division and exponentials") {
  QMatrix h = QMatrix::diag({1, -1});
  HbarMatrix k = exp_hbar(h, frac(1, 2), 8), kinv = exp_hbar(h, frac(-1, 2), 8);
  CHECK(k * kinv == HbarMatrix::identity(2, 8));
  // e^{hbar/2} on the first diagonal entry
  Rational c = 1;
  for (int p = 0; p < 8; ++p) {
    CHECK(k.coeff(p)(0, 0) == c);
    c /= 2 * (p + 1);
  }
  HbarMatrix d = k - kinv;
  CHECK(d.valuation() == 1);
  CHECK(d.shift_down(1).order() == 7);
  CHECK_THROWS_AS(k.shift_down(1), domain_error);
  CHECK(HbarMatrix(2, 4).first_nonzero().empty());
  CHECK(k.first_nonzero() == "hbar^0 (1,1): 1");
}
