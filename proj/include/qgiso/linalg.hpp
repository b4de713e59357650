// Dense exact linear algebra over Q, and matrices over Q[hbar]/(hbar^N).
#pragma once

#include <string>
#include <vector>

#include "qgiso/scalar.hpp"

namespace qgiso {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int d);
  static QMatrix diag(const std::vector<Rational>& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  // true if the matrix is a multiple of the identity
  bool is_scalar() const;
  Rational trace() const;
  QMatrix transpose() const;
  QMatrix column(int j) const;

  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, QMatrix a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix kron(const QMatrix& a, const QMatrix& b);
// throws domain_error when singular
QMatrix inverse(const QMatrix& a);
// columns spanning the kernel, from the reduced row echelon form (free variable set to 1)
QMatrix nullspace(const QMatrix& a);
int rank(const QMatrix& a);
QMatrix hstack(const std::vector<QMatrix>& blocks);
// det(t - A), Faddeev-LeVerrier
QPoly charpoly(const QMatrix& a);

// Sum_p c[p] hbar^p, known modulo hbar^order.
class HbarMatrix {
 public:
  HbarMatrix() = default;
  HbarMatrix(int dim, int order);
  HbarMatrix(const QMatrix& constant, int order);
  static HbarMatrix identity(int dim, int order) { return HbarMatrix(QMatrix::identity(dim), order); }
  // diagonal matrix with per-vector hbar series on the diagonal
  static HbarMatrix diagonal(const std::vector<HbarSeries>& d);

  int dim() const { return d_; }
  int order() const { return static_cast<int>(c_.size()); }
  const QMatrix& coeff(int p) const { return c_[p]; }
  QMatrix& coeff(int p) { return c_[p]; }

  bool is_zero() const;
  int valuation() const;  // order() when zero
  HbarMatrix truncated(int order) const;
  // exact division by hbar^s; throws domain_error if a dropped coefficient is nonzero
  HbarMatrix shift_down(int s) const;
  HbarMatrix shift_up(int s) const;
  // "hbar^p (i,j)" of the first nonzero coefficient, empty when zero
  std::string first_nonzero() const;

  HbarMatrix operator-() const;
  friend HbarMatrix operator+(const HbarMatrix& a, const HbarMatrix& b);
  friend HbarMatrix operator-(const HbarMatrix& a, const HbarMatrix& b);
  friend HbarMatrix operator*(const HbarMatrix& a, const HbarMatrix& b);
  friend HbarMatrix operator*(const HbarSeries& s, const HbarMatrix& a);
  friend HbarMatrix operator*(const Rational& c, const HbarMatrix& a);
  friend bool operator==(const HbarMatrix& a, const HbarMatrix& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

 private:
  int d_ = 0;
  std::vector<QMatrix> c_;
};

HbarMatrix commutator(const HbarMatrix& a, const HbarMatrix& b);
// exp(s X) for a constant matrix X and a rational s, mod hbar^order: sum (s hbar X)^m / m!
HbarMatrix exp_hbar(const QMatrix& x, const Rational& s, int order);

}  // namespace qgiso
