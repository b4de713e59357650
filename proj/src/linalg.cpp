#include "qgiso/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgiso {

QMatrix::QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

QMatrix QMatrix::identity(int d) {
  QMatrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diag(const std::vector<Rational>& d) {
  QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool QMatrix::is_diagonal() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool QMatrix::is_scalar() const {
  if (r_ != c_ || !is_diagonal()) return false;
  for (int i = 1; i < r_; ++i)
    if ((*this)(i, i) != (*this)(0, 0)) return false;
  return true;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::column(int j) const {
  QMatrix v(r_, 1);
  for (int i = 0; i < r_; ++i) v(i, 0) = (*this)(i, j);
  return v;
}

QMatrix QMatrix::operator-() const {
  QMatrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("QMatrix: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("QMatrix: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < b.c_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

QMatrix operator*(const Rational& c, QMatrix a) {
  for (auto& x : a.a_) x *= c;
  return a;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

namespace {

// in-place reduced row echelon form; returns pivot columns
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int d = a.rows();
  QMatrix aug(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug(i, j) = a(i, j);
    aug(i, d + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < d || piv[d - 1] != d - 1) throw domain_error("inverse: singular matrix");
  QMatrix inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv(i, j) = aug(i, d + j);
  return inv;
}

QMatrix nullspace(const QMatrix& a) {
  QMatrix m = a;
  auto piv = rref(m);
  std::vector<int> is_pivot(a.cols(), -1);
  for (size_t r = 0; r < piv.size(); ++r) is_pivot[piv[r]] = static_cast<int>(r);
  std::vector<int> free;
  for (int j = 0; j < a.cols(); ++j)
    if (is_pivot[j] < 0) free.push_back(j);
  QMatrix ns(a.cols(), static_cast<int>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    ns(free[f], f) = 1;
    for (size_t r = 0; r < piv.size(); ++r) ns(piv[r], f) = -m(r, free[f]);
  }
  return ns;
}

int rank(const QMatrix& a) {
  QMatrix m = a;
  return static_cast<int>(rref(m).size());
}

QMatrix hstack(const std::vector<QMatrix>& blocks) {
  if (blocks.empty()) return {};
  int cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  QMatrix m(blocks[0].rows(), cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

QPoly charpoly(const QMatrix& a) {
  const int d = a.rows();
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  QMatrix m(d, d);
  const QMatrix id = QMatrix::identity(d);
  for (int k = 1; k <= d; ++k) {
    m = a * m + c[d - k + 1] * id;
    c[d - k] = -(a * m).trace() / k;
  }
  return QPoly(c);
}

HbarMatrix::HbarMatrix(int dim, int order) : d_(dim), c_(order, QMatrix(dim, dim)) {}

HbarMatrix::HbarMatrix(const QMatrix& constant, int order) : HbarMatrix(constant.rows(), order) {
  if (order > 0) c_[0] = constant;
}

HbarMatrix HbarMatrix::diagonal(const std::vector<HbarSeries>& d) {
  int order = d.empty() ? 0 : d[0].order();
  for (const auto& s : d) order = std::min(order, s.order());
  HbarMatrix m(static_cast<int>(d.size()), order);
  for (size_t v = 0; v < d.size(); ++v)
    for (int p = 0; p < order; ++p) m.c_[p](v, v) = d[v][p];
  return m;
}

bool HbarMatrix::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const QMatrix& m) { return m.is_zero(); });
}

int HbarMatrix::valuation() const {
  for (int p = 0; p < order(); ++p)
    if (!c_[p].is_zero()) return p;
  return order();
}

HbarMatrix HbarMatrix::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("HbarMatrix: cannot extend truncation order");
  HbarMatrix m = *this;
  m.c_.resize(order);
  return m;
}

HbarMatrix HbarMatrix::shift_down(int s) const {
  if (s > order()) throw std::invalid_argument("HbarMatrix: shift beyond truncation order");
  for (int p = 0; p < s; ++p)
    if (!c_[p].is_zero()) throw domain_error("exact hbar division failed at hbar^" + std::to_string(p));
  HbarMatrix m(d_, order() - s);
  for (int p = s; p < order(); ++p) m.c_[p - s] = c_[p];
  return m;
}

HbarMatrix HbarMatrix::shift_up(int s) const {
  HbarMatrix m(d_, order());
  for (int p = 0; p + s < order(); ++p) m.c_[p + s] = c_[p];
  return m;
}

std::string HbarMatrix::first_nonzero() const {
  for (int p = 0; p < order(); ++p)
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (sgn(c_[p](i, j)) != 0)
          return "hbar^" + std::to_string(p) + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 "): " + c_[p](i, j).get_str();
  return "";
}

HbarMatrix HbarMatrix::operator-() const {
  HbarMatrix m = *this;
  for (auto& x : m.c_) x = -x;
  return m;
}

HbarMatrix operator+(const HbarMatrix& a, const HbarMatrix& b) {
  HbarMatrix m(a.d_, std::min(a.order(), b.order()));
  for (int p = 0; p < m.order(); ++p) m.c_[p] = a.c_[p] + b.c_[p];
  return m;
}

HbarMatrix operator-(const HbarMatrix& a, const HbarMatrix& b) {
  HbarMatrix m(a.d_, std::min(a.order(), b.order()));
  for (int p = 0; p < m.order(); ++p) m.c_[p] = a.c_[p] - b.c_[p];
  return m;
}

HbarMatrix operator*(const HbarMatrix& a, const HbarMatrix& b) {
  HbarMatrix m(a.d_, std::min(a.order(), b.order()));
  for (int p = 0; p < m.order(); ++p) {
    if (a.c_[p].is_zero()) continue;
    for (int q = 0; p + q < m.order(); ++q)
      if (!b.c_[q].is_zero()) m.c_[p + q] += a.c_[p] * b.c_[q];
  }
  return m;
}

HbarMatrix operator*(const HbarSeries& s, const HbarMatrix& a) {
  HbarMatrix m(a.d_, std::min(a.order(), s.order()));
  for (int p = 0; p < m.order(); ++p) {
    if (sgn(s[p]) == 0) continue;
    for (int q = 0; p + q < m.order(); ++q) m.c_[p + q] += s[p] * a.c_[q];
  }
  return m;
}

HbarMatrix operator*(const Rational& c, const HbarMatrix& a) {
  HbarMatrix m = a;
  for (auto& x : m.c_) x = c * x;
  return m;
}

HbarMatrix commutator(const HbarMatrix& a, const HbarMatrix& b) { return a * b - b * a; }

HbarMatrix exp_hbar(const QMatrix& x, const Rational& s, int order) {
  HbarMatrix m(x.rows(), order);
  QMatrix term = QMatrix::identity(x.rows());
  for (int p = 0; p < order; ++p) {
    m.coeff(p) = term;
    term = (s / (p + 1)) * (term * x);
  }
  return m;
}

}  // namespace qgiso
