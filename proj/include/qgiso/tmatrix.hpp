// The matrix T(u) = u Id - hbar T over U(sl_n), quantum minors and principal minors.
#pragma once

#include <memory>
#include <vector>

#include "qgiso/laurent.hpp"

namespace qgiso {

struct TMatrix {
  int n = 0;
  std::vector<UEAElement> entries;  // row-major, 1-based access through at()
  bool modified = false;            // set when an entry was altered after construction
  const UEAElement& at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
  UEAElement& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }
  UEAElement trace() const;
};

TMatrix build_T(int n);

// T_ij(arg) = arg delta_ij - hbar T_ij, with arg any scalar polynomial
UEAElement T_entry(const TMatrix& T, int i, int j, const ScalarPoly& arg);
// full matrix T(u + shift) with entries polynomial in u
std::vector<UEAElement> T_of_u(const TMatrix& T, const ScalarPoly& shift);

// A square matrix whose entries are functions of one formal variable, evaluable at var + shift.
class MatrixFn {
 public:
  virtual ~MatrixFn() = default;
  virtual int n() const = 0;     // rank data of the algebra
  virtual int size() const = 0;  // matrix size
  virtual LaurentOverUEA at(int i, int j, int var, const ScalarPoly& shift) const = 0;
};

class TMatrixFn : public MatrixFn {
 public:
  explicit TMatrixFn(TMatrix T) : T_(std::move(T)) {}
  int n() const override { return T_.n; }
  int size() const override { return T_.n; }
  LaurentOverUEA at(int i, int j, int var, const ScalarPoly& shift) const override;
  const TMatrix& T() const { return T_; }

 private:
  TMatrix T_;
};

// Entries are series in u; evaluation renames and shifts.
class SeriesMatrix : public MatrixFn {
 public:
  SeriesMatrix(int n, int m) : n_(n), m_(m), e_(m * m, LaurentOverUEA(n)) {}
  int n() const override { return n_; }
  int size() const override { return m_; }
  LaurentOverUEA at(int i, int j, int var, const ScalarPoly& shift) const override;
  const LaurentOverUEA& entry(int i, int j) const { return e_[(i - 1) * m_ + (j - 1)]; }
  LaurentOverUEA& entry(int i, int j) { return e_[(i - 1) * m_ + (j - 1)]; }

 private:
  int n_, m_;
  std::vector<LaurentOverUEA> e_;
};

// sum_sigma sgn(sigma) M_{a_s(1) b_1}(u) M_{a_s(2) b_2}(u + hbar) ... evaluated at u = var + shift
LaurentOverUEA qminor(const MatrixFn& M, const std::vector<int>& rows, const std::vector<int>& cols, int var = kU,
                      const ScalarPoly& shift = ScalarPoly());

enum class Expansion {
  LastColumn,     // sum_k (-1)^{N-k} Q(a\a_k; b\b_N)(u) M_{a_k b_N}(u + hbar(N-1))
  LastRow,        // sum_k (-1)^{N-k} Q(a\a_N; b\b_k)(u + hbar) M_{a_N b_k}(u)
  FirstColumn,    // sum_k (-1)^{k-1} M_{a_k b_1}(u) Q(a\a_k; b\b_1)(u + hbar)
  FirstRow,       // sum_k (-1)^{k-1} M_{a_1 b_k}(u + hbar(N-1)) Q(a\a_1; b\b_k)(u)
  ReversedArgs,   // sum_sigma sgn(sigma) M_{a_1 b_s(1)}(u_N) ... M_{a_N b_s(N)}(u_1)
};
LaurentOverUEA qminor_expanded(const MatrixFn& M, const std::vector<int>& rows, const std::vector<int>& cols,
                               Expansion how, int var = kU, const ScalarPoly& shift = ScalarPoly());

// quantum determinant in u; computes the column and row forms and throws if they differ
LaurentOverUEA qdet(const TMatrix& T);
LaurentOverUEA qdet(int n);

// P_k(u) = qminor(1..k; 1..k)(u - hbar(k-1)/2); P_0 = P_{n+1} = 1
LaurentOverUEA principal_P(const TMatrix& T, int k);
LaurentOverUEA principal_P(int n, int k);

// c^(k)_j with P_k(u) = u^k + sum_j c^(k)_j hbar^{k-j} u^j; throws if P_k is not of that shape
std::vector<UEAElement> P_coefficients(int n, int k);

std::vector<int> range_tuple(int from, int to);  // from..to inclusive

}  // namespace qgiso
