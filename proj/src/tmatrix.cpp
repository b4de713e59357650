#include "qgiso/tmatrix.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace qgiso {

UEAElement TMatrix::trace() const {
  UEAElement t(n);
  for (int i = 1; i <= n; ++i) t += at(i, i);
  return t;
}

TMatrix build_T(int n) {
  if (n < 2) throw std::invalid_argument("build_T needs n >= 2");
  TMatrix T;
  T.n = n;
  T.entries.assign(n * n, UEAElement(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      T.at(i, j) = (i == j) ? coweight(i, n) - coweight(i - 1, n) : UEAElement::e(n, i, j);
  return T;
}

UEAElement T_entry(const TMatrix& T, int i, int j, const ScalarPoly& arg) {
  UEAElement x = ScalarPoly(-1) * ScalarPoly::hbar() * T.at(i, j);
  if (i == j) x += UEAElement(T.n, arg);
  return x;
}

std::vector<UEAElement> T_of_u(const TMatrix& T, const ScalarPoly& shift) {
  std::vector<UEAElement> out;
  for (int i = 1; i <= T.n; ++i)
    for (int j = 1; j <= T.n; ++j) out.push_back(T_entry(T, i, j, ScalarPoly::var(kU) + shift));
  return out;
}

LaurentOverUEA TMatrixFn::at(int i, int j, int var, const ScalarPoly& shift) const {
  return LaurentOverUEA::from_poly(T_entry(T_, i, j, ScalarPoly::var(var) + shift), {var});
}

LaurentOverUEA SeriesMatrix::at(int i, int j, int var, const ScalarPoly& shift) const {
  return entry(i, j).rename(kU, var).shift(var, shift);
}

std::vector<int> range_tuple(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

namespace {

ScalarPoly hbar_times(int k) { return ScalarPoly(Rational(k)) * ScalarPoly::hbar(); }

LaurentOverUEA one(int n) { return LaurentOverUEA::constant(UEAElement(n, ScalarPoly(1))); }

std::vector<int> without(const std::vector<int>& v, size_t i) {
  std::vector<int> r;
  for (size_t k = 0; k < v.size(); ++k)
    if (k != i) r.push_back(v[k]);
  return r;
}

}  // namespace

LaurentOverUEA qminor(const MatrixFn& M, const std::vector<int>& rows, const std::vector<int>& cols, int var,
                      const ScalarPoly& shift) {
  const size_t N = rows.size();
  if (cols.size() != N) throw std::invalid_argument("qminor: tuple lengths differ");
  if (N == 0) return one(M.n());
  // entries[j][r] = M_{rows[r], cols[j]}(u + hbar j)
  std::vector<std::vector<LaurentOverUEA>> entries(N);
  for (size_t j = 0; j < N; ++j)
    for (size_t r = 0; r < N; ++r)
      entries[j].push_back(M.at(rows[r], cols[j], var, shift + hbar_times(static_cast<int>(j))));
  LaurentOverUEA total(M.n());
  bool have = false;
  std::vector<bool> used(N, false);
  std::function<void(size_t, const LaurentOverUEA&, int)> dfs = [&](size_t j, const LaurentOverUEA& prefix, int sign) {
    if (j == N) {
      LaurentOverUEA term = sign > 0 ? prefix : -prefix;
      total = have ? total + term : term;
      have = true;
      return;
    }
    int inv = 0;  // used rows with larger index than the current choice
    for (size_t r = N; r-- > 0;) {
      if (used[r]) {
        ++inv;
        continue;
      }
      used[r] = true;
      LaurentOverUEA next = j == 0 ? entries[0][r] : prefix * entries[j][r];
      dfs(j + 1, next, (inv % 2) ? -sign : sign);
      used[r] = false;
    }
  };
  dfs(0, LaurentOverUEA(M.n()), 1);
  return total;
}

LaurentOverUEA qminor_expanded(const MatrixFn& M, const std::vector<int>& a, const std::vector<int>& b, Expansion how,
                               int var, const ScalarPoly& shift) {
  const int N = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != N) throw std::invalid_argument("qminor: tuple lengths differ");
  if (N == 0) return one(M.n());
  auto h = [&](int k) { return shift + hbar_times(k); };
  if (how == Expansion::ReversedArgs) {
    LaurentOverUEA total(M.n());
    bool have = false;
    std::vector<bool> used(N, false);
    std::function<void(int, const LaurentOverUEA&, int)> dfs = [&](int i, const LaurentOverUEA& prefix, int sign) {
      if (i == N) {
        total = have ? total + (sign > 0 ? prefix : -prefix) : (sign > 0 ? prefix : -prefix);
        have = true;
        return;
      }
      int inv = 0;
      for (int c = N; c-- > 0;) {
        if (used[c]) {
          ++inv;
          continue;
        }
        used[c] = true;
        auto entry = M.at(a[i], b[c], var, h(N - 1 - i));
        dfs(i + 1, i == 0 ? entry : prefix * entry, (inv % 2) ? -sign : sign);
        used[c] = false;
      }
    };
    dfs(0, LaurentOverUEA(M.n()), 1);
    return total;
  }
  if (N == 1) return M.at(a[0], b[0], var, shift);
  LaurentOverUEA total(M.n());
  for (int k = 1; k <= N; ++k) {
    LaurentOverUEA term(M.n());
    int sign = 1;
    switch (how) {
      case Expansion::LastColumn:
        sign = ((N - k) % 2) ? -1 : 1;
        term = qminor_expanded(M, without(a, k - 1), without(b, N - 1), how, var, shift) *
               M.at(a[k - 1], b[N - 1], var, h(N - 1));
        break;
      case Expansion::LastRow:
        sign = ((N - k) % 2) ? -1 : 1;
        term = qminor_expanded(M, without(a, N - 1), without(b, k - 1), how, var, h(1)) *
               M.at(a[N - 1], b[k - 1], var, shift);
        break;
      case Expansion::FirstColumn:
        sign = ((k - 1) % 2) ? -1 : 1;
        term = M.at(a[k - 1], b[0], var, shift) * qminor_expanded(M, without(a, k - 1), without(b, 0), how, var, h(1));
        break;
      case Expansion::FirstRow:
        sign = ((k - 1) % 2) ? -1 : 1;
        term = M.at(a[0], b[k - 1], var, h(N - 1)) * qminor_expanded(M, without(a, 0), without(b, k - 1), how, var, shift);
        break;
      case Expansion::ReversedArgs:
        break;
    }
    total = total + (sign > 0 ? term : -term);
  }
  return total;
}

LaurentOverUEA qdet(const TMatrix& T) {
  TMatrixFn M(T);
  auto idx = range_tuple(1, T.n);
  std::vector<int> rev(idx.rbegin(), idx.rend());
  auto column = qminor(M, idx, idx);
  // row form: sum_sigma sgn T_{n s(n)}(u_n) ... T_{1 s(1)}(u_1)
  auto row = qminor_expanded(M, rev, rev, Expansion::ReversedArgs);
  auto alt = qminor_expanded(M, idx, idx, Expansion::ReversedArgs);
  if (!residual(column, row).zero || !residual(column, alt).zero)
    throw std::logic_error("quantum determinant: column and row forms disagree");
  return column;
}

LaurentOverUEA qdet(int n) { return principal_P(n, n); }

LaurentOverUEA principal_P(const TMatrix& T, int k) {
  if (k < 0 || k > T.n + 1) throw std::out_of_range("principal_P index out of range");
  if (k == 0 || k == T.n + 1) return one(T.n);
  auto idx = range_tuple(1, k);
  ScalarPoly sh = ScalarPoly(Rational(-(k - 1)) / 2) * ScalarPoly::hbar();
  if (k == T.n) {
    auto d = qdet(T);
    return d.shift(kU, sh);
  }
  return qminor(TMatrixFn(T), idx, idx, kU, sh);
}

LaurentOverUEA principal_P(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentOverUEA> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  auto p = principal_P(build_T(n), k);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), p);
  return p;
}

std::vector<UEAElement> P_coefficients(int n, int k) {
  auto P = principal_P(n, k);
  if (P.coeff(k) != UEAElement(n, ScalarPoly(1))) throw std::logic_error("P_k is not monic");
  std::vector<UEAElement> c;
  for (int j = 0; j < k; ++j) {
    auto x = P.coeff(j);
    auto cj = x.coeff(kHbar, k - j);
    if (ScalarPoly::hbar(k - j) * cj != x) throw std::logic_error("P_k is not homogeneous in (u, hbar)");
    c.push_back(cj);
  }
  return c;
}

}  // namespace qgiso
