// Truncated Laurent series in descending powers of one or two formal variables, with U(sl_n) coefficients.
#pragma once

#include <array>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgiso/uea.hpp"

namespace qgiso {

class truncation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-variable bookkeeping. Every coefficient of var^p with p >= low is exact; nothing above top is nonzero.
struct Window {
  static constexpr int kExact = INT_MIN / 4;  // low for a polynomial in the variable
  static constexpr int kEmpty = INT_MIN / 4;  // top of the zero series
  int top = 0;
  int low = kExact;
  bool exact() const { return low == kExact; }
  int depth() const { return exact() ? -1 : top - low + 1; }
};

class LaurentOverUEA {
 public:
  using Key = std::array<int, 2>;
  struct Desc {
    bool operator()(const Key& a, const Key& b) const { return a > b; }
  };
  using Coeffs = std::map<Key, UEAElement, Desc>;

  LaurentOverUEA() = default;
  explicit LaurentOverUEA(int n) : n_(n) {}

  // x must be polynomial in the listed variables (at most two) with coefficients otherwise in hbar
  static LaurentOverUEA from_poly(const UEAElement& x, std::vector<int> vars);
  static LaurentOverUEA constant(const UEAElement& x) { return from_poly(x, {}); }

  int n() const { return n_; }
  const std::array<int, 2>& vars() const { return vars_; }
  int slot(int var) const;  // -1 if absent
  Window window(int var) const;
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // coefficient of var^p (single-variable series) or var0^p var1^q
  UEAElement coeff(int p) const;
  UEAElement coeff(const Key& k) const;
  UEAElement coeff_of(const std::map<int, int>& powers) const;

  LaurentOverUEA operator-() const;
  friend LaurentOverUEA operator+(const LaurentOverUEA& a, const LaurentOverUEA& b);
  friend LaurentOverUEA operator-(const LaurentOverUEA& a, const LaurentOverUEA& b) { return a + (-b); }
  friend LaurentOverUEA operator*(const LaurentOverUEA& a, const LaurentOverUEA& b);
  friend LaurentOverUEA operator*(const ScalarPoly& c, const LaurentOverUEA& a);

  // var -> var + s, where s does not involve series variables
  LaurentOverUEA shift(int var, const ScalarPoly& s) const;
  LaurentOverUEA rename(int from, int to) const;
  LaurentOverUEA truncated(int var, int low) const;

  // two-sided inverse of a single-variable series whose top coefficient is 1; depth K
  // (K <= 0 uses the available depth of a truncated input)
  LaurentOverUEA invert_monic(int K = 0) const;
  // log of a single-variable series 1 + O(var^{-1}); coefficients are assumed to commute
  LaurentOverUEA log_unit() const;

  std::string to_string() const;

 private:
  void set_window(int slot, Window w) { win_[slot] = w; }
  Key key_for(int slot, int p) const;
  LaurentOverUEA rekey(const std::array<int, 2>& vars) const;
  static std::array<int, 2> union_vars(const LaurentOverUEA& a, const LaurentOverUEA& b);
  void drop_below();

  int n_ = 0;
  std::array<int, 2> vars_{-1, -1};
  std::array<Window, 2> win_{};
  Coeffs c_;
};

// Comparison of two series on their common window.
struct SeriesResidual {
  bool zero = true;
  std::string window;  // e.g. "u^[1..-4] v^[1..-4]"
  std::string first_nonzero;
};
SeriesResidual residual(const LaurentOverUEA& lhs, const LaurentOverUEA& rhs);

LaurentOverUEA commutator(const LaurentOverUEA& a, const LaurentOverUEA& b);

}  // namespace qgiso
