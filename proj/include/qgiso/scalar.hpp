// Exact scalars: rationals, multivariate polynomials, truncated univariate series.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgiso {

using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational frac(long num, long den);

// Indeterminates live in one fixed ordered universe.
enum Var : int {
  kHbar = 0,
  kU = 1,
  kV = 2,
  kW = 3,
  kX = 4,
  kT = 5,
  kU1 = 6,  // u1..u6 for multi-factor R-matrices
};
constexpr int kNumVars = 12;

const char* var_name(int v);
int var_by_name(const std::string& name);

class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScalarPoly {
 public:
  using Exps = std::array<uint8_t, kNumVars>;
  using Term = std::pair<Exps, Rational>;

  ScalarPoly() = default;
  ScalarPoly(const Rational& c);  // NOLINT: constants convert implicitly
  ScalarPoly(long c) : ScalarPoly(Rational(c)) {}  // NOLINT
  ScalarPoly(int c) : ScalarPoly(Rational(c)) {}   // NOLINT

  static ScalarPoly var(int v, int power = 1);
  static ScalarPoly hbar(int power = 1) { return var(kHbar, power); }
  static ScalarPoly monomial(const Exps& e, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int degree_in(int v) const;  // -1 for zero
  int total_degree() const;
  bool depends_on(int v) const;
  // true if no indeterminate outside `allowed` (bitmask) occurs
  bool only_vars(unsigned allowed) const;

  // coefficient of v^e as a polynomial in the remaining indeterminates
  ScalarPoly coeff(int v, int e) const;
  // simultaneous substitution
  ScalarPoly substitute(const std::map<int, ScalarPoly>& binding) const;
  ScalarPoly pow(unsigned e) const;

  ScalarPoly operator-() const;
  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }
  ScalarPoly& operator*=(const Rational& c);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by exponent vector, no zeros
};

// Truncated power series in one declared indeterminate: c[0] + c[1] x + ... + c[N-1] x^{N-1}.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(int var, int order);
  TruncSeries(int var, std::vector<Rational> coeffs);

  static TruncSeries constant(int var, int order, const Rational& c);
  static TruncSeries identity(int var, int order);  // the series x

  int var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const;
  // x -> r x
  TruncSeries scale_arg(const Rational& r) const;
  // divide by x^s; the first s coefficients must vanish; order drops by s
  TruncSeries shift_down(int s) const;
  TruncSeries shift_up(int s) const;  // multiply by x^s, order kept

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Rational& c, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  int var_ = kX;
  std::vector<Rational> c_;
};

using HbarSeries = TruncSeries;
using UnivariateSeries = TruncSeries;

// Number of operand order mismatches seen by series arithmetic on this thread.
long series_order_mismatches();
void reset_series_order_mismatches();

enum class SeriesFn { Exp, Log, Sqrt, Inverse };
TruncSeries series_map(const TruncSeries& s, SeriesFn f);

struct GSeries {
  UnivariateSeries plus;
  UnivariateSeries minus;
};
// (e^{x/2} - e^{-x/2}) / x to order N
UnivariateSeries sinhc_series(int var, int order);
GSeries g_series(int order);

struct FactorizationReport {
  int order = 0;
  int parity_fail = -1;   // first index where G-(x) != G+(-x), -1 if none
  int product_fail = -1;  // first index where G+ G- != target
  bool holds() const { return parity_fail < 0 && product_fail < 0; }
  std::string to_string() const;
};
FactorizationReport factorization_check(const UnivariateSeries& gplus, const UnivariateSeries& gminus,
                                        int order);

// Dense univariate polynomial over Q, coefficient of t^i at index i.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> c);
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational eval(const Rational& t) const;
  QPoly derivative() const;
  QPoly monic() const;
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  // division with remainder
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

class incomplete_splitting : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const QPoly& p, bool require_complete);

}  // namespace qgiso
