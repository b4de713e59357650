#include "qgiso/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qgiso {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational frac(long num, long den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

namespace {
const char* kVarNames[kNumVars] = {"hbar", "u", "v", "w", "x", "t", "u1", "u2", "u3", "u4", "u5", "u6"};
thread_local long g_mismatches = 0;

void note_orders(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) ++g_mismatches;
  if (a.var() != b.var()) throw domain_error("series in different indeterminates");
}
}  // namespace

const char* var_name(int v) { return kVarNames[v]; }

int var_by_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return i;
  if (name == "ħ" || name == "h") return kHbar;
  throw std::invalid_argument("unknown indeterminate " + name);
}

long series_order_mismatches() { return g_mismatches; }
void reset_series_order_mismatches() { g_mismatches = 0; }

// ---------------------------------------------------------------- ScalarPoly

ScalarPoly::ScalarPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Exps{}, c});
}

ScalarPoly ScalarPoly::var(int v, int power) {
  Exps e{};
  e[v] = static_cast<uint8_t>(power);
  return monomial(e, 1);
}

ScalarPoly ScalarPoly::monomial(const Exps& e, const Rational& c) {
  ScalarPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool ScalarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exps{});
}

Rational ScalarPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == Exps{}) return terms_[0].second;
  return 0;
}

int ScalarPoly::degree_in(int v) const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, int(e[v]));
  return d;
}

int ScalarPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool ScalarPoly::depends_on(int v) const {
  for (auto& [e, c] : terms_)
    if (e[v]) return true;
  return false;
}

bool ScalarPoly::only_vars(unsigned allowed) const {
  for (auto& [e, c] : terms_)
    for (int v = 0; v < kNumVars; ++v)
      if (e[v] && !(allowed & (1u << v))) return false;
  return true;
}

ScalarPoly ScalarPoly::coeff(int v, int k) const {
  ScalarPoly r;
  for (auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exps f = e;
    f[v] = 0;
    r.terms_.push_back({f, c});
  }
  r.normalize();
  return r;
}

ScalarPoly ScalarPoly::pow(unsigned e) const {
  ScalarPoly r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

ScalarPoly ScalarPoly::substitute(const std::map<int, ScalarPoly>& binding) const {
  ScalarPoly out;
  std::map<std::pair<int, int>, ScalarPoly> powers;
  for (auto& [e, c] : terms_) {
    Exps rest = e;
    ScalarPoly factor(c);
    for (auto& [v, val] : binding) {
      if (!e[v]) continue;
      rest[v] = 0;
      auto key = std::make_pair(v, int(e[v]));
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, val.pow(e[v])).first;
      factor = factor * it->second;
    }
    out += factor * monomial(rest, 1);
  }
  return out;
}

void ScalarPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }), out.end());
  terms_ = std::move(out);
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  if (o.terms_.empty()) return *this;
  if (&o == this) return *this = ScalarPoly(o) + o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.push_back({i->first, s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) { return *this += -o; }

ScalarPoly& ScalarPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      ScalarPoly::Exps e;
      for (int v = 0; v < kNumVars; ++v) {
        int s = ea[v] + eb[v];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[v] = static_cast<uint8_t>(s);
      }
      r.terms_.push_back({e, ca * cb});
    }
  if (a.terms_.size() > 1 && b.terms_.size() > 1) r.normalize();
  return r;
}

std::string ScalarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponents first reads better
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [e, c] = *it;
    Rational a = abs(c);
    bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = (e == ScalarPoly::Exps{});
    if (a != 1 || unit) {
      os << a.get_str();
      if (!unit) os << "*";
    }
    bool sep = false;
    for (int v = 0; v < kNumVars; ++v) {
      if (!e[v]) continue;
      if (sep) os << "*";
      os << kVarNames[v];
      if (e[v] > 1) os << "^" << int(e[v]);
      sep = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(int var, int order) : var_(var), c_(static_cast<size_t>(order)) {}
TruncSeries::TruncSeries(int var, std::vector<Rational> coeffs) : var_(var), c_(std::move(coeffs)) {}

TruncSeries TruncSeries::constant(int var, int order, const Rational& c) {
  TruncSeries s(var, order);
  if (order > 0) s.c_[0] = c;
  return s;
}

TruncSeries TruncSeries::identity(int var, int order) {
  TruncSeries s(var, order);
  if (order > 1) s.c_[1] = 1;
  return s;
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries s(var_, order);
  for (int i = 0; i < std::min(order, this->order()); ++i) s.c_[i] = c_[i];
  if (order > this->order()) throw domain_error("cannot extend a truncated series");
  return s;
}

TruncSeries TruncSeries::scale_arg(const Rational& r) const {
  TruncSeries s = *this;
  Rational p = 1;
  for (auto& c : s.c_) {
    c *= p;
    p *= r;
  }
  return s;
}

TruncSeries TruncSeries::shift_down(int sft) const {
  if (sft > order()) throw domain_error("valuation shift exceeds order");
  for (int i = 0; i < sft; ++i)
    if (c_[i] != 0) throw domain_error("inexact division by " + std::string(kVarNames[var_]) + " power");
  return TruncSeries(var_, std::vector<Rational>(c_.begin() + sft, c_.end()));
}

TruncSeries TruncSeries::shift_up(int sft) const {
  TruncSeries s(var_, order());
  for (int i = 0; i + sft < order(); ++i) s.c_[i + sft] = c_[i];
  return s;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  note_orders(a, b);
  TruncSeries s(a.var_, std::min(a.order(), b.order()));
  for (int i = 0; i < s.order(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  note_orders(a, b);
  int n = std::min(a.order(), b.order());
  TruncSeries s(a.var_, n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return s;
}

TruncSeries operator*(const Rational& c, const TruncSeries& a) {
  TruncSeries s = a;
  for (auto& x : s.c_) x *= c;
  return s;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < order(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    first = false;
    Rational a = abs(c_[i]);
    if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
    if (i) os << kVarNames[var_] << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  os << " + O(" << kVarNames[var_] << "^" << order() << ")";
  return os.str();
}

TruncSeries series_map(const TruncSeries& s, SeriesFn f) {
  const int n = s.order();
  const int x = s.var();
  if (n == 0) return s;
  switch (f) {
    case SeriesFn::Exp: {
      if (s[0] != 0) throw domain_error("exp needs constant term 0");
      // E' = s' E
      TruncSeries e(x, n);
      e[0] = 1;
      for (int k = 1; k < n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += j * s[j] * e[k - j];
        e[k] = acc / k;
      }
      return e;
    }
    case SeriesFn::Log: {
      if (s[0] != 1) throw domain_error("log needs constant term 1");
      // L' = s'/s
      TruncSeries l(x, n);
      for (int k = 1; k < n; ++k) {
        Rational acc = k * s[k];
        for (int j = 1; j < k; ++j) acc -= j * l[j] * s[k - j];
        l[k] = acc / k;
      }
      return l;
    }
    case SeriesFn::Sqrt: {
      if (s[0] != 1) throw domain_error("sqrt needs constant term 1");
      TruncSeries r(x, n);
      r[0] = 1;
      for (int k = 1; k < n; ++k) {
        Rational acc = s[k];
        for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
        r[k] = acc / 2;
      }
      return r;
    }
    case SeriesFn::Inverse: {
      if (s[0] != 1) throw domain_error("inverse needs constant term 1");
      TruncSeries r(x, n);
      r[0] = 1;
      for (int k = 1; k < n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc -= s[j] * r[k - j];
        r[k] = acc;
      }
      return r;
    }
  }
  return s;
}

UnivariateSeries sinhc_series(int var, int order) {
  // sum_j x^{2j} / (4^j (2j+1)!)
  UnivariateSeries s(var, order);
  mpz_class fact = 1, four = 1;
  for (int m = 0; m < order; ++m) {
    if (m > 0) fact *= (m + 1);
    if (m % 2 == 0) {
      s[m] = Rational(1) / (Rational(four) * Rational(fact));
      four *= 4;
    }
  }
  return s;
}

GSeries g_series(int order) {
  if (order < 1) throw domain_error("g_series needs N >= 1");
  auto g = series_map(sinhc_series(kX, order), SeriesFn::Sqrt);
  return {g, g.scale_arg(-1)};
}

std::string FactorizationReport::to_string() const {
  std::ostringstream os;
  os << "parity: " << (parity_fail < 0 ? "holds to order " + std::to_string(order) : "fails at index " + std::to_string(parity_fail));
  os << "; product: " << (product_fail < 0 ? "holds to order " + std::to_string(order) : "fails at index " + std::to_string(product_fail));
  return os.str();
}

FactorizationReport factorization_check(const UnivariateSeries& gplus, const UnivariateSeries& gminus, int order) {
  FactorizationReport r;
  r.order = order;
  auto gp = gplus.truncated(order), gm = gminus.truncated(order);
  auto refl = gp.scale_arg(-1);
  for (int i = 0; i < order; ++i)
    if (gm[i] != refl[i]) {
      r.parity_fail = i;
      break;
    }
  auto prod = gp * gm;
  auto target = sinhc_series(gp.var(), order);
  for (int i = 0; i < order; ++i)
    if (prod[i] != target[i]) {
      r.product_fail = i;
      break;
    }
  return r;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(long(i)));
  return QPoly(d);
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> d = c_;
  Rational l = c_.back();
  for (auto& x : d) x /= l;
  return QPoly(d);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return QPoly(r);
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    Rational f = r[i] / b.lead();
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
  }
  return {QPoly(q), QPoly(r)};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    first = false;
    Rational a = abs(c_[i]);
    if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
    if (i) os << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

namespace {

std::vector<mpz_class> divisors(mpz_class m) {
  m = abs(m);
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fac.push_back({p, e});
  }
  if (m > 1) fac.push_back({m, 1});
  std::vector<mpz_class> ds{1};
  for (auto& [p, e] : fac) {
    size_t cur = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// integer coefficients, content removed
std::vector<mpz_class> primitive_integer(const QPoly& p) {
  mpz_class l = 1;
  for (auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p, bool require_complete) {
  if (p.is_zero()) throw domain_error("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  QPoly rest = p;
  // zero roots
  while (rest.degree() > 0 && rest.coeffs()[0] == 0) {
    roots.push_back(0);
    std::vector<Rational> c(rest.coeffs().begin() + 1, rest.coeffs().end());
    rest = QPoly(c);
  }
  if (rest.degree() > 0) {
    // candidates come from the square-free part, multiplicities from deflating the full factor
    QPoly sqf = QPoly::divmod(rest, QPoly::gcd(rest, rest.derivative())).first;
    auto z = primitive_integer(sqf);
    std::vector<Rational> found;
    if (sqf.degree() > 0) {
      auto dp = divisors(z.front()), dq = divisors(z.back());
      for (auto& a : dp)
        for (auto& b : dq)
          for (int s : {1, -1}) {
            Rational cand(a * s, b);
            cand.canonicalize();
            if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
            if (sqf.eval(cand) == 0) found.push_back(cand);
          }
    }
    for (auto& r : found) {
      QPoly lin({-r, Rational(1)});
      for (;;) {
        auto [q, rem] = QPoly::divmod(rest, lin);
        if (!rem.is_zero()) break;
        roots.push_back(r);
        rest = q;
      }
    }
  }
  if (require_complete && rest.degree() > 0)
    throw incomplete_splitting("polynomial " + p.to_string() + " does not split over Q (leftover " +
                               rest.to_string() + ")");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qgiso
