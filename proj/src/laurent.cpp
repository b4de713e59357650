#include "qgiso/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qgiso {

namespace {

int clamp_low(long x) { return x < Window::kExact / 2 ? Window::kExact : static_cast<int>(x); }
int clamp_top(long x) { return x < Window::kEmpty / 2 ? Window::kEmpty : static_cast<int>(x); }

Window add_win(const Window& a, const Window& b) { return {std::max(a.top, b.top), std::max(a.low, b.low)}; }

Window mul_win(const Window& a, const Window& b) {
  Window w;
  w.top = clamp_top(long(a.top) + b.top);
  w.low = clamp_low(std::max(long(a.low) + b.top, long(b.low) + a.top));
  if (w.top == Window::kEmpty) w.low = Window::kExact;
  return w;
}

std::string pow_str(int var, int p) {
  std::string s = var_name(var);
  return s + "^" + std::to_string(p);
}

}  // namespace

LaurentOverUEA LaurentOverUEA::from_poly(const UEAElement& x, std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > 2) throw std::invalid_argument("at most two series variables");
  LaurentOverUEA s(x.n());
  for (size_t i = 0; i < vars.size(); ++i) s.vars_[i] = vars[i];
  std::map<Key, std::vector<UEAElement::Term>, Desc> parts;
  std::array<int, 2> top{Window::kEmpty, Window::kEmpty};
  for (auto& [m, p] : x.terms())
    for (auto& [e, c] : p.terms()) {
      Key k{0, 0};
      ScalarPoly::Exps rest = e;
      for (size_t i = 0; i < vars.size(); ++i) {
        k[i] = e[vars[i]];
        rest[vars[i]] = 0;
        top[i] = std::max(top[i], k[i]);
      }
      parts[k].push_back({m, ScalarPoly::monomial(rest, c)});
    }
  for (auto& [k, terms] : parts) {
    auto el = UEAElement::from_terms(x.n(), std::move(terms));
    if (!el.is_zero()) s.c_.emplace(k, std::move(el));
  }
  for (size_t i = 0; i < 2; ++i) s.win_[i] = {i < vars.size() ? top[i] : 0, Window::kExact};
  return s;
}

int LaurentOverUEA::slot(int var) const {
  for (int i = 0; i < 2; ++i)
    if (vars_[i] == var) return i;
  return -1;
}

Window LaurentOverUEA::window(int var) const {
  int s = slot(var);
  if (s < 0) return {0, Window::kExact};
  return win_[s];
}

LaurentOverUEA::Key LaurentOverUEA::key_for(int s, int p) const {
  Key k{0, 0};
  k[s] = p;
  return k;
}

UEAElement LaurentOverUEA::coeff(const Key& k) const {
  for (int s = 0; s < 2; ++s)
    if (vars_[s] >= 0 && k[s] < win_[s].low)
      throw truncation_error("coefficient " + pow_str(vars_[s], k[s]) + " lies below the retained depth");
  auto it = c_.find(k);
  return it == c_.end() ? UEAElement(n_) : it->second;
}

UEAElement LaurentOverUEA::coeff(int p) const {
  if (vars_[1] >= 0) throw std::invalid_argument("coeff(p) needs a single-variable series");
  return coeff(Key{p, 0});
}

UEAElement LaurentOverUEA::coeff_of(const std::map<int, int>& powers) const {
  Key k{0, 0};
  for (auto& [v, p] : powers) {
    int s = slot(v);
    if (s < 0) {
      if (p != 0) return UEAElement(n_);
      continue;
    }
    k[s] = p;
  }
  return coeff(k);
}

std::array<int, 2> LaurentOverUEA::union_vars(const LaurentOverUEA& a, const LaurentOverUEA& b) {
  std::vector<int> v;
  for (int x : a.vars_)
    if (x >= 0) v.push_back(x);
  for (int x : b.vars_)
    if (x >= 0) v.push_back(x);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() > 2) throw std::invalid_argument("at most two series variables");
  std::array<int, 2> r{-1, -1};
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

LaurentOverUEA LaurentOverUEA::rekey(const std::array<int, 2>& vars) const {
  if (vars == vars_) return *this;
  LaurentOverUEA r(n_);
  r.vars_ = vars;
  std::array<int, 2> from{-1, -1};  // new slot -> old slot
  for (int s = 0; s < 2; ++s) {
    if (vars[s] < 0) continue;
    from[s] = slot(vars[s]);
    r.win_[s] = from[s] >= 0 ? win_[from[s]] : Window{0, Window::kExact};
  }
  for (int s = 0; s < 2; ++s)
    if (vars_[s] >= 0 && std::find(vars.begin(), vars.end(), vars_[s]) == vars.end())
      throw std::invalid_argument("rekey would drop a series variable");
  for (auto& [k, c] : c_) {
    Key nk{0, 0};
    for (int s = 0; s < 2; ++s)
      if (from[s] >= 0) nk[s] = k[from[s]];
    r.c_.emplace(nk, c);
  }
  return r;
}

void LaurentOverUEA::drop_below() {
  for (auto it = c_.begin(); it != c_.end();) {
    bool drop = it->second.is_zero();
    for (int s = 0; s < 2 && !drop; ++s)
      if (vars_[s] >= 0 && it->first[s] < win_[s].low) drop = true;
    it = drop ? c_.erase(it) : std::next(it);
  }
}

LaurentOverUEA LaurentOverUEA::operator-() const {
  LaurentOverUEA r = *this;
  for (auto& [k, c] : r.c_) c = -c;
  return r;
}

LaurentOverUEA operator+(const LaurentOverUEA& a0, const LaurentOverUEA& b0) {
  auto vars = LaurentOverUEA::union_vars(a0, b0);
  LaurentOverUEA a = a0.rekey(vars), b = b0.rekey(vars);
  LaurentOverUEA r(a.n_ ? a.n_ : b.n_);
  r.vars_ = vars;
  for (int s = 0; s < 2; ++s) r.win_[s] = add_win(a.win_[s], b.win_[s]);
  r.c_ = a.c_;
  for (auto& [k, c] : b.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end())
      r.c_.emplace(k, c);
    else
      it->second += c;
  }
  r.drop_below();
  return r;
}

LaurentOverUEA operator*(const LaurentOverUEA& a0, const LaurentOverUEA& b0) {
  auto vars = LaurentOverUEA::union_vars(a0, b0);
  LaurentOverUEA a = a0.rekey(vars), b = b0.rekey(vars);
  LaurentOverUEA r(a.n_ ? a.n_ : b.n_);
  r.vars_ = vars;
  for (int s = 0; s < 2; ++s) r.win_[s] = mul_win(a.win_[s], b.win_[s]);
  std::map<LaurentOverUEA::Key, UEAElement, LaurentOverUEA::Desc> out;
  for (auto& [ka, ca] : a.c_)
    for (auto& [kb, cb] : b.c_) {
      LaurentOverUEA::Key k{ka[0] + kb[0], ka[1] + kb[1]};
      bool keep = true;
      for (int s = 0; s < 2; ++s)
        if (vars[s] >= 0 && k[s] < r.win_[s].low) keep = false;
      if (!keep) continue;
      auto p = ca * cb;
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, std::move(p));
      else
        it->second += p;
    }
  r.c_ = std::move(out);
  r.drop_below();
  return r;
}

LaurentOverUEA operator*(const ScalarPoly& c, const LaurentOverUEA& a) {
  LaurentOverUEA r = a;
  for (auto& [k, x] : r.c_) x = c * x;
  r.drop_below();
  return r;
}

LaurentOverUEA LaurentOverUEA::shift(int var, const ScalarPoly& sh) const {
  int s = slot(var);
  if (s < 0 || sh.is_zero()) return *this;
  for (int x : vars_)
    if (x >= 0 && sh.depends_on(x)) throw std::invalid_argument("shift may not involve series variables");
  const Window w = win_[s];
  std::vector<ScalarPoly> powers{ScalarPoly(1)};
  LaurentOverUEA r(n_);
  r.vars_ = vars_;
  r.win_ = win_;
  for (auto& [k, c] : c_) {
    const int e = k[s];
    int tmax;
    if (e >= 0)
      tmax = e;
    else if (w.exact())
      throw truncation_error("cannot shift an exact series with negative powers");
    else
      tmax = e - w.low;
    Rational binom = 1;
    for (int t = 0; t <= tmax; ++t) {
      if (t > 0) binom = binom * Rational(e - t + 1) / Rational(t);
      while (static_cast<int>(powers.size()) <= t) powers.push_back(powers.back() * sh);
      Key nk = k;
      nk[s] = e - t;
      auto term = (ScalarPoly(binom) * powers[t]) * c;
      auto it = r.c_.find(nk);
      if (it == r.c_.end())
        r.c_.emplace(nk, std::move(term));
      else
        it->second += term;
    }
  }
  r.drop_below();
  return r;
}

LaurentOverUEA LaurentOverUEA::rename(int from, int to) const {
  int s = slot(from);
  if (s < 0 || from == to) return *this;
  if (slot(to) >= 0) throw std::invalid_argument("rename target already present");
  LaurentOverUEA r = *this;
  r.vars_[s] = to;
  if (r.vars_[0] >= 0 && r.vars_[1] >= 0 && r.vars_[0] > r.vars_[1]) {
    std::swap(r.vars_[0], r.vars_[1]);
    std::swap(r.win_[0], r.win_[1]);
    Coeffs c;
    for (auto& [k, x] : r.c_) c.emplace(Key{k[1], k[0]}, x);
    r.c_ = std::move(c);
  }
  return r;
}

LaurentOverUEA LaurentOverUEA::truncated(int var, int low) const {
  int s = slot(var);
  if (s < 0) return *this;
  LaurentOverUEA r = *this;
  if (low > r.win_[s].low) r.win_[s].low = low;
  r.drop_below();
  return r;
}

LaurentOverUEA LaurentOverUEA::invert_monic(int K) const {
  if (vars_[1] >= 0) throw std::invalid_argument("invert_monic needs a single-variable series");
  const int var = vars_[0] >= 0 ? vars_[0] : kU;
  const Window w = vars_[0] >= 0 ? win_[0] : Window{0, Window::kExact};
  const int top = w.top;
  if (top == Window::kEmpty) throw domain_error("inverse of zero");
  const int avail = w.exact() ? INT_MAX : w.depth();
  if (K <= 0) {
    if (w.exact()) throw std::invalid_argument("invert_monic of a polynomial needs an explicit depth");
    K = avail;
  }
  if (K > avail)
    throw truncation_error("inversion to depth " + std::to_string(K) + " exceeds the available depth " +
                           std::to_string(avail));
  auto at = [&](int p) {
    auto it = c_.find(Key{p, 0});
    return it == c_.end() ? UEAElement(n_) : it->second;
  };
  if (at(top) != UEAElement(n_, ScalarPoly(1))) throw domain_error("invert_monic: leading coefficient is not 1");
  std::vector<UEAElement> a(K), right(K), left(K);
  for (int j = 0; j < K; ++j) a[j] = at(top - j);
  right[0] = left[0] = UEAElement(n_, ScalarPoly(1));
  for (int m = 1; m < K; ++m) {
    UEAElement r(n_), l(n_);
    for (int j = 1; j <= m; ++j) {
      if (a[j].is_zero()) continue;
      r -= a[j] * right[m - j];
      l -= left[m - j] * a[j];
    }
    right[m] = std::move(r);
    left[m] = std::move(l);
  }
  for (int m = 0; m < K; ++m)
    if (right[m] != left[m])
      throw domain_error("left and right inverses differ at " + pow_str(var, -top - m));
  LaurentOverUEA q(n_);
  q.vars_ = {var, -1};
  q.win_[0] = {-top, -top - K + 1};
  q.win_[1] = {0, Window::kExact};
  for (int m = 0; m < K; ++m)
    if (!right[m].is_zero()) q.c_.emplace(Key{-top - m, 0}, right[m]);
  return q;
}

LaurentOverUEA LaurentOverUEA::log_unit() const {
  if (vars_[1] >= 0 || vars_[0] < 0) throw std::invalid_argument("log_unit needs a single-variable series");
  const Window w = win_[0];
  if (w.exact()) throw std::invalid_argument("log_unit needs a truncated series");
  if (coeff(0) != UEAElement(n_, ScalarPoly(1)) || w.top > 0) throw domain_error("log needs constant term 1");
  LaurentOverUEA A = *this;
  A.c_.erase(Key{0, 0});
  A.win_[0].top = -1;
  LaurentOverUEA result = A, power = A;
  const int K = -w.low;  // A^m vanishes on the window once m > K
  for (int m = 2; m <= K; ++m) {
    power = power * A;
    result = result + ScalarPoly(Rational((m % 2) ? 1 : -1) / Rational(m)) * power;
  }
  result.win_[0] = {-1, w.low};
  result.drop_below();
  return result;
}

std::string LaurentOverUEA::to_string() const {
  std::ostringstream os;
  for (auto& [k, c] : c_) {
    for (int s = 0; s < 2; ++s)
      if (vars_[s] >= 0) os << pow_str(vars_[s], k[s]) << " ";
    os << ": " << c.to_string() << "\n";
  }
  for (int s = 0; s < 2; ++s)
    if (vars_[s] >= 0 && !win_[s].exact())
      os << "+ O(" << pow_str(vars_[s], win_[s].low - 1) << ")\n";
  return os.str();
}

SeriesResidual residual(const LaurentOverUEA& lhs, const LaurentOverUEA& rhs) {
  auto d = lhs - rhs;
  SeriesResidual r;
  std::ostringstream ws;
  bool any = false;
  for (int s = 0; s < 2; ++s) {
    int v = d.vars()[s];
    if (v < 0) continue;
    Window w = d.window(v);
    if (any) ws << " ";
    any = true;
    ws << var_name(v) << "^[" << (w.top == Window::kEmpty ? std::string("-inf") : std::to_string(w.top)) << ".."
       << (w.exact() ? std::string("exact") : std::to_string(w.low)) << "]";
  }
  r.window = any ? ws.str() : "constant";
  if (!d.is_zero()) {
    r.zero = false;
    auto& [k, c] = *d.coeffs().begin();
    std::ostringstream os;
    for (int s = 0; s < 2; ++s)
      if (d.vars()[s] >= 0) os << pow_str(d.vars()[s], k[s]) << " ";
    os << "coefficient " << c.leading_term();
    r.first_nonzero = os.str();
  }
  return r;
}

LaurentOverUEA commutator(const LaurentOverUEA& a, const LaurentOverUEA& b) { return a * b - b * a; }

}  // namespace qgiso
