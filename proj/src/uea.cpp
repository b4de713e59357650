#include "qgiso/uea.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qgiso {

Mono Mono::push(uint8_t x) const {
  if (len >= kCap) throw std::length_error("PBW monomial too long");
  Mono m = *this;
  m.g[m.len++] = x;
  return m;
}

size_t MonoHash::operator()(const Mono& m) const noexcept {
  uint64_t h = 1469598103934665603ull ^ m.len;
  for (int i = 0; i < m.len; ++i) {
    h ^= m.g[i];
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

namespace {

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("straightening coefficient overflow");
  return r;
}

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("straightening coefficient overflow");
  return r;
}

struct MemoKey {
  Mono m;
  int g;
  friend bool operator==(const MemoKey& a, const MemoKey& b) { return a.g == b.g && a.m == b.m; }
};
struct MemoKeyHash {
  size_t operator()(const MemoKey& k) const noexcept { return MonoHash{}(k.m) * 31 + k.g; }
};
using Memo = std::unordered_map<MemoKey, Algebra::Combo, MemoKeyHash>;

Memo& memo_for(int n) {
  thread_local std::vector<std::unique_ptr<Memo>> memos;
  if (static_cast<int>(memos.size()) <= n) memos.resize(n + 1);
  if (!memos[n]) memos[n] = std::make_unique<Memo>();
  return *memos[n];
}

template <class F>
void for_each_product(const Algebra& alg, const Mono& m, int g, F&& f) {
  if (m.len == 0 || g >= m.last()) {
    f(m.push(static_cast<uint8_t>(g)), 1L);
    return;
  }
  for (auto& [mm, c] : alg.mono_times_gen(m, g)) f(mm, c);
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(int n) : n_(n) {
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l < k; ++l) gens_.push_back(Generator::e(k, l));
  n_lower_ = static_cast<int>(gens_.size());
  for (int i = 1; i < n; ++i) gens_.push_back(Generator::h(i));
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) gens_.push_back(Generator::e(k, l));
  for (auto& g : gens_)
    names_.push_back(g.kind == Generator::Cartan ? "h" + std::to_string(g.i)
                                                 : "e" + std::to_string(g.k) + std::to_string(g.l));

  // structure constants from matrix commutators in gl_n
  const int N = num_gens();
  auto mat = [&](int id) {
    std::vector<long> m(n * n, 0);
    const auto& g = gens_[id];
    if (g.kind == Generator::Unit) {
      m[(g.k - 1) * n + (g.l - 1)] = 1;
    } else {
      m[(g.i - 1) * n + (g.i - 1)] = 1;
      m[g.i * n + g.i] = -1;
    }
    return m;
  };
  br_.resize(N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      auto A = mat(a), B = mat(b);
      std::vector<long> C(n * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) C[i * n + j] += A[i * n + k] * B[k * n + j] - B[i * n + k] * A[k * n + j];
      auto& out = br_[a * N + b];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && C[i * n + j]) out.push_back({id(Generator::e(i + 1, j + 1)), C[i * n + j]});
      // diagonal part sum_j D_jj E_jj, traceless, equals sum_i (D_11 + ... + D_ii) h_i
      long run = 0;
      for (int i = 1; i < n; ++i) {
        run += C[(i - 1) * n + (i - 1)];
        if (run) out.push_back({id(Generator::h(i)), run});
      }
      std::sort(out.begin(), out.end());
    }
}

const Algebra& Algebra::get(int n) {
  if (n < 2 || n > 9) throw std::invalid_argument("n must be in 2..9");
  static std::mutex mu;
  static std::vector<std::unique_ptr<Algebra>> algs(10);
  std::lock_guard<std::mutex> lock(mu);
  if (!algs[n]) algs[n].reset(new Algebra(n));
  return *algs[n];
}

int Algebra::id(const Generator& g) const {
  for (int i = 0; i < num_gens(); ++i) {
    const auto& x = gens_[i];
    if (x.kind != g.kind) continue;
    if (g.kind == Generator::Cartan ? x.i == g.i : (x.k == g.k && x.l == g.l)) return i;
  }
  throw std::invalid_argument("generator out of range for n=" + std::to_string(n_));
}

const Algebra::Combo& Algebra::mono_times_gen(const Mono& m, int g) const {
  Memo& memo = memo_for(n_);
  MemoKey key{m, g};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // M g = (M' g) x + M' [x, g]  with M = M' x and g < x
  const int x = m.last();
  const Mono mp = m.pop();
  std::unordered_map<Mono, long, MonoHash> acc;
  for_each_product(*this, mp, g, [&](const Mono& nm, long c) {
    for_each_product(*this, nm, x, [&](const Mono& nm2, long c2) { acc[nm2] = checked_add(acc[nm2], checked_mul(c, c2)); });
  });
  for (auto& [y, d] : bracket(x, g))
    for_each_product(*this, mp, y, [&](const Mono& nm, long c) { acc[nm] = checked_add(acc[nm], checked_mul(d, c)); });
  Combo out;
  for (auto& [mm, c] : acc)
    if (c) out.push_back({mm, c});
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return memo.emplace(key, std::move(out)).first->second;
}

// ---------------------------------------------------------------- accumulator

struct UEAAccumulator::Impl {
  std::unordered_map<Mono, ScalarPoly, MonoHash> map;
};

UEAAccumulator::UEAAccumulator(int n) : n_(n), impl_(new Impl) {}
UEAAccumulator::~UEAAccumulator() { delete impl_; }

void UEAAccumulator::add(const Mono& m, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto it = impl_->map.find(m);
  if (it == impl_->map.end())
    impl_->map.emplace(m, c);
  else
    it->second += c;
}

void UEAAccumulator::add(const UEAElement& x, const ScalarPoly& c) {
  if (c.is_zero()) return;
  bool one = (c == ScalarPoly(1));
  for (auto& [m, p] : x.terms()) add(m, one ? p : p * c);
}

UEAElement UEAAccumulator::finish() {
  std::vector<UEAElement::Term> terms;
  terms.reserve(impl_->map.size());
  for (auto& [m, c] : impl_->map)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  impl_->map.clear();
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  UEAElement r(n_);
  return UEAElement::from_terms(n_, std::move(terms));
}

// ---------------------------------------------------------------- UEAElement

UEAElement::UEAElement(int n, const ScalarPoly& scalar) : n_(n) {
  if (!scalar.is_zero()) terms_.push_back({Mono{}, scalar});
}

UEAElement UEAElement::gen(int n, int id) {
  UEAElement x(n);
  x.terms_.push_back({Mono{}.push(static_cast<uint8_t>(id)), ScalarPoly(1)});
  return x;
}

UEAElement UEAElement::h(int n, int i) { return gen(n, Algebra::get(n).h(i)); }
UEAElement UEAElement::e(int n, int k, int l) { return gen(n, Algebra::get(n).e(k, l)); }

UEAElement UEAElement::from_terms(int n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  UEAElement x(n);
  for (auto& t : terms) {
    if (!x.terms_.empty() && x.terms_.back().first == t.first)
      x.terms_.back().second += t.second;
    else
      x.terms_.push_back(std::move(t));
  }
  x.terms_.erase(std::remove_if(x.terms_.begin(), x.terms_.end(), [](auto& t) { return t.second.is_zero(); }),
                 x.terms_.end());
  return x;
}

ScalarPoly UEAElement::scalar_part() const {
  if (!terms_.empty() && terms_[0].first.len == 0) return terms_[0].second;
  return ScalarPoly();
}

int UEAElement::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, int(t.first.len));
  return d;
}

UEAElement UEAElement::operator-() const {
  UEAElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  if (o.terms_.empty()) return *this;
  if (&o == this) return *this = UEAElement(o) + o;
  if (n_ == 0) n_ = o.n_;
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
      ScalarPoly s = i->second + j->second;
      if (!s.is_zero()) out.push_back({i->first, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) { return *this += -o; }

UEAElement operator*(const ScalarPoly& c, const UEAElement& a) {
  if (c.is_zero()) return UEAElement(a.n_);
  std::vector<UEAElement::Term> t;
  t.reserve(a.terms_.size());
  for (auto& [m, p] : a.terms_) t.push_back({m, c * p});
  UEAElement r(a.n_);
  r.terms_ = std::move(t);
  r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(), [](auto& x) { return x.second.is_zero(); }),
                 r.terms_.end());
  return r;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
  int n = a.n_ ? a.n_ : b.n_;
  if (a.n_ && b.n_ && a.n_ != b.n_) throw std::invalid_argument("mixing U(sl_n) for different n");
  if (a.is_zero() || b.is_zero()) return UEAElement(n);
  const Algebra& alg = Algebra::get(n);
  UEAAccumulator acc(n);
  std::unordered_map<Mono, long, MonoHash> cur, next;
  for (auto& [A, p] : a.terms_)
    for (auto& [B, q] : b.terms_) {
      ScalarPoly pq = p * q;
      if (pq.is_zero()) continue;
      if (B.len == 0 || A.len == 0 || A.last() <= B.g[0]) {
        if (A.len + B.len > Mono::kCap) throw std::length_error("PBW monomial too long");
        Mono m = A;
        for (int i = 0; i < B.len; ++i) m.g[m.len++] = B.g[i];
        acc.add(m, pq);
        continue;
      }
      cur.clear();
      cur[A] = 1;
      for (int i = 0; i < B.len; ++i) {
        next.clear();
        for (auto& [m, c] : cur)
          for_each_product(alg, m, B.g[i], [&](const Mono& mm, long c2) {
            next[mm] = checked_add(next[mm], checked_mul(c, c2));
          });
        std::swap(cur, next);
      }
      for (auto& [m, c] : cur)
        if (c) {
          ScalarPoly s = pq;
          s *= Rational(c);
          acc.add(m, s);
        }
    }
  return acc.finish();
}

UEAElement UEAElement::map_coeffs(const std::function<ScalarPoly(const ScalarPoly&)>& f) const {
  std::vector<Term> t;
  for (auto& [m, p] : terms_) t.push_back({m, f(p)});
  return from_terms(n_, std::move(t));
}

UEAElement UEAElement::substitute(const std::map<int, ScalarPoly>& binding) const {
  return map_coeffs([&](const ScalarPoly& p) { return p.substitute(binding); });
}

UEAElement UEAElement::coeff(int v, int k) const {
  return map_coeffs([&](const ScalarPoly& p) { return p.coeff(v, k); });
}

int UEAElement::degree_in(int v) const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.second.degree_in(v));
  return d;
}

bool UEAElement::coeffs_only_vars(unsigned allowed) const {
  for (auto& t : terms_)
    if (!t.second.only_vars(allowed)) return false;
  return true;
}

namespace {
std::string mono_string(int n, const Mono& m) {
  if (m.len == 0) return "1";
  const Algebra& alg = Algebra::get(n);
  std::string s;
  for (int i = 0; i < m.len; ++i) {
    if (i) s += "*";
    s += alg.name(m.g[i]);
  }
  return s;
}

std::string term_string(int n, const Mono& m, const ScalarPoly& c) {
  std::string cs = c.to_string();
  if (m.len == 0) return cs;
  if (c == ScalarPoly(1)) return mono_string(n, m);
  if (c == ScalarPoly(-1)) return "-" + mono_string(n, m);
  if (c.terms().size() > 1) cs = "(" + cs + ")";
  return cs + "*" + mono_string(n, m);
}
}  // namespace

std::string UEAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    std::string t = term_string(n_, terms_[i].first, terms_[i].second);
    if (i == 0)
      s = t;
    else if (t[0] == '-')
      s += " - " + t.substr(1);
    else
      s += " + " + t;
  }
  return s;
}

std::string UEAElement::leading_term() const {
  if (terms_.empty()) return "0";
  return term_string(n_, terms_[0].first, terms_[0].second);
}

UEAElement bracket(const UEAElement& a, const UEAElement& b) { return a * b - b * a; }

UEAElement bracket_basis(int n, int a, int b) { return bracket(UEAElement::gen(n, a), UEAElement::gen(n, b)); }

UEAElement pow(const UEAElement& a, unsigned k) {
  UEAElement r(a.n(), ScalarPoly(1));
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

UEAElement coweight(int i, int n) {
  if (i < 0 || i > n) throw std::out_of_range("coweight index out of range");
  UEAElement w(n);
  if (i == 0 || i == n) return w;
  for (int j = 1; j < n; ++j) {
    Rational c = j < i ? frac((n - i) * j, n) : frac(i * (n - j), n);
    w += ScalarPoly(c) * UEAElement::h(n, j);
  }
  return w;
}

}  // namespace qgiso
