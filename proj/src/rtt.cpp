#include "qgiso/rtt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace qgiso {

const char* rtt_law_name(RttLaw law) {
  switch (law) {
    case RttLaw::Pairwise: return "rtt.pairwise";
    case RttLaw::Entrywise: return "rtt.entrywise";
    case RttLaw::Multi: return "rtt.multi";
    case RttLaw::Antisym: return "rtt.antisym";
    case RttLaw::CN: return "rtt.cN";
  }
  return "?";
}

const char* minor_law_name(MinorLaw law) {
  switch (law) {
    case MinorLaw::PropFirst: return "minors.first";
    case MinorLaw::PropSecond: return "minors.second";
    case MinorLaw::Corollary: return "minors.corollary";
  }
  return "?";
}

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

ScalarPoly H() { return ScalarPoly::hbar(); }

// leg values of a multi-index, leg 0 most significant
std::vector<int> legs_of(int I, int n, int N) {
  std::vector<int> v(N);
  for (int p = N - 1; p >= 0; --p) {
    v[p] = I % n;
    I /= n;
  }
  return v;
}

int index_of(const std::vector<int>& legs, int n) {
  int I = 0;
  for (int x : legs) I = I * n + x;
  return I;
}

int swap_index(int I, int n, int N, int p, int q) {
  auto v = legs_of(I, n, N);
  std::swap(v[p], v[q]);
  return index_of(v, n);
}

template <class X>
std::vector<X> R_left(const std::vector<X>& M, int n, int N, int p, int q, const ScalarPoly& x) {
  const int D = ipow(n, N);
  std::vector<X> out(M.size());
  for (int I = 0; I < D; ++I) {
    int S = swap_index(I, n, N, p, q);
    for (int J = 0; J < D; ++J) out[I * D + J] = x * M[I * D + J] + H() * M[S * D + J];
  }
  return out;
}

template <class X>
std::vector<X> R_right(const std::vector<X>& M, int n, int N, int p, int q, const ScalarPoly& x) {
  const int D = ipow(n, N);
  std::vector<X> out(M.size());
  for (int J = 0; J < D; ++J) {
    int S = swap_index(J, n, N, p, q);
    for (int I = 0; I < D; ++I) out[I * D + J] = x * M[I * D + J] + H() * M[I * D + S];
  }
  return out;
}

// factor order of R(u_1..u_N), rightmost first: R_12, R_13, .., R_1N, R_23, .., R_{N-1,N}
std::vector<std::pair<int, int>> first_form_factors(int N) {
  std::vector<std::pair<int, int>> f;
  for (int p = 0; p < N - 1; ++p)
    for (int q = p + 1; q < N; ++q) f.push_back({p, q});
  return f;
}

// second form (R_12 .. R_1N)(R_23 .. R_2N) .. R_{N-1,N}, rightmost first
std::vector<std::pair<int, int>> second_form_factors(int N) {
  std::vector<std::pair<int, int>> f;
  for (int p = N - 2; p >= 0; --p)
    for (int q = N - 1; q > p; --q) f.push_back({p, q});
  return f;
}

template <class X>
std::vector<X> multi_left(std::vector<X> M, int n, int N, const std::vector<ScalarPoly>& args, bool second) {
  for (auto [p, q] : second ? second_form_factors(N) : first_form_factors(N)) M = R_left(M, n, N, p, q, args[p] - args[q]);
  return M;
}

template <class X>
std::vector<X> multi_right(std::vector<X> M, int n, int N, const std::vector<ScalarPoly>& args) {
  auto f = first_form_factors(N);
  for (auto it = f.rbegin(); it != f.rend(); ++it) M = R_right(M, n, N, it->first, it->second, args[it->first] - args[it->second]);
  return M;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

template <class X>
std::vector<X> antisym_left(const std::vector<X>& M, int n, int N, X zero) {
  const int D = ipow(n, N);
  std::vector<X> out(M.size(), zero);
  std::vector<int> sigma(N);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    ScalarPoly s(perm_sign(sigma));
    for (int I = 0; I < D; ++I) {
      auto v = legs_of(I, n, N), w = v;
      for (int p = 0; p < N; ++p) w[p] = v[sigma[p]];
      int K = index_of(w, n);
      for (int J = 0; J < D; ++J) out[I * D + J] += s * M[K * D + J];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

template <class X>
std::vector<X> antisym_right(const std::vector<X>& M, int n, int N, X zero) {
  const int D = ipow(n, N);
  std::vector<X> out(M.size(), zero);
  std::vector<int> sigma(N);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    ScalarPoly s(perm_sign(sigma));
    for (int J = 0; J < D; ++J) {
      auto v = legs_of(J, n, N), w = v;
      for (int p = 0; p < N; ++p) w[p] = v[sigma[p]];
      int K = index_of(w, n);
      for (int I = 0; I < D; ++I) out[I * D + J] += s * M[I * D + K];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::string multi_index_name(int I, int n, int N) {
  std::string s;
  for (int x : legs_of(I, n, N)) s += std::to_string(x + 1);
  return s;
}

LawReport compare_ops(const std::string& law, const std::string& idx, const TensorOp& lhs, const TensorOp& rhs) {
  LawReport r;
  r.law = law;
  r.indices = idx;
  for (int I = 0; I < lhs.D; ++I)
    for (int J = 0; J < lhs.D; ++J) {
      auto d = lhs.at(I, J) - rhs.at(I, J);
      if (!d.is_zero()) {
        r.status = Status::Fail;
        r.detail = "entry (" + multi_index_name(I, lhs.n, lhs.N) + "," + multi_index_name(J, lhs.n, lhs.N) +
                   ") differs by " + d.leading_term();
        return r;
      }
    }
  r.detail = "residual 0 on all " + std::to_string(lhs.D * lhs.D) + " entries";
  return r;
}

std::vector<ScalarPoly> vars_u(int N) {
  std::vector<ScalarPoly> a;
  for (int p = 0; p < N; ++p) a.push_back(ScalarPoly::var(kU1 + p));
  return a;
}

std::vector<ScalarPoly> staggered(int N) {
  std::vector<ScalarPoly> a;
  for (int p = 0; p < N; ++p) a.push_back(ScalarPoly::var(kU) + ScalarPoly(p) * H());
  return a;
}

}  // namespace

TensorOp::TensorOp(int n_, int N_) : n(n_), N(N_), D(ipow(n_, N_)), a(static_cast<size_t>(D) * D, UEAElement(n_)) {}

int TensorOp::swap_legs(int I, int p, int q) const { return swap_index(I, n, N, p, q); }
int TensorOp::leg(int I, int p) const { return legs_of(I, n, N)[p]; }

TensorOp apply_R_left(const TensorOp& M, int p, int q, const ScalarPoly& x) {
  TensorOp out = M;
  out.a = R_left(M.a, M.n, M.N, p, q, x);
  return out;
}

TensorOp apply_R_right(const TensorOp& M, int p, int q, const ScalarPoly& x) {
  TensorOp out = M;
  out.a = R_right(M.a, M.n, M.N, p, q, x);
  return out;
}

TensorOp ordered_T_product(const TMatrix& T, const std::vector<ScalarPoly>& args, bool reversed) {
  const int N = static_cast<int>(args.size());
  TensorOp M(T.n, N);
  // entries T_{ij}(u_a) cached per leg
  std::vector<std::vector<UEAElement>> ent(N);
  for (int p = 0; p < N; ++p)
    for (int i = 1; i <= T.n; ++i)
      for (int j = 1; j <= T.n; ++j) ent[p].push_back(T_entry(T, i, j, args[p]));
  for (int I = 0; I < M.D; ++I) {
    auto vi = legs_of(I, T.n, N);
    for (int J = 0; J < M.D; ++J) {
      auto vj = legs_of(J, T.n, N);
      UEAElement x(T.n, ScalarPoly(1));
      for (int s = 0; s < N; ++s) {
        int p = reversed ? N - 1 - s : s;
        x = x * ent[p][vi[p] * T.n + vj[p]];
      }
      M.at(I, J) = x;
    }
  }
  return M;
}

TensorOp apply_multi_R_left(const TensorOp& M, const std::vector<ScalarPoly>& args) {
  TensorOp out = M;
  out.a = multi_left(M.a, M.n, M.N, args, false);
  return out;
}

TensorOp apply_multi_R_right(const TensorOp& M, const std::vector<ScalarPoly>& args) {
  TensorOp out = M;
  out.a = multi_right(M.a, M.n, M.N, args);
  return out;
}

std::vector<ScalarPoly> multi_R_matrix(int n, const std::vector<ScalarPoly>& args, bool second_form) {
  const int N = static_cast<int>(args.size());
  const int D = ipow(n, N);
  std::vector<ScalarPoly> id(static_cast<size_t>(D) * D);
  for (int I = 0; I < D; ++I) id[I * D + I] = ScalarPoly(1);
  return multi_left(id, n, N, args, second_form);
}

std::vector<ScalarPoly> antisymmetrizer(int n, int N) {
  const int D = ipow(n, N);
  std::vector<ScalarPoly> id(static_cast<size_t>(D) * D);
  for (int I = 0; I < D; ++I) id[I * D + I] = ScalarPoly(1);
  return antisym_left(id, n, N, ScalarPoly());
}

ScalarPoly c_N(int N) {
  // (-hbar)^{N(N-1)/2} (N-1)! ... 1!
  Rational c = 1;
  long f = 1;
  for (int j = 1; j < N; ++j) {
    f *= j;
    c *= f;
  }
  int e = N * (N - 1) / 2;
  if (e % 2) c = -c;
  return ScalarPoly(c) * ScalarPoly::hbar(e);
}

LawReports verify_rtt_family(const TMatrix& T, RttLaw law, int N) {
  const int n = T.n;
  LawReports out;
  const std::string base = "n=" + std::to_string(n);
  Stopwatch sw;
  switch (law) {
    case RttLaw::Pairwise: {
      std::vector<ScalarPoly> args{ScalarPoly::var(kU), ScalarPoly::var(kV)};
      auto x = args[0] - args[1];
      auto lhs = apply_R_left(ordered_T_product(T, args, false), 0, 1, x);
      auto rhs = apply_R_right(ordered_T_product(T, args, true), 0, 1, x);
      out.push_back(compare_ops(rtt_law_name(law), base, lhs, rhs));
      break;
    }
    case RttLaw::Entrywise: {
      auto u = ScalarPoly::var(kU), v = ScalarPoly::var(kV);
      // two right-hand sides: T_kj(v)T_il(u) - T_kj(u)T_il(v) and T_il(u)T_kj(v) - T_il(v)T_kj(u)
      for (int form = 0; form < 2; ++form) {
        LawReport r;
        r.law = std::string(rtt_law_name(law)) + (form ? ".swapped" : "");
        r.indices = base;
        int count = 0;
        for (int i = 1; i <= n && r.passed(); ++i)
          for (int j = 1; j <= n && r.passed(); ++j)
            for (int k = 1; k <= n && r.passed(); ++k)
              for (int l = 1; l <= n && r.passed(); ++l) {
                auto lhs = (u - v) * bracket(T_entry(T, i, j, u), T_entry(T, k, l, v));
                UEAElement rhs = form == 0 ? T_entry(T, k, j, v) * T_entry(T, i, l, u) - T_entry(T, k, j, u) * T_entry(T, i, l, v)
                                           : T_entry(T, i, l, u) * T_entry(T, k, j, v) - T_entry(T, i, l, v) * T_entry(T, k, j, u);
                rhs = H() * rhs;
                ++count;
                auto d = lhs - rhs;
                if (!d.is_zero()) {
                  r.status = Status::Fail;
                  r.detail = "(i,j,k,l)=(" + join_ints({i, j, k, l}) + ") differs by " + d.leading_term();
                }
              }
        if (r.passed()) r.detail = "residual 0 for all " + std::to_string(count) + " index tuples";
        out.push_back(r);
      }
      break;
    }
    case RttLaw::Multi: {
      auto args = vars_u(N);
      auto lhs = apply_multi_R_left(ordered_T_product(T, args, false), args);
      auto rhs = apply_multi_R_right(ordered_T_product(T, args, true), args);
      out.push_back(compare_ops(rtt_law_name(law), base + " N=" + std::to_string(N), lhs, rhs));
      LawReport f;
      f.law = "rtt.multi.forms";
      f.indices = base + " N=" + std::to_string(N);
      bool same = multi_R_matrix(n, args, false) == multi_R_matrix(n, args, true);
      f.status = same ? Status::Pass : Status::Fail;
      f.detail = same ? "both factorizations of R(u_1..u_N) agree" : "factorizations differ";
      out.push_back(f);
      break;
    }
    case RttLaw::Antisym: {
      auto args = staggered(N);
      auto P = ordered_T_product(T, args, false);
      auto Q = ordered_T_product(T, args, true);
      TensorOp lhs = P, rhs = Q;
      lhs.a = antisym_left(P.a, n, N, UEAElement(n));
      rhs.a = antisym_right(Q.a, n, N, UEAElement(n));
      out.push_back(compare_ops(rtt_law_name(law), base + " N=" + std::to_string(N), lhs, rhs));
      break;
    }
    case RttLaw::CN: {
      auto args = staggered(N);
      auto A = antisymmetrizer(n, N);
      auto c = c_N(N);
      for (int form = 0; form < 2; ++form) {
        auto R = multi_R_matrix(n, args, form == 1);
        LawReport r;
        r.law = std::string(rtt_law_name(law)) + (form ? ".second" : "");
        r.indices = base + " N=" + std::to_string(N);
        for (size_t e = 0; e < R.size() && r.passed(); ++e)
          if (R[e] != c * A[e]) {
            r.status = Status::Fail;
            r.detail = "entry " + std::to_string(e) + ": " + R[e].to_string() + " vs " + (c * A[e]).to_string();
          }
        if (r.passed()) r.detail = "R = c_N A_N with c_N = " + c.to_string();
        out.push_back(r);
      }
      break;
    }
  }
  for (auto& r : out) r.ms = sw.ms() / out.size();
  return out;
}

LawReports verify_rtt_family(RttLaw law, int n, int N) { return verify_rtt_family(build_T(n), law, N); }

namespace {

std::vector<int> rho(std::vector<int> t, int i, int x) {
  t[i] = x;
  return t;
}

std::string tuple_name(const std::vector<int>& t) { return "(" + join_ints(t) + ")"; }

class MinorCache {
 public:
  explicit MinorCache(const TMatrix& T) : M_(T) {}
  const LaurentOverUEA& get(const std::vector<int>& a, const std::vector<int>& b) {
    auto key = std::make_pair(a, b);
    auto it = c_.find(key);
    if (it == c_.end()) it = c_.emplace(key, qminor(M_, a, b, kV)).first;
    return it->second;
  }
  LaurentOverUEA entry_u(int i, int j) const { return M_.at(i, j, kU, ScalarPoly()); }

 private:
  TMatrixFn M_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, LaurentOverUEA> c_;
};

LawReport minor_case(MinorCache& cache, int n, MinorLaw law, const MinorCase& c) {
  const int N = static_cast<int>(c.a.size());
  const auto& Q = cache.get(c.a, c.b);
  std::string idx = "k,l=" + std::to_string(c.k) + "," + std::to_string(c.l) + " a=" + tuple_name(c.a) +
                    " b=" + tuple_name(c.b);
  if (law == MinorLaw::Corollary) {
    idx = "i,j=" + std::to_string(c.k) + "," + std::to_string(c.l) + " a=" + tuple_name(c.a) + " b=" + tuple_name(c.b);
    auto t = cache.entry_u(c.a[c.k - 1], c.b[c.l - 1]);
    return law_from_residual(minor_law_name(law), idx, residual(commutator(t, Q), LaurentOverUEA(n)));
  }
  auto t = cache.entry_u(c.k, c.l);
  ScalarPoly pref = ScalarPoly::var(kU) - ScalarPoly::var(kV);
  if (law == MinorLaw::PropSecond) pref -= ScalarPoly(N - 1) * H();
  auto lhs = LaurentOverUEA::from_poly(UEAElement(n, pref), {kU, kV}) * commutator(t, Q);
  LaurentOverUEA rhs(n);
  for (int i = 0; i < N; ++i) {
    const auto& Qb = cache.get(c.a, rho(c.b, i, c.l));
    const auto& Qa = cache.get(rho(c.a, i, c.k), c.b);
    auto tk = cache.entry_u(c.k, c.b[i]);
    auto tl = cache.entry_u(c.a[i], c.l);
    if (law == MinorLaw::PropFirst)
      rhs = rhs + Qb * tk - tl * Qa;
    else
      rhs = rhs + tk * Qb - Qa * tl;
  }
  rhs = H() * rhs;
  return law_from_residual(minor_law_name(law), idx, residual(lhs, rhs));
}

LawReport summarize(MinorLaw law, int n, int N, const std::vector<LawReport>& cases, const std::string& what) {
  LawReport r;
  r.law = minor_law_name(law);
  r.indices = "n=" + std::to_string(n) + " N=" + std::to_string(N);
  for (auto& c : cases)
    if (!c.passed()) {
      r.status = Status::Fail;
      r.detail = c.indices + ": " + c.detail;
      return r;
    }
  r.detail = "residual 0 on " + std::to_string(cases.size()) + " " + what;
  return r;
}

void all_tuples(int n, int N, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == N) {
    out.push_back(cur);
    return;
  }
  for (int x = 1; x <= n; ++x) {
    cur.push_back(x);
    all_tuples(n, N, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LawReport check_minor_case(const TMatrix& T, MinorLaw law, const MinorCase& c) {
  MinorCache cache(T);
  return minor_case(cache, T.n, law, c);
}

LawReports verify_minor_comm(const TMatrix& T, MinorLaw law, int N) {
  Stopwatch sw;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  all_tuples(T.n, N, cur, tuples);
  MinorCache cache(T);
  std::vector<LawReport> cases;
  const int kmax = law == MinorLaw::Corollary ? N : T.n;
  for (auto& a : tuples)
    for (auto& b : tuples)
      for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= kmax; ++l) {
          cases.push_back(minor_case(cache, T.n, law, {k, l, a, b}));
          if (!cases.back().passed()) goto done;
        }
done:
  auto r = summarize(law, T.n, N, cases, "index choices");
  r.ms = sw.ms();
  return {r};
}

LawReports verify_minor_comm_sample(const TMatrix& T, MinorLaw law, int N, int count, uint64_t seed) {
  Stopwatch sw;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(1, T.n), pos(1, N);
  MinorCache cache(T);
  std::vector<LawReport> cases;
  for (int s = 0; s < count; ++s) {
    MinorCase c;
    for (int p = 0; p < N; ++p) {
      c.a.push_back(idx(rng));
      c.b.push_back(idx(rng));
    }
    if (law == MinorLaw::Corollary) {
      c.k = pos(rng);
      c.l = pos(rng);
    } else {
      c.k = idx(rng);
      c.l = idx(rng);
    }
    cases.push_back(minor_case(cache, T.n, law, c));
    if (!cases.back().passed()) break;
  }
  auto r = summarize(law, T.n, N, cases, "sampled choices (seed " + std::to_string(seed) + ")");
  r.ms = sw.ms();
  return {r};
}

LawReports gt_subalgebra_checks(int n, bool with_center) {
  Stopwatch sw;
  std::vector<std::pair<std::string, UEAElement>> cs;
  for (int k = 1; k <= n; ++k) {
    auto c = P_coefficients(n, k);
    for (int j = 0; j < k; ++j) cs.push_back({"c(" + std::to_string(k) + ")_" + std::to_string(j), c[j]});
  }
  LawReports out;
  LawReport comm;
  comm.law = "center.commutative";
  comm.indices = "n=" + std::to_string(n);
  int pairs = 0;
  for (size_t x = 0; x < cs.size() && comm.passed(); ++x)
    for (size_t y = x + 1; y < cs.size() && comm.passed(); ++y) {
      ++pairs;
      auto b = bracket(cs[x].second, cs[y].second);
      if (!b.is_zero()) {
        comm.status = Status::Fail;
        comm.detail = "[" + cs[x].first + ", " + cs[y].first + "] leads with " + b.leading_term();
      }
    }
  if (comm.passed()) comm.detail = "all " + std::to_string(pairs) + " commutators vanish";
  out.push_back(comm);

  auto top = P_coefficients(n, n);
  LawReport trace;
  trace.law = "center.trace";
  trace.indices = "n=" + std::to_string(n);
  trace.status = top[n - 1].is_zero() ? Status::Pass : Status::Fail;
  trace.detail = top[n - 1].is_zero() ? "c(n)_{n-1} = 0" : "c(n)_{n-1} = " + top[n - 1].to_string();
  out.push_back(trace);

  if (with_center) {
    LawReport cen;
    cen.law = "center.central";
    cen.indices = "n=" + std::to_string(n);
    const auto& alg = Algebra::get(n);
    for (int j = 0; j < n - 1 && cen.passed(); ++j)
      for (int g = 0; g < alg.num_gens() && cen.passed(); ++g) {
        auto b = bracket(top[j], UEAElement::gen(n, g));
        if (!b.is_zero()) {
          cen.status = Status::Fail;
          cen.detail = "[c(n)_" + std::to_string(j) + ", " + alg.name(g) + "] leads with " + b.leading_term();
        }
      }
    if (cen.passed()) cen.detail = "every c(n)_j commutes with all " + std::to_string(alg.num_gens()) + " generators";
    out.push_back(cen);
  }
  double ms = sw.ms();
  for (auto& r : out) r.ms = ms / out.size();
  return out;
}

LawReport sl2_principal_minor_check() {
  Stopwatch sw;
  const int n = 2;
  const UEAElement e = UEAElement::e(n, 1, 2), f = UEAElement::e(n, 2, 1), h = UEAElement::h(n, 1);
  const UEAElement C = e * f + f * e + ScalarPoly(frac(1, 2)) * (h * h);
  const UEAElement one(n, ScalarPoly(1));
  const UEAElement expected = UEAElement(n, ScalarPoly::var(kU, 2)) -
                              ScalarPoly(frac(1, 4)) * ScalarPoly::hbar(2) * (ScalarPoly(2) * C + one);
  LawReport r = law_from_residual("minors.sl2_P2", "n=2", residual(principal_P(n, 2), LaurentOverUEA::from_poly(expected, {kU})));
  r.ms = sw.ms();
  return r;
}

}  // namespace qgiso
