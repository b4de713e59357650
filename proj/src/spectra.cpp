#include "qgiso/spectra.hpp"

#include <algorithm>
#include <unordered_map>

#include "qgiso/evaluation.hpp"
#include "qgiso/tmatrix.hpp"

namespace qgiso {

QMatrix Rep::e(int k, int l) const { return images[Algebra::get(n).e(k, l)]; }
QMatrix Rep::h(int i) const { return images[Algebra::get(n).h(i)]; }

Rep defining_rep(int n) {
  if (n < 2) throw std::invalid_argument("defining_rep: n must be at least 2");
  const auto& alg = Algebra::get(n);
  Rep r{n, n, "defining", {}};
  for (int id = 0; id < alg.num_gens(); ++id) {
    const Generator& g = alg.gen(id);
    QMatrix m(n, n);
    if (g.kind == Generator::Cartan) {
      m(g.i - 1, g.i - 1) = 1;
      m(g.i, g.i) = -1;
    } else {
      m(g.k - 1, g.l - 1) = 1;
    }
    r.images.push_back(m);
  }
  validate_rep(r);
  return r;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor_rep: rank mismatch");
  Rep r{a.n, a.dim * b.dim, a.name + "*" + b.name, {}};
  const QMatrix ia = QMatrix::identity(a.dim), ib = QMatrix::identity(b.dim);
  for (size_t id = 0; id < a.images.size(); ++id)
    r.images.push_back(kron(a.images[id], ib) + kron(ia, b.images[id]));
  validate_rep(r);
  return r;
}

Rep rep_by_name(int n, const std::string& name) {
  if (name == "defining") return defining_rep(n);
  if (name == "tensor2") {
    Rep d = defining_rep(n);
    Rep t = tensor_rep(d, d);
    t.name = "tensor2";
    return t;
  }
  throw std::invalid_argument("unknown representation '" + name + "'");
}

void validate_rep(const Rep& r) {
  const auto& alg = Algebra::get(r.n);
  if (static_cast<int>(r.images.size()) != alg.num_gens()) throw std::logic_error("rep: wrong number of images");
  for (int a = 0; a < alg.num_gens(); ++a)
    for (int b = 0; b < alg.num_gens(); ++b) {
      QMatrix rhs(r.dim, r.dim);
      for (auto [c, coef] : alg.bracket(a, b)) rhs += Rational(coef) * r.images[c];
      if (commutator(r.images[a], r.images[b]) != rhs)
        throw std::logic_error("rep " + r.name + ": bracket [" + alg.name(a) + "," + alg.name(b) + "] not respected");
    }
}

Rep change_basis(const Rep& r, const QMatrix& S, const QMatrix& S_inv) {
  Rep out = r;
  for (auto& m : out.images) m = S_inv * m * S;
  return out;
}

HbarMatrix rep_of_element(const Rep& r, const UEAElement& x, int order) {
  if (!x.coeffs_only_vars(1u << kHbar))
    throw std::invalid_argument("rep_of_element: coefficient depends on an indeterminate other than hbar");
  std::unordered_map<Mono, QMatrix, MonoHash> cache;
  std::function<const QMatrix&(const Mono&)> image = [&](const Mono& m) -> const QMatrix& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    QMatrix v = m.len == 0 ? QMatrix::identity(r.dim) : image(m.pop()) * r.images[m.last()];
    return cache.emplace(m, std::move(v)).first->second;
  };
  HbarMatrix out(r.dim, order);
  for (const auto& [mono, c] : x.terms()) {
    const QMatrix& m = image(mono);
    for (int p = 0; p < order; ++p) {
      Rational a = c.coeff(kHbar, p).constant_term();
      if (sgn(a) != 0) out.coeff(p) += a * m;
    }
  }
  return out;
}

namespace {

Rational pow_q(const Rational& x, int m) {
  Rational r = 1;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

int leading_row(const QMatrix& B) {
  for (int i = 0; i < B.rows(); ++i)
    if (sgn(B(i, 0)) != 0) return i;
  return B.rows();
}

QMatrix restrict_to(const QMatrix& A, const QMatrix& B) {
  QMatrix Bt = B.transpose();
  QMatrix M = inverse(Bt * B) * Bt * A * B;
  if (B * M != A * B) throw spectrum_error("simultaneous_eigenbasis: subspace not invariant");
  return M;
}

}  // namespace

Eigenbasis simultaneous_eigenbasis(const std::vector<QMatrix>& family) {
  if (family.empty()) throw std::invalid_argument("simultaneous_eigenbasis: empty family");
  const int d = family[0].rows();
  for (size_t a = 0; a < family.size(); ++a)
    for (size_t b = a + 1; b < family.size(); ++b)
      if (!commutator(family[a], family[b]).is_zero())
        throw spectrum_error("simultaneous_eigenbasis: members " + std::to_string(a) + " and " + std::to_string(b) +
                             " do not commute");
  std::vector<QMatrix> blocks{QMatrix::identity(d)};
  for (const QMatrix& A : family) {
    std::vector<QMatrix> next;
    for (const QMatrix& B : blocks) {
      QMatrix M = restrict_to(A, B);
      if (M.is_scalar()) {
        next.push_back(B);
        continue;
      }
      std::vector<Rational> roots;
      try {
        roots = rational_roots(charpoly(M), true);
      } catch (const incomplete_splitting&) {
        throw spectrum_error("simultaneous_eigenbasis: irrational spectrum");
      }
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      int found = 0;
      std::vector<QMatrix> parts;
      for (const Rational& lam : roots) {
        QMatrix ns = nullspace(M - lam * QMatrix::identity(M.rows()));
        found += ns.cols();
        parts.push_back(B * ns);
      }
      if (found < M.rows()) throw spectrum_error("simultaneous_eigenbasis: non-semisimple action");
      // keep the ambient order where possible: by the first nonzero row of the leading vector
      std::stable_sort(parts.begin(), parts.end(),
                       [](const QMatrix& a, const QMatrix& b) { return leading_row(a) < leading_row(b); });
      for (auto& p : parts) next.push_back(std::move(p));
    }
    blocks = std::move(next);
  }
  Eigenbasis eb;
  eb.basis = hstack(blocks);
  eb.basis_inv = inverse(eb.basis);
  for (const QMatrix& A : family) {
    QMatrix D = eb.basis_inv * A * eb.basis;
    if (!D.is_diagonal()) throw spectrum_error("simultaneous_eigenbasis: member not diagonal in the joint basis");
    std::vector<Rational> ev(d);
    for (int v = 0; v < d; ++v) ev[v] = D(v, v);
    eb.eigenvalues.push_back(std::move(ev));
  }
  return eb;
}

std::vector<Rational> SpectrumTable::root_column(int k, int i) const {
  std::vector<Rational> c(dim());
  for (int v = 0; v < dim(); ++v) c[v] = roots[v][k][i];
  return c;
}

SpectrumTable spectrum_table(const Rep& rep) {
  const int n = rep.n;
  SpectrumTable s;
  s.n = n;
  s.rep = rep;
  std::vector<QMatrix> family;
  std::vector<std::pair<int, int>> where;  // (k, j) per member
  for (int k = 1; k <= n; ++k) {
    auto cs = P_coefficients(n, k);
    for (int j = 0; j < k; ++j) {
      HbarMatrix m = rep_of_element(rep, cs[j], 2);
      if (!m.coeff(1).is_zero()) throw std::logic_error("spectrum_table: P coefficient depends on hbar");
      family.push_back(m.coeff(0));
      where.emplace_back(k, j);
    }
  }
  s.eb = simultaneous_eigenbasis(family);
  s.rep_eb = change_basis(rep, s.eb.basis, s.eb.basis_inv);
  const int d = rep.dim;
  s.roots.assign(d, std::vector<std::vector<Rational>>(n + 2));
  s.eigen_poly.assign(d, std::vector<QPoly>(n + 2, QPoly({Rational(1)})));
  for (int v = 0; v < d; ++v)
    for (int k = 1; k <= n; ++k) {
      std::vector<Rational> c(k + 1);
      c[k] = 1;
      for (size_t f = 0; f < family.size(); ++f)
        if (where[f].first == k) c[where[f].second] = s.eb.eigenvalues[f][v];
      QPoly p(c);
      std::vector<Rational> r;
      try {
        r = rational_roots(p, true);
      } catch (const incomplete_splitting&) {
        throw spectrum_error("spectrum_table: P_" + std::to_string(k) + " does not split on vector " +
                             std::to_string(v + 1));
      }
      for (size_t i = 1; i < r.size(); ++i)
        if (r[i] == r[i - 1])
          throw spectrum_error("spectrum_table: repeated root of P_" + std::to_string(k) + " on vector " +
                               std::to_string(v + 1));
      s.eigen_poly[v][k] = p;
      s.roots[v][k] = std::move(r);
    }
  return s;
}

HbarMatrix minor_at_root(const SpectrumTable& s, const LaurentOverUEA& p, const std::vector<Rational>& w, int order) {
  const int d = s.dim();
  const QMatrix W = QMatrix::diag(w);
  HbarMatrix left(d, order), right(d, order);
  if (p.is_zero()) return left;
  const Window win = p.window(kU);
  if (!win.exact()) throw std::invalid_argument("minor_at_root: polynomial expected");
  for (int m = 0; m <= win.top; ++m) {
    HbarMatrix q = rep_of_element(s.rep_eb, p.coeff(m), order);
    for (int a = 0; a < q.order(); ++a)
      if (!commutator(W, q.coeff(a)).is_zero())
        throw commutation_error("root diagonal does not commute with the u^" + std::to_string(m) +
                                " minor coefficient at hbar^" + std::to_string(a));
    QMatrix Wm = QMatrix::identity(d);
    for (int t = 0; t < m; ++t) Wm = Wm * W;
    HbarMatrix pw(Wm, order);
    pw = pw.shift_up(m);
    left = left + pw * q;
    right = right + q * pw;
  }
  if (!(left == right)) throw commutation_error("left and right evaluation at the root differ");
  return left;
}

Residues residues_from_minors(const SpectrumTable& s, int k, int sign, int order) {
  const int n = s.n, d = s.dim();
  const TMatrixFn T(build_T(n));
  const int work = order + k;
  Residues res;
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> gamma(d), w(d), inv_diff(d);
    for (int v = 0; v < d; ++v) {
      const auto& r = s.roots[v][k];
      gamma[v] = r[i] - frac(sign > 0 ? 1 : -1, 2);
      w[v] = r[i] - frac(sign > 0 ? k - 1 : k - 3, 2);
      Rational prod = 1;
      for (int c = 0; c < k; ++c)
        if (c != i) prod *= r[i] - r[c];
      inv_diff[v] = 1 / prod;
    }
    HbarMatrix B(d, order);
    for (int j = 1; j <= k; ++j) {
      std::vector<int> hat;
      for (int t = 1; t <= k; ++t)
        if (t != j) hat.push_back(t);
      auto lower = range_tuple(1, k - 1);
      auto minor = sign > 0 ? qminor(T, hat, lower) : qminor(T, lower, hat);
      HbarMatrix q = minor_at_root(s, minor, w, work).shift_down(k - 1).truncated(order);
      QMatrix e = sign > 0 ? s.rep_eb.e(j, k + 1) : s.rep_eb.e(k + 1, j);
      Rational sg = (k + j) % 2 == 0 ? 1 : -1;
      B = B + (sg * HbarMatrix(QMatrix::diag(inv_diff), order)) * q * HbarMatrix(e, order);
    }
    res.gamma.push_back(gamma);
    res.B.push_back(B);
  }
  return res;
}

LawReport verify_partial_fractions(const SpectrumTable& s, int k, int K, int sign) {
  Stopwatch sw;
  LawReport rep;
  rep.law = "partial_fractions";
  rep.indices = "n=" + std::to_string(s.n) + " rep=" + s.rep.name + " k=" + std::to_string(k) +
                (sign > 0 ? " +" : " -");
  rep.depth = K;
  if (K < 2) throw std::invalid_argument("verify_partial_fractions: depth must be at least 2");
  const int d = s.dim(), order = K + 2;
  try {
    auto series = ev_current(s.n, sign > 0 ? CurrentKind::XPlus : CurrentKind::XMinus, k, K);
    Residues res = residues_from_minors(s, k, sign, order);
    for (int m = 0; m < K && rep.passed(); ++m) {
      HbarMatrix direct = rep_of_element(s.rep_eb, series.coeff(-m - 1), order);
      HbarMatrix sum(d, order);
      for (size_t l = 0; l < res.B.size(); ++l) {
        std::vector<Rational> cm(d);
        for (int v = 0; v < d; ++v) cm[v] = pow_q(res.gamma[l][v], m);
        sum = sum + HbarMatrix(QMatrix::diag(cm), order).shift_up(m + 1) * res.B[l];
      }
      HbarMatrix diff = direct - sum;
      if (!diff.is_zero()) {
        rep.status = Status::Fail;
        rep.detail = "u^" + std::to_string(-m - 1) + " coefficient differs at " + diff.first_nonzero();
      }
    }
    if (rep.passed()) rep.detail = "residue sum equals the series on u^[-1..-" + std::to_string(K) + "]";
  } catch (const commutation_error& e) {
    rep.status = Status::Fail;
    rep.detail = std::string("commutation: ") + e.what();
  }
  rep.ms = sw.ms();
  return rep;
}

}  // namespace qgiso
