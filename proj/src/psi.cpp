#include "qgiso/psi.hpp"

namespace qgiso {

const char* psi_law_name(PsiLaw law) {
  switch (law) {
    case PsiLaw::Rtt: return "psi.rtt";
    case PsiLaw::Iteration: return "psi.iteration";
    case PsiLaw::DetIdentity: return "psi.det_identity";
  }
  return "?";
}

SeriesMatrix psi_operator(const MatrixFn& M, int k, int K) {
  const int m = M.size() - k;
  if (k < 0 || m < 2) throw std::out_of_range("psi_operator: level out of range");
  if (K < 2) throw std::invalid_argument("psi_operator: depth must be at least 2");
  SeriesMatrix out(M.n(), m);
  const ScalarPoly sh = ScalarPoly(frac(-k, 2)) * ScalarPoly::hbar();
  if (k == 0) {
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) out.entry(i, j) = M.at(i, j, kU, ScalarPoly());
    return out;
  }
  auto idx = range_tuple(1, k);
  auto inv = qminor(M, idx, idx, kU, sh).invert_monic(K);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      auto a = idx, b = idx;
      a.push_back(k + i);
      b.push_back(k + j);
      auto e = inv * qminor(M, a, b, kU, sh);
      Window w = e.window(kU);
      if (!w.exact() && w.low > 2 - K) throw truncation_error("psi_operator: depth exhausted");
      out.entry(i, j) = e.truncated(kU, 2 - K);
    }
  return out;
}

SeriesMatrix psi_operator(int n, int k, int K) { return psi_operator(TMatrixFn(build_T(n)), k, K); }

LawReports det_identity_check(const MatrixFn& phi, int l, const std::string& label) {
  LawReports out;
  const int m = phi.size();
  const ScalarPoly h = ScalarPoly::hbar();
  auto L = range_tuple(1, l);
  auto with = [&](std::vector<int> t, std::initializer_list<int> more) {
    for (int x : more) t.push_back(x);
    return t;
  };
  for (int a = l + 2; a <= m; ++a)
    for (int b = l + 2; b <= m; ++b) {
      auto lhs = qminor(phi, with(L, {l + 1, a}), with(L, {l + 1, b})) * qminor(phi, L, L, kU, h);
      auto rhs = qminor(phi, with(L, {l + 1}), with(L, {l + 1})) * qminor(phi, with(L, {a}), with(L, {b}), kU, h) -
                 qminor(phi, with(L, {a}), with(L, {l + 1})) * qminor(phi, with(L, {l + 1}), with(L, {b}), kU, h);
      out.push_back(law_from_residual(psi_law_name(PsiLaw::DetIdentity),
                                      label + " l=" + std::to_string(l) + " a,b=" + std::to_string(a) + "," +
                                          std::to_string(b),
                                      residual(lhs, rhs)));
    }
  return out;
}

LawReports verify_psi(int n, PsiLaw law, int k, int l, int K) {
  Stopwatch sw;
  LawReports out;
  const std::string base = "n=" + std::to_string(n);
  switch (law) {
    case PsiLaw::Rtt: {
      auto psi = psi_operator(n, k, K);
      const int m = psi.size();
      const ScalarPoly h = ScalarPoly::hbar();
      auto pref = LaurentOverUEA::from_poly(UEAElement(n, ScalarPoly::var(kU) - ScalarPoly::var(kV)), {kU, kV});
      auto at_u = [&](int i, int j) { return psi.entry(i, j); };
      auto at_v = [&](int i, int j) { return psi.entry(i, j).rename(kU, kV); };
      for (int form = 0; form < 2; ++form) {
        LawReport agg;
        agg.law = std::string(psi_law_name(law)) + (form ? ".swapped" : "");
        agg.indices = base + " k=" + std::to_string(k);
        agg.depth = K;
        int count = 0;
        std::string window;
        for (int a = 1; a <= m && agg.passed(); ++a)
          for (int b = 1; b <= m && agg.passed(); ++b)
            for (int c = 1; c <= m && agg.passed(); ++c)
              for (int d = 1; d <= m && agg.passed(); ++d) {
                auto lhs = pref * commutator(at_u(a, b), at_v(c, d));
                // (u-v)[psi_ab(u), psi_cd(v)] = hbar(psi_cb(v)psi_ad(u) - psi_cb(u)psi_ad(v)), and the
                // second variant hbar(psi_ad(u)psi_cb(v) - psi_ad(v)psi_cb(u))
                auto rhs = form == 0 ? at_v(c, b) * at_u(a, d) - at_u(c, b) * at_v(a, d)
                                     : at_u(a, d) * at_v(c, b) - at_v(a, d) * at_u(c, b);
                rhs = h * rhs;
                auto r = residual(lhs, rhs);
                ++count;
                window = r.window;
                if (!r.zero) {
                  agg.status = Status::Fail;
                  agg.detail = "(a,b,c,d)=(" + join_ints({a, b, c, d}) + ") first nonzero at " + r.first_nonzero;
                }
              }
        if (agg.passed()) agg.detail = "residual 0 for all " + std::to_string(count) + " index tuples on " + window;
        out.push_back(agg);
      }
      break;
    }
    case PsiLaw::Iteration: {
      if (k + l > n - 2) throw std::out_of_range("psi iteration undefined for these levels");
      auto inner = psi_operator(n, l, K);
      auto iter = psi_operator(inner, k, K);
      auto direct = psi_operator(n, k + l, K);
      LawReport agg;
      agg.law = psi_law_name(law);
      agg.indices = base + " k=" + std::to_string(k) + " l=" + std::to_string(l);
      agg.depth = K;
      std::string window;
      for (int i = 1; i <= direct.size() && agg.passed(); ++i)
        for (int j = 1; j <= direct.size() && agg.passed(); ++j) {
          auto r = residual(iter.entry(i, j), direct.entry(i, j));
          window = r.window;
          if (!r.zero) {
            agg.status = Status::Fail;
            agg.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") first nonzero at " + r.first_nonzero;
          }
        }
      if (agg.passed()) agg.detail = "all entries agree on " + window;
      out.push_back(agg);
      break;
    }
    case PsiLaw::DetIdentity: {
      auto rs = det_identity_check(TMatrixFn(build_T(n)), l, base);
      out.insert(out.end(), rs.begin(), rs.end());
      break;
    }
  }
  double ms = sw.ms();
  for (auto& r : out) r.ms = ms / out.size();
  return out;
}

}  // namespace qgiso
