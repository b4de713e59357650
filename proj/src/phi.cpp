#include "qgiso/phi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "qgiso/evaluation.hpp"

namespace qgiso {

const char* f_denominator_name(FDenominator f) { return f == FDenominator::Printed ? "printed" : "shifted"; }

namespace {

struct GTable {
  GSeries g;
  int order;
  explicit GTable(int N) : g(g_series(N)), order(N) {}
  // G(hbar * rho)
  HbarSeries plus(const Rational& rho) const { return TruncSeries(kHbar, g.plus.coeffs()).scale_arg(rho); }
  HbarSeries minus(const Rational& rho) const { return TruncSeries(kHbar, g.minus.coeffs()).scale_arg(rho); }
  HbarSeries at(int sign, const Rational& rho) const { return sign > 0 ? plus(rho) : minus(rho); }
};

HbarSeries inv(const HbarSeries& s) { return series_map(s, SeriesFn::Inverse); }

// hbar / (q - q^{-1})
HbarSeries inv_sinhc(int N) { return inv(sinhc_series(kHbar, N)); }

// q + q^{-1} = 2 cosh(hbar/2)
HbarSeries q_plus_q_inv(int N) {
  HbarSeries s(kHbar, N);
  Rational t = 2;
  for (int m = 0; m < N; ++m) {
    if (m % 2 == 0) s[m] = t;
    t /= 2 * (m + 1);
  }
  return s;
}

LawReport hbar_law(const std::string& law, const std::string& idx, const HbarMatrix& diff, int N) {
  LawReport r;
  r.law = law;
  r.indices = idx;
  r.order = N;
  if (diff.is_zero()) {
    r.detail = "residual 0 mod hbar^" + std::to_string(N);
  } else {
    r.status = Status::Fail;
    r.detail = "first nonzero at " + diff.first_nonzero();
  }
  return r;
}

std::string kidx(const char* what, int k) { return std::string(what) + " k=" + std::to_string(k); }

// Roots are relabelled per level and per eigen-polynomial class, so that the i-th root stays a
// function of the P_k spectrum; an independent relabelling per vector would not commute with the minors.
SpectrumTable reordered(const SpectrumTable& s, const PhiOptions& opt) {
  if (!opt.shuffle_seed && !opt.reverse_roots) return s;
  SpectrumTable t = s;
  std::mt19937_64 rng(opt.shuffle_seed);
  std::map<std::pair<int, std::string>, std::vector<int>> perms;
  for (size_t v = 0; v < t.roots.size(); ++v)
    for (size_t k = 0; k < t.roots[v].size(); ++k) {
      auto& level = t.roots[v][k];
      if (opt.reverse_roots) std::reverse(level.begin(), level.end());
      if (!opt.shuffle_seed) continue;
      auto key = std::make_pair(static_cast<int>(k), s.eigen_poly[v][k].to_string());
      auto it = perms.find(key);
      if (it == perms.end()) {
        std::vector<int> p(level.size());
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        it = perms.emplace(key, std::move(p)).first;
      }
      std::vector<Rational> moved(level.size());
      for (size_t i = 0; i < level.size(); ++i) moved[i] = level[it->second[i]];
      level = std::move(moved);
    }
  return t;
}

}  // namespace

PhiImages phi_images(const SpectrumTable& s_in, int N, const PhiOptions& opt) {
  if (N < 1) throw std::invalid_argument("phi_images: truncation order must be positive");
  const SpectrumTable s = reordered(s_in, opt);
  const int n = s.n, d = s.dim();
  const GTable G(N);
  const HbarSeries pref = inv_sinhc(N);
  PhiImages im;
  im.n = n;
  im.order = N;
  im.f_denominator = opt.f_denominator;
  for (int k = 1; k < n; ++k) {
    im.H.push_back(s.rep_eb.h(k));
    im.K.push_back(exp_hbar(s.rep_eb.h(k), frac(1, 2), N));
    im.K_inv.push_back(exp_hbar(s.rep_eb.h(k), frac(-1, 2), N));
    im.e_up.push_back(s.rep_eb.e(k, k + 1));
    im.e_down.push_back(s.rep_eb.e(k + 1, k));
    for (int sign : {1, -1}) {
      const Residues res = residues_from_minors(s, k, sign, N);
      HbarMatrix sum(d, N);
      for (int i = 0; i < k; ++i) {
        std::vector<HbarSeries> factor(d);
        for (int v = 0; v < d; ++v) {
          const auto& r = s.roots[v];
          const Rational& a = r[k][i];
          HbarSeries num = HbarSeries::constant(kHbar, N, 1), den = num;
          // neighbour levels enter at a - b -+ hbar/2
          for (int lev : {k - 1, k + 1})
            for (const Rational& b : r[lev]) num = num * G.at(sign, a - b - frac(sign, 2));
          for (int c = 0; c < k; ++c) {
            if (c == i) continue;
            Rational diff = a - r[k][c];
            Rational second = diff - 1;
            if (sign < 0 && opt.f_denominator == FDenominator::Shifted) second = diff + 1;
            den = den * G.at(sign, diff) * G.at(sign, second);
          }
          factor[v] = num * inv(den);
        }
        sum = sum + HbarMatrix::diagonal(factor) * res.B[i];
      }
      (sign > 0 ? im.E : im.F).push_back(pref * sum);
    }
  }
  return im;
}

LawReports verify_qg(const PhiImages& im, const std::string& label) {
  Stopwatch sw;
  LawReports out;
  const int r = im.n - 1, N = im.order;
  if (r < 1) return out;
  const int d = im.H[0].rows();
  auto idx = [&](const char* tag, int i, int j) {
    return label + " i,j=" + std::to_string(i) + "," + std::to_string(j) + (*tag ? std::string(" ") + tag : "");
  };
  auto Hm = [&](int i) { return HbarMatrix(im.H[i - 1], N); };
  const HbarMatrix zero(d, N);

  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) out.push_back(hbar_law("qg.QG1", idx("", i, j), commutator(Hm(i), Hm(j)), N));

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      Rational a = cartan_entry(i, j);
      out.push_back(hbar_law("qg.QG2", idx("E", i, j), commutator(Hm(i), im.E[j - 1]) - a * im.E[j - 1], N));
      out.push_back(hbar_law("qg.QG2", idx("F", i, j), commutator(Hm(i), im.F[j - 1]) + a * im.F[j - 1], N));
    }

  const HbarSeries pref = inv_sinhc(N);
  for (int i = 1; i <= r; ++i) {
    HbarMatrix Kp = exp_hbar(im.H[i - 1], frac(1, 2), N + 1), Km = exp_hbar(im.H[i - 1], frac(-1, 2), N + 1);
    HbarMatrix rhs = pref * (Kp - Km).shift_down(1);
    for (int j = 1; j <= r; ++j) {
      HbarMatrix lhs = commutator(im.E[i - 1], im.F[j - 1]);
      out.push_back(hbar_law("qg.QG3", idx("", i, j), i == j ? lhs - rhs : lhs, N));
    }
  }

  const HbarSeries qq = q_plus_q_inv(N);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i == j) continue;
      for (int which = 0; which < 2; ++which) {
        const auto& X = which ? im.F : im.E;
        const HbarMatrix& a = X[i - 1];
        const HbarMatrix& b = X[j - 1];
        HbarMatrix res = std::abs(i - j) == 1 ? a * a * b - qq * (a * b * a) + b * a * a : commutator(a, b);
        out.push_back(hbar_law("qg.QG4", idx(which ? "F" : "E", i, j), res, N));
      }
    }

  for (int k = 1; k <= r; ++k) {
    HbarMatrix dE = im.E[k - 1].truncated(1) - HbarMatrix(im.e_up[k - 1], 1);
    HbarMatrix dF = im.F[k - 1].truncated(1) - HbarMatrix(im.e_down[k - 1], 1);
    out.push_back(hbar_law("qg.classical_limit", label + " " + kidx("E", k), dE, 1));
    out.push_back(hbar_law("qg.classical_limit", label + " " + kidx("F", k), dF, 1));
    out.push_back(hbar_law("qg.K_inverse", label + " " + kidx("K", k),
                           im.K[k - 1] * im.K_inv[k - 1] - HbarMatrix::identity(d, N), N));
  }
  double ms = sw.ms();
  for (auto& x : out) x.ms = ms / out.size();
  return out;
}

LawReport sl2_closed_form_check(const SpectrumTable& s, int N) {
  Stopwatch sw;
  if (s.n != 2) throw std::invalid_argument("sl2_closed_form_check: n must be 2");
  const int d = s.dim();
  const Rep& R = s.rep_eb;
  const QMatrix h = R.h(1), e = R.e(1, 2), f = R.e(2, 1);
  const QMatrix C = e * f + f * e + frac(1, 2) * (h * h);
  if (!C.is_diagonal() || !h.is_diagonal()) throw std::logic_error("sl2_closed_form_check: Casimir not diagonal");
  const GTable G(N);
  std::vector<HbarSeries> fe(d), ff(d);
  for (int v = 0; v < d; ++v) {
    Rational x = 2 * C(v, v) + 1;
    x.canonicalize();
    if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
      throw spectrum_error("sl2_closed_form_check: sqrt(2C+1) is irrational on this representation");
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
    const Rational sq(num, den), w = h(v, v) / 2;
    fe[v] = G.plus(w - (1 + sq) / 2) * G.plus(w - (1 - sq) / 2);
    ff[v] = G.minus(w + (1 + sq) / 2) * G.minus(w + (1 - sq) / 2);
  }
  const HbarSeries pref = inv_sinhc(N);
  HbarMatrix closedE = pref * (HbarMatrix::diagonal(fe) * HbarMatrix(e, N));
  HbarMatrix closedF = pref * (HbarMatrix::diagonal(ff) * HbarMatrix(f, N));
  PhiImages im = phi_images(s, N);
  LawReport r = hbar_law("qg.sl2_closed_form", "rep=" + s.rep.name + " E", im.E[0] - closedE, N);
  if (r.passed()) {
    r = hbar_law("qg.sl2_closed_form", "rep=" + s.rep.name, im.F[0] - closedF, N);
    if (!r.passed()) r.detail = "F: " + r.detail;
  } else {
    r.indices = "rep=" + s.rep.name;
    r.detail = "E: " + r.detail;
  }
  r.ms = sw.ms();
  return r;
}

LawReports compose_crosscheck(const SpectrumTable& s, int N, int K) {
  Stopwatch sw;
  LawReports out;
  const int n = s.n, d = s.dim();
  const GTable G(N);
  const PhiImages im = phi_images(s, N);
  const HbarSeries pref = inv(G.plus(1));
  const std::string base = "n=" + std::to_string(n) + " rep=" + s.rep.name;
  for (int k = 1; k < n; ++k)
    for (int sign : {1, -1}) {
      LawReport rep;
      rep.law = "qg.compose";
      rep.indices = base + " " + kidx(sign > 0 ? "E" : "F", k);
      rep.order = N;
      rep.depth = K;
      if (K < k + 1) throw std::invalid_argument("compose_crosscheck: depth must exceed the level");
      // coefficients of u^{-m-1}, with hbar^{m+1} removed
      auto series = ev_current(n, sign > 0 ? CurrentKind::XPlus : CurrentKind::XMinus, k, K);
      std::vector<QMatrix> Y;
      for (int m = 0; m < K && rep.passed(); ++m) {
        HbarMatrix y = rep_of_element(s.rep_eb, series.coeff(-m - 1), m + 3).shift_down(m + 1);
        if (!y.coeff(1).is_zero()) throw std::logic_error("compose_crosscheck: series coefficient not homogeneous");
        Y.push_back(y.coeff(0));
      }
      // per row, solve the Vandermonde system sum_l gamma_l^m B_l = Y_m, m < k
      std::vector<QMatrix> B(k, QMatrix(d, d));
      for (int v = 0; v < d && rep.passed(); ++v) {
        std::vector<Rational> gamma(k);
        for (int l = 0; l < k; ++l) gamma[l] = s.roots[v][k][l] - frac(sign, 2);
        QMatrix V(k, k);
        for (int m = 0; m < k; ++m)
          for (int l = 0; l < k; ++l) {
            Rational p = 1;
            for (int t = 0; t < m; ++t) p *= gamma[l];
            V(m, l) = p;
          }
        QMatrix Vi = inverse(V);
        for (int l = 0; l < k; ++l)
          for (int col = 0; col < d; ++col) {
            Rational x = 0;
            for (int m = 0; m < k; ++m) x += Vi(l, m) * Y[m](v, col);
            B[l](v, col) = x;
          }
        for (int m = k; m < K; ++m)
          for (int col = 0; col < d; ++col) {
            Rational x = 0;
            for (int l = 0; l < k; ++l) {
              Rational p = 1;
              for (int t = 0; t < m; ++t) p *= gamma[l];
              x += p * B[l](v, col);
            }
            if (x != Y[m](v, col)) {
              rep.status = Status::Fail;
              rep.detail = "series is not a sum of " + std::to_string(k) + " simple poles: row " +
                           std::to_string(v + 1) + " at u^" + std::to_string(-m - 1);
            }
          }
      }
      if (!rep.passed()) {
        out.push_back(rep);
        continue;
      }
      HbarMatrix sum(d, N);
      for (int l = 0; l < k; ++l) {
        std::vector<HbarSeries> factor(d);
        for (int v = 0; v < d; ++v) {
          const auto& r = s.roots[v];
          const Rational c = r[k][l] - frac(sign, 2);
          HbarSeries num = HbarSeries::constant(kHbar, N, 1), den = num;
          for (int lev : {k - 1, k + 1})
            for (const Rational& a : r[lev]) num = num * G.at(sign, c - a);
          for (const Rational& a : r[k]) {
            den = den * G.at(sign, c - (a - frac(1, 2)));
            den = den * G.at(sign, c - (a + frac(1, 2)));
          }
          factor[v] = num * inv(den);
        }
        sum = sum + HbarMatrix::diagonal(factor) * HbarMatrix(B[l], N);
      }
      HbarMatrix composed = pref * sum;
      const HbarMatrix& direct = sign > 0 ? im.E[k - 1] : im.F[k - 1];
      LawReport cmp = hbar_law(rep.law, rep.indices, composed - direct, N);
      cmp.depth = K;
      out.push_back(cmp);
    }
  double ms = sw.ms();
  for (auto& x : out) x.ms = ms / out.size();
  return out;
}

LawReport root_symmetry_check(const SpectrumTable& s, int N, uint64_t seed) {
  Stopwatch sw;
  const PhiImages base = phi_images(s, N);
  LawReport r;
  r.law = "qg.root_symmetry";
  r.indices = "n=" + std::to_string(s.n) + " rep=" + s.rep.name + " seed=" + std::to_string(seed);
  r.order = N;
  try {
    for (int variant = 0; variant < 2 && r.passed(); ++variant) {
      PhiOptions opt;
      if (variant == 0) opt.reverse_roots = true;
      else opt.shuffle_seed = seed ? seed : 1;
      const PhiImages other = phi_images(s, N, opt);
      for (int k = 1; k < s.n && r.passed(); ++k)
        for (int which = 0; which < 2 && r.passed(); ++which) {
          const HbarMatrix diff = which ? other.F[k - 1] - base.F[k - 1] : other.E[k - 1] - base.E[k - 1];
          if (!diff.is_zero()) {
            r.status = Status::Fail;
            r.detail = std::string(variant ? "shuffled" : "reversed") + " roots change " + (which ? "F_" : "E_") +
                       std::to_string(k) + " at " + diff.first_nonzero();
          }
        }
    }
  } catch (const commutation_error& e) {
    r.status = Status::Fail;
    r.detail = std::string("commutation: ") + e.what();
  }
  if (r.passed()) r.detail = "reversed and shuffled root orders give identical images mod hbar^" + std::to_string(N);
  r.ms = sw.ms();
  return r;
}

}  // namespace qgiso
