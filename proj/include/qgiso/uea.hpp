// U(sl_n) with PBW normal form and ScalarPoly coefficients.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qgiso/scalar.hpp"

namespace qgiso {

// Generator ids follow the PBW order: lowering e_kl (k>l), then h_1..h_{n-1}, then raising e_kl (k<l).
struct Generator {
  enum Kind { Cartan, Unit } kind;
  int i = 0;  // cartan index
  int k = 0, l = 0;  // matrix unit indices
  static Generator h(int i) { return {Cartan, i, 0, 0}; }
  static Generator e(int k, int l) { return {Unit, 0, k, l}; }
};

struct Mono {
  static constexpr int kCap = 31;
  uint8_t len = 0;
  std::array<uint8_t, kCap> g{};

  uint8_t last() const { return g[len - 1]; }
  Mono pop() const {
    Mono m = *this;
    m.g[--m.len] = 0;
    return m;
  }
  Mono push(uint8_t x) const;
  friend bool operator==(const Mono& a, const Mono& b) { return a.len == b.len && a.g == b.g; }
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.g < b.g;
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const noexcept;
};

class Algebra {
 public:
  static const Algebra& get(int n);

  int n() const { return n_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  int id(const Generator& g) const;
  int e(int k, int l) const { return id(Generator::e(k, l)); }
  int h(int i) const { return id(Generator::h(i)); }
  const Generator& gen(int id) const { return gens_[id]; }
  const std::string& name(int id) const { return names_[id]; }
  bool is_lowering(int id) const { return id < n_lower_; }
  bool is_cartan(int id) const { return id >= n_lower_ && id < n_lower_ + n_ - 1; }

  // [a, b] as a combination of generators
  const std::vector<std::pair<int, long>>& bracket(int a, int b) const { return br_[a * num_gens() + b]; }

  // straightened product M * g (memoized per thread)
  using Combo = std::vector<std::pair<Mono, long>>;
  const Combo& mono_times_gen(const Mono& m, int g) const;

 private:
  explicit Algebra(int n);
  int n_;
  int n_lower_;
  std::vector<Generator> gens_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<int, long>>> br_;
};

class UEAElement {
 public:
  using Term = std::pair<Mono, ScalarPoly>;

  UEAElement() = default;
  explicit UEAElement(int n) : n_(n) {}
  UEAElement(int n, const ScalarPoly& scalar);
  static UEAElement gen(int n, int id);
  static UEAElement h(int n, int i);
  static UEAElement e(int n, int k, int l);
  static UEAElement from_terms(int n, std::vector<Term> terms);  // normalizes

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ScalarPoly scalar_part() const;
  int degree() const;  // max PBW length, -1 for zero

  UEAElement operator-() const;
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
  friend UEAElement operator*(const ScalarPoly& c, const UEAElement& a);
  friend UEAElement operator*(const UEAElement& a, const ScalarPoly& c) { return c * a; }
  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UEAElement& a, const UEAElement& b) { return !(a == b); }

  UEAElement map_coeffs(const std::function<ScalarPoly(const ScalarPoly&)>& f) const;
  UEAElement substitute(const std::map<int, ScalarPoly>& binding) const;
  // coefficient of v^k, as an element free of v
  UEAElement coeff(int v, int k) const;
  int degree_in(int v) const;
  bool coeffs_only_vars(unsigned allowed) const;

  std::string to_string() const;
  // first term in canonical order, for residual reports
  std::string leading_term() const;

 private:
  int n_ = 0;
  std::vector<Term> terms_;  // sorted by Mono
};

UEAElement bracket(const UEAElement& a, const UEAElement& b);
UEAElement bracket_basis(int n, int a, int b);
UEAElement pow(const UEAElement& a, unsigned k);

// fundamental coweight; i = 0 and i = n give 0
UEAElement coweight(int i, int n);

// Adds c * (sum of terms) into an unordered accumulator and produces a normalized element.
class UEAAccumulator {
 public:
  explicit UEAAccumulator(int n);
  ~UEAAccumulator();
  UEAAccumulator(const UEAAccumulator&) = delete;
  UEAAccumulator& operator=(const UEAAccumulator&) = delete;
  void add(const Mono& m, const ScalarPoly& c);
  void add(const UEAElement& x, const ScalarPoly& c = ScalarPoly(1));
  UEAElement finish();

 private:
  struct Impl;
  int n_;
  Impl* impl_;
};

}  // namespace qgiso
