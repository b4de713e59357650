// Finite-dimensional representations, the joint eigenbasis of the P_k coefficients, and roots of P_k.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qgiso/laurent.hpp"
#include "qgiso/linalg.hpp"
#include "qgiso/report.hpp"
#include "qgiso/uea.hpp"

namespace qgiso {

class spectrum_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a root diagonal failed to commute with a minor coefficient
class commutation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rep {
  int n = 0;
  int dim = 0;
  std::string name;
  std::vector<QMatrix> images;  // indexed by generator id

  const QMatrix& image(int id) const { return images[id]; }
  QMatrix e(int k, int l) const;
  QMatrix h(int i) const;
};

Rep defining_rep(int n);
Rep tensor_rep(const Rep& a, const Rep& b);
// "defining" or "tensor2"
Rep rep_by_name(int n, const std::string& name);
// throws std::logic_error naming the first failing bracket
void validate_rep(const Rep& r);
// images S^{-1} rho(g) S
Rep change_basis(const Rep& r, const QMatrix& S, const QMatrix& S_inv);

// x must have coefficients polynomial in hbar only
HbarMatrix rep_of_element(const Rep& r, const UEAElement& x, int order);

struct Eigenbasis {
  QMatrix basis;      // columns
  QMatrix basis_inv;
  std::vector<std::vector<Rational>> eigenvalues;  // [member][vector]
};
Eigenbasis simultaneous_eigenbasis(const std::vector<QMatrix>& family);

struct SpectrumTable {
  int n = 0;
  Rep rep;     // as given
  Rep rep_eb;  // in the eigenbasis
  Eigenbasis eb;
  // roots[v][k] for k = 0..n+1, ascending; a^(k)_i = hbar * roots[v][k][i]
  std::vector<std::vector<std::vector<Rational>>> roots;
  // eigen_poly[v][k] in t = u/hbar, monic of degree k
  std::vector<std::vector<QPoly>> eigen_poly;

  int dim() const { return rep.dim; }
  // diagonal matrix of the i-th root at level k, over hbar (rational part)
  std::vector<Rational> root_column(int k, int i) const;
};

SpectrumTable spectrum_table(const Rep& rep);

// sum_m (hbar w)^m q_m for the u-polynomial p = sum_m q_m u^m, with w diagonal (per vector);
// every q_m image must commute with diag(w), otherwise commutation_error
HbarMatrix minor_at_root(const SpectrumTable& s, const LaurentOverUEA& p, const std::vector<Rational>& w, int order);

// residues of ev(x^{sign}_k(u)): the pairs (gamma_l, B_l) with c_l = hbar gamma_l and
// ev(x_k(u)) = sum_l hbar/(u - c_l) B_l, built from roots and minors at roots
struct Residues {
  std::vector<std::vector<Rational>> gamma;  // [l][v]
  std::vector<HbarMatrix> B;
};
Residues residues_from_minors(const SpectrumTable& s, int k, int sign, int order);

// Compares the rep image of ev(x^{sign}_k(u)) with the residue sum to depth K.
LawReport verify_partial_fractions(const SpectrumTable& s, int k, int K, int sign);

}  // namespace qgiso
