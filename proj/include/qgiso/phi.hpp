// phi: U_hbar(sl_n) -> U(sl_n)[[hbar]] realized on a representation, mod hbar^N.
#pragma once

#include <cstdint>
#include <vector>

#include "qgiso/report.hpp"
#include "qgiso/spectra.hpp"

namespace qgiso {

// Root-difference denominators of phi(F_k): G-(d) G-(d - hbar), the same shift as phi(E_k),
// or G-(d) G-(d + hbar), the form obtained from the residue composition.
enum class FDenominator { Printed, Shifted };
const char* f_denominator_name(FDenominator f);

struct PhiOptions {
  FDenominator f_denominator = FDenominator::Shifted;
  // nonzero: permute the stored roots of every level on every vector before assembly
  uint64_t shuffle_seed = 0;
  bool reverse_roots = false;
};

struct PhiImages {
  int n = 0;
  int order = 0;
  std::string g_choice = "sqrt";
  FDenominator f_denominator = FDenominator::Shifted;
  std::vector<QMatrix> H;  // index k-1
  std::vector<HbarMatrix> E, F, K, K_inv;
  // rep images in the eigenbasis, for comparisons
  std::vector<QMatrix> e_up, e_down;
};

PhiImages phi_images(const SpectrumTable& s, int N, const PhiOptions& opt = {});

// QG1..QG4, the classical limit and K K^{-1} = 1
LawReports verify_qg(const PhiImages& im, const std::string& label);

// n = 2 only: phi(E), phi(F) against the closed form in the Casimir
LawReport sl2_closed_form_check(const SpectrumTable& s, int N);

// phi(E_k), phi(F_k) rebuilt from the residues of the rep image of ev(x_k(u)) and the factorization of ev(xi_k)
LawReports compose_crosscheck(const SpectrumTable& s, int N, int K);

// phi_images with shuffled root order equals the sorted one
LawReport root_symmetry_check(const SpectrumTable& s, int N, uint64_t seed);

}  // namespace qgiso
