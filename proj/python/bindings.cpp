#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgiso/phi.hpp"
#include "qgiso/spectra.hpp"
#include "qgiso/suite.hpp"
#include "qgiso/tmatrix.hpp"

namespace py = pybind11;
using namespace qgiso;

namespace {

std::string run_json(const std::string& suite, int n, int depth, int hbar_order, const std::string& rep, uint64_t seed,
                     const std::string& f_denominator) {
  SuiteConfig c = default_config();
  c.suite = suite;
  c.n = n;
  if (depth > 0) c.depth = depth;
  if (hbar_order > 0) c.hbar_order = hbar_order;
  c.rep = rep;
  c.format = "json";
  c.seed = seed;
  c.f_denominator = f_denominator == "printed" ? FDenominator::Printed : FDenominator::Shifted;
  return emit_json(run_suite(c));
}

// roots[v][k] as strings, levels 1..n
std::vector<std::vector<std::vector<std::string>>> roots(int n, const std::string& rep) {
  SpectrumTable s = spectrum_table(rep_by_name(n, rep));
  std::vector<std::vector<std::vector<std::string>>> out;
  for (const auto& per_vector : s.roots) {
    std::vector<std::vector<std::string>> levels;
    for (int k = 1; k <= n; ++k) {
      std::vector<std::string> r;
      for (const auto& x : per_vector[k]) r.push_back(x.get_str());
      levels.push_back(r);
    }
    out.push_back(levels);
  }
  return out;
}

// hbar coefficients of phi(E_k) or phi(F_k) in the eigenbasis: [p][i][j]
std::vector<std::vector<std::vector<std::string>>> phi_matrix(int n, const std::string& rep, int order,
                                                               const std::string& which, int k) {
  SpectrumTable s = spectrum_table(rep_by_name(n, rep));
  PhiImages im = phi_images(s, order);
  if (k < 1 || k >= n) throw py::index_error("k out of range");
  const HbarMatrix& m = which == "E" ? im.E[k - 1] : im.F[k - 1];
  std::vector<std::vector<std::vector<std::string>>> out;
  for (int p = 0; p < m.order(); ++p) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < m.dim(); ++i) {
      std::vector<std::string> row;
      for (int j = 0; j < m.dim(); ++j) row.push_back(m.coeff(p)(i, j).get_str());
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return out;
}

std::vector<std::string> g_plus(int order) {
  std::vector<std::string> out;
  const GSeries g = g_series(order);
  for (const auto& c : g.plus.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_qgiso, m) {
  m.doc() = "exact checks for U_hbar(sl_n), the Yangian evaluation map and the isomorphism phi";
  m.def("run_suite_json", &run_json, py::arg("suite"), py::arg("n") = 3, py::arg("depth") = 0,
        py::arg("hbar_order") = 0, py::arg("rep") = "defining", py::arg("seed") = 1,
        py::arg("f_denominator") = "shifted", py::call_guard<py::gil_scoped_release>());
  m.def("roots", &roots, py::arg("n"), py::arg("rep") = "defining");
  m.def("phi_matrix", &phi_matrix, py::arg("n"), py::arg("rep"), py::arg("order"), py::arg("which"), py::arg("k"));
  m.def("g_plus", &g_plus, py::arg("order"));
  m.def("principal_minor", [](int n, int k) { return principal_P(n, k).to_string(); }, py::arg("n"), py::arg("k"));
  py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
}
