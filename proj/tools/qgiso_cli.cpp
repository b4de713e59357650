// qgiso verify <suite> [--n N] [--depth K] [--hbar-order N] [--rep R] [--format F] [--seed S]
#include <iostream>

#include <CLI11.hpp>

#include "qgiso/suite.hpp"

int main(int argc, char** argv) {
  using namespace qgiso;
  SuiteConfig cfg;
  try {
    cfg = default_config();
  } catch (const usage_error& e) {
    std::cerr << "qgiso: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact verification of the quantum group, Yangian and evaluation identities"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "rtt, minors, center, psi, partialfractions, yangian, phi or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", cfg.n, "rank parameter n of sl_n")->check(CLI::Range(2, 4));
  verify->add_option("--depth", cfg.depth, "Laurent depth K")->check(CLI::Range(2, 12));
  verify->add_option("--hbar-order", cfg.hbar_order, "hbar truncation order N")->check(CLI::Range(2, 16));
  verify->add_option("--rep", cfg.rep, "representation for partialfractions and phi")
      ->check(CLI::IsMember({"defining", "tensor2"}));
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", cfg.seed, "seed for randomized instances");
  std::string fden = "shifted";
  verify->add_option("--f-denominator", fden, "root-difference shift in phi(F): shifted or printed")
      ->check(CLI::IsMember({"shifted", "printed"}));
  verify->add_flag("--inject-fault", cfg.inject_fault, "perturb T before the T-based suites")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.f_denominator = fden == "printed" ? FDenominator::Printed : FDenominator::Shifted;

  try {
    SuiteReport r = run_suite(cfg);
    std::cout << emit(r);
    return r.verdict() ? 0 : 1;
  } catch (const usage_error& e) {
    std::cerr << "qgiso: " << e.what() << "\n";
    return 2;
  }
}
