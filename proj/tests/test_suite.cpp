#include <doctest.h>

#include <cstdlib>

#include "qgiso/suite.hpp"

using namespace qgiso;

TEST_CASE("default configuration and environment overrides") {
  unsetenv("QGISO_DEPTH");
  unsetenv("QGISO_HBAR_ORDER");
  auto c = default_config();
  CHECK(c.suite == "all");
  CHECK(c.n == 3);
  CHECK(c.depth == 6);
  CHECK(c.hbar_order == 6);
  CHECK(c.seed == 1);
  setenv("QGISO_DEPTH", "4", 1);
  setenv("QGISO_HBAR_ORDER", "9", 1);
  c = default_config();
  CHECK(c.depth == 4);
  CHECK(c.hbar_order == 9);
  setenv("QGISO_DEPTH", "x4", 1);
  CHECK_THROWS_AS(default_config(), usage_error);
  unsetenv("QGISO_DEPTH");
  unsetenv("QGISO_HBAR_ORDER");
}

TEST_CASE("validation") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  auto bad = [](auto mutate) {
    SuiteConfig x;
    mutate(x);
    CHECK_THROWS_AS(validate(x), usage_error);
  };
  bad([](SuiteConfig& x) { x.n = 5; });
  bad([](SuiteConfig& x) { x.n = 1; });
  bad([](SuiteConfig& x) { x.depth = 1; });
  bad([](SuiteConfig& x) { x.hbar_order = 17; });
  bad([](SuiteConfig& x) { x.rep = "adjoint"; });
  bad([](SuiteConfig& x) { x.format = "xml"; });
  bad([](SuiteConfig& x) { x.suite = "nope"; });
}

TEST_CASE("JSON report round trip and determinism") {
  SuiteConfig c;
  c.suite = "phi";
  c.n = 2;
  auto r = run_suite(c);
  CHECK(r.verdict());
  CHECK(parse_json(emit_json(r)) == r);
  auto r2 = run_suite(c);
  CHECK(emit_json(r, false) == emit_json(r2, false));
  CHECK(emit_json(r, false).find("\"ms\"") == std::string::npos);
  CHECK(emit_json(r).find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("a perturbed T matrix fails the rtt suite") {
  SuiteConfig c;
  c.suite = "rtt";
  c.n = 2;
  CHECK(run_suite(c).verdict());
  c.inject_fault = true;
  auto r = run_suite(c);
  CHECK_FALSE(r.verdict());
  CHECK(emit_text(r).find("verdict: fail") != std::string::npos);
}

TEST_CASE("psi at n=2 is a single implied record") {
  SuiteConfig c;
  c.suite = "psi";
  c.n = 2;
  auto r = run_suite(c);
  REQUIRE(r.laws.size() == 1);
  CHECK(r.laws[0].status == Status::Implied);
  CHECK(r.verdict());
}

TEST_CASE("text output") {
  SuiteConfig c;
  c.suite = "partialfractions";
  c.n = 2;
  c.depth = 4;
  auto t = emit(run_suite(c));
  CHECK(t.find("suite partialfractions  n=2") == 0);
  CHECK(t.find("verdict: pass (2 laws, 0 failed)") != std::string::npos);
}
