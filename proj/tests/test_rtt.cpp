#include <doctest.h>

#include "qgiso/rtt.hpp"

using namespace qgiso;

TEST_CASE("antisymmetrizer scalars") {
  CHECK(c_N(2) == -ScalarPoly::hbar());
  CHECK(c_N(3) == ScalarPoly(-2) * ScalarPoly::hbar(3));
  // (-hbar)^6 * 1! 2! 3! at N = 4
  CHECK(c_N(4) == ScalarPoly(12) * ScalarPoly::hbar(6));
}

TEST_CASE("RTT family at n=2 and n=3") {
  for (int n : {2, 3}) {
    for (RttLaw law : {RttLaw::Pairwise, RttLaw::Entrywise}) CHECK(all_passed(verify_rtt_family(law, n, 2)));
    for (int N : {2, 3}) {
      CHECK(all_passed(verify_rtt_family(RttLaw::Antisym, n, N)));
      CHECK(all_passed(verify_rtt_family(RttLaw::CN, n, N)));
    }
  }
  CHECK(all_passed(verify_rtt_family(RttLaw::Multi, 2, 3)));
}

TEST_CASE("a perturbed T breaks the RTT relation") {
  TMatrix T = build_T(2);
  T.at(1, 2) += UEAElement(2, ScalarPoly::hbar());
  T.modified = true;
  auto rs = verify_rtt_family(T, RttLaw::Pairwise, 2);
  REQUIRE_FALSE(rs.empty());
  CHECK_FALSE(all_passed(rs));
  CHECK(rs[0].detail.find("differs") != std::string::npos);
}

TEST_CASE("the two factorized forms of the multi R-matrix coincide") {
  std::vector<ScalarPoly> args{ScalarPoly::var(kU1), ScalarPoly::var(kU1 + 1), ScalarPoly::var(kU1 + 2)};
  CHECK(multi_R_matrix(2, args, false) == multi_R_matrix(2, args, true));
}

TEST_CASE("commutation with quantum minors") {
  const TMatrix T = build_T(3);
  MinorCase c{1, 2, {1, 3}, {2, 3}};
  for (MinorLaw law : {MinorLaw::PropFirst, MinorLaw::PropSecond}) CHECK(check_minor_case(T, law, c).passed());
  MinorCase pos{1, 2, {1, 2}, {2, 3}};
  CHECK(check_minor_case(T, MinorLaw::Corollary, pos).passed());
  CHECK(all_passed(verify_minor_comm(build_T(2), MinorLaw::PropFirst, 2)));
  CHECK(all_passed(verify_minor_comm_sample(build_T(4), MinorLaw::PropSecond, 2, 8, 99)));
}

TEST_CASE("minor commutation fails for a perturbed T") {
  TMatrix T = build_T(2);
  T.at(2, 1) += UEAElement(2, ScalarPoly::hbar());
  T.modified = true;
  CHECK_FALSE(all_passed(verify_minor_comm(T, MinorLaw::PropFirst, 2)));
}

TEST_CASE("Gelfand-Tsetlin coefficients commute; top ones are central") {
  CHECK(all_passed(gt_subalgebra_checks(2, true)));
  CHECK(all_passed(gt_subalgebra_checks(3, true)));
}
