#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqcoll/kernels.hpp"

using namespace eqcoll;

TEST_CASE("input construction and validation") {
  CHECK(make_cy_input(3, 2).tag == CaseTag::EvenCY);
  CHECK(make_cy_input(3, 3).tag == CaseTag::OddCY);
  CHECK(make_trivial_input(2, 5).h == GradedDim::unit());
  CHECK_THROWS_AS(make_cy_input(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_cy_input(2, 0), std::invalid_argument);

  GeometricInput bad;
  bad.n = 2;
  bad.d = 2;
  bad.h = GradedDim::unit();
  bad.tag = CaseTag::EvenCY;  // claims a sphere but h is a point
  CHECK_THROWS_AS(validate_input(bad), std::invalid_argument);
}

TEST_CASE("the four compositions in the even two-sphere case") {
  GeometricInput g = make_cy_input(2, 2);  // n = 2, d = 2
  KernelCompositions c = compose_kernels(g);
  // S^2(C[0]+C[-2]) = C[0]+C[-2]+C[-4], shifted by [2] down two degrees.
  GradedDim s2;
  s2.add(-2, 1);
  s2.add(0, 1);
  s2.add(2, 1);
  CHECK(c.gp_r_gp.product_omega == s2);
  CHECK(c.gp_r_gp.diagonal.is_zero());
  GradedDim s1;
  s1.add(-2, 1);
  s1.add(0, 1);
  CHECK(c.gp_r_gpp.product_omega == s1);
  CHECK(c.gpp_r_gp.product == direct_sum(GradedDim::unit(), GradedDim::point(2)));
  CHECK(c.gpp_r_gpp.diagonal == direct_sum(GradedDim::unit(), GradedDim::point(2)));
  CHECK(c.gpp_r_gpp.product == GradedDim::unit());
}

TEST_CASE("case analysis of the monad") {
  SUBCASE("even Calabi-Yau gives a P^(n-1) pattern") {
    for (int d : {2, 4, 6})
      for (int n = 2; n <= 8; ++n) {
        GrgResult r = grg(make_cy_input(n, d));
        REQUIRE(r.kernel.has_value());
        CHECK(r.cls == FunctorClass{FunctorTag::PnFunctor, n - 1});
        CHECK(pn_condition1_check(*r.kernel, n, d));
        CHECK(functor_class_name(r.cls) == "P^" + std::to_string(n - 1) + "-functor");
      }
  }
  SUBCASE("odd Calabi-Yau gives a two-term sphere pattern for n >= 3") {
    for (int d : {3, 5, 7})
      for (int n = 3; n <= 8; ++n) {
        GrgResult r = grg(make_cy_input(n, d));
        REQUIRE(r.kernel.has_value());
        CHECK(r.cls.tag == FunctorTag::SphereLike);
        CHECK(r.kernel->is_purely_diagonal());
        CHECK(r.kernel->diagonal ==
              direct_sum(GradedDim::unit(), GradedDim::point(d)));
      }
  }
  SUBCASE("odd Calabi-Yau with n = 2 is honestly undetermined") {
    GrgResult r = grg(make_cy_input(2, 3));
    CHECK_FALSE(r.kernel.has_value());
    CHECK(r.cls.tag == FunctorTag::Undetermined);
  }
  SUBCASE("trivial cohomology is fully faithful") {
    for (int d = 1; d <= 7; ++d)
      for (int n = 2; n <= 8; ++n) {
        GrgResult r = grg(make_trivial_input(n, d));
        REQUIRE(r.kernel.has_value());
        CHECK(r.cls.tag == FunctorTag::FullyFaithful);
        CHECK(r.kernel->diagonal == GradedDim::unit());
        CHECK(r.kernel->is_purely_diagonal());
      }
  }
}

TEST_CASE("monad shape check rejects wrong patterns") {
  FormalKernel k;
  k.diagonal.add(0, 1);
  k.diagonal.add(2, 1);
  CHECK(pn_condition1_check(k, 2, 2));
  CHECK_FALSE(pn_condition1_check(k, 3, 2));
  CHECK_FALSE(pn_condition1_check(k, 2, 4));
  k.product.add(0, 1);
  CHECK_FALSE(pn_condition1_check(k, 2, 2));
}

TEST_CASE("alternating class sum matches the case analysis") {
  for (int n = 2; n <= 10; ++n) {
    for (int d = 1; d <= 7; ++d) {
      CHECK(euler_consistency(make_trivial_input(n, d)));
      if (d % 2 == 0 || n >= 3) CHECK(euler_consistency(make_cy_input(n, d)));
    }
    CHECK_THROWS_AS(euler_consistency(make_cy_input(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("point ranks") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(rank_fr({Int(1), n}) == 1 - 2 * n);
    CHECK(rank_twist({Int(1), n}) == 4 * n - 2);
  }
  for (Int chi = -5; chi <= 5; ++chi)
    for (int n = 2; n <= 6; ++n)
      CHECK(rank_twist({chi, n}) == -2 * rank_fr({chi, n}));
  CHECK_THROWS_AS(rank_fr({Int(1), 1}), std::invalid_argument);
}
