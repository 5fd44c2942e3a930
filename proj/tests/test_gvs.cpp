#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqcoll/graded.hpp"
#include "eqcoll/symrep.hpp"

using namespace eqcoll;

namespace {

GradedDim random_graded(std::mt19937& rng, int max_total_dim = 4, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> dim_dist(0, max_total_dim);
  std::uniform_int_distribution<int> deg_dist(lo, hi);
  GradedDim g;
  int total = dim_dist(rng);
  for (int i = 0; i < total; ++i) g.add(deg_dist(rng), 1);
  return g;
}

// Independent oracle: the graded symmetric power as the signed trace average
//   (1/n!) sum_mu class_size(mu) * graded_trace(a, mu).
GradedDim sym_power_by_averaging(const GradedDim& a, int n) {
  SignedLaurent total;
  for (const auto& mu : partitions(n)) {
    SignedLaurent t = graded_trace(a, mu);
    t *= class_size(mu);
    total += t;
  }
  return total.divided_by(factorial(n)).to_graded_dim();
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(Int(10), 3) == 120);
  CHECK(binomial(Int(4), 7) == 0);
  CHECK(binomial(Int(0), 0) == 1);
}

TEST_CASE("basic operations and the shift convention") {
  GradedDim a = GradedDim::point(0);
  GradedDim b = GradedDim::point(2, 3);

  CHECK(direct_sum(a, b).total_dim() == 4);
  CHECK(tensor(a, b) == b);  // C[0] is the tensor unit
  // [m] moves degree q to q - m, so C[0][-2] = C[2] lives in degree 2.
  CHECK(shift(a, -2) == GradedDim::point(2));
  CHECK(shift(b, 2) == GradedDim::point(0, 3));
  CHECK(dual(b) == GradedDim::point(-2, 3));
  CHECK(dual(dual(b)) == b);
}

TEST_CASE("tensor is commutative, associative and additive in degree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    GradedDim a = random_graded(rng), b = random_graded(rng), c = random_graded(rng);
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, b).total_dim() == a.total_dim() * b.total_dim());
  }
}

TEST_CASE("symmetric power of a two-term even space is a string of degrees") {
  // S^k(C[0] + C[-d]), d even, has one dimension in each degree 0, d, ..., kd.
  for (int d : {2, 4, 6}) {
    GradedDim h = direct_sum(GradedDim::unit(), GradedDim::point(d));
    for (int k = 0; k <= 20; ++k) {
      GradedDim expected;
      for (int j = 0; j <= k; ++j) expected.add(d * j, 1);
      CHECK(sym_power(h, k) == expected);
    }
  }
}

TEST_CASE("symmetric power of a two-term odd space stabilizes") {
  // With d odd the degree-d line is exterior, so S^k = C[0] + C[-d] for all k >= 1.
  for (int d : {1, 3, 5, 7}) {
    GradedDim h = direct_sum(GradedDim::unit(), GradedDim::point(d));
    GradedDim expected = h;
    CHECK(sym_power(h, 0) == GradedDim::unit());
    for (int k = 1; k <= 20; ++k) CHECK(sym_power(h, k) == expected);
  }
}

TEST_CASE("symmetric power in a single even degree is a binomial count") {
  GradedDim v = GradedDim::point(0, 5);
  for (int k = 0; k <= 6; ++k)
    CHECK(sym_power(v, k) == GradedDim::point(0, binomial(Int(5 + k - 1), k)));
}

TEST_CASE("symmetric power in a single odd degree is an exterior power") {
  GradedDim v = GradedDim::point(3, 4);
  for (int k = 0; k <= 6; ++k) {
    GradedDim got = sym_power(v, k);
    if (k > 4)
      CHECK(got.is_zero());
    else
      CHECK(got == GradedDim::point(3 * k, binomial(Int(4), k)));
  }
}

TEST_CASE("symmetric power agrees with the signed trace average") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    GradedDim a = random_graded(rng);
    for (int n = 0; n <= 6; ++n) CHECK(sym_power(a, n) == sym_power_by_averaging(a, n));
  }
}

TEST_CASE("cycle substitution signs") {
  GradedDim odd = GradedDim::point(1);
  // A 2-cycle on an odd line: trace of the swap on (odd)^{x2} is -t^2.
  SignedLaurent s = cycle_substitute(odd, 2);
  CHECK(s.coeffs().at(2) == -1);
  // Even lines never pick up signs.
  GradedDim even = GradedDim::point(2, 3);
  SignedLaurent t = cycle_substitute(even, 5);
  CHECK(t.coeffs().at(10) == 3);
}

TEST_CASE("graded trace of the identity is the tensor power") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    GradedDim a = random_graded(rng);
    Partition ones(3, 1);
    GradedDim cube = tensor(tensor(a, a), a);
    CHECK(graded_trace(a, ones) == SignedLaurent(cube));
  }
}

TEST_CASE("inexact division and negative coefficients are loud failures") {
  SignedLaurent s = SignedLaurent::term(0, 3);
  CHECK_THROWS_AS(s.divided_by(2), std::domain_error);
  SignedLaurent neg = SignedLaurent::term(1, -1);
  CHECK_THROWS_AS(neg.to_graded_dim(), std::domain_error);
  CHECK_THROWS_AS(GradedDim::point(0, -1), std::invalid_argument);
}

TEST_CASE("signed laurent ring identities") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    SignedLaurent a(random_graded(rng)), b(random_graded(rng));
    SignedLaurent ab = a * b;
    CHECK(ab == b * a);
    SignedLaurent diff = ab;
    diff -= ab;
    CHECK(diff.is_zero());
  }
}
