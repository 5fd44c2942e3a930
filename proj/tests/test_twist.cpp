#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqcoll/twist.hpp"

using namespace eqcoll;

TEST_CASE("object and generator inventories") {
  auto objs = test_objects(3);
  // One pure object, n-1 mixed ones, one boxed object per partition of n.
  CHECK(objs.size() == 1 + 2 + 3);
  auto gens = generators(3);
  CHECK(gens.size() == 2 + 3);
  CHECK_THROWS_AS(test_objects(1), std::invalid_argument);
}

TEST_CASE("generator actions on shifts and parity") {
  const int n = 3;
  TestObject mixed{TestObject::Kind::MixedEF, 1, {}, 0, 0};
  Generator tbox{Generator::Kind::TBox, {}};
  TestObject r = apply_generator(tbox, mixed, n);
  CHECK(r.shift == -1);
  CHECK(r.omega_parity == 0);

  TestObject boxed{TestObject::Kind::BoxE, 0, {2}, 0, 0};
  Generator trho{Generator::Kind::TRho, {2}};
  TestObject s = apply_generator(trho, boxed, 2);
  CHECK(s.shift == -3);  // -(2n-1) for n = 2
  CHECK(s.omega_parity == 1);
  // A mismatched partition acts trivially.
  Generator other{Generator::Kind::TRho, {1, 1}};
  CHECK(apply_generator(other, boxed, 2) == boxed);

  TestObject pure{TestObject::Kind::PureF, 0, {}, 0, 0};
  CHECK(apply_generator(Generator{Generator::Kind::Shift1, {}}, pure, n).shift == 1);
  CHECK(apply_generator(tbox, pure, n).shift == 0);  // pure object is k = 0
}

TEST_CASE("all generators commute") {
  for (int n = 2; n <= 6; ++n) CHECK(commutation_check(n));
}

TEST_CASE("the n = 2 action matrix, row by row") {
  ActionMatrix m = action_matrix(2);
  REQUIRE(m.row_labels.size() == 4);
  REQUIRE(m.col_labels.size() == 4);
  CHECK(m.entries[0] == std::vector<Int>{1, 0, 0, 0});     // pure
  CHECK(m.entries[1] == std::vector<Int>{1, -1, 0, 0});    // mixed k=1
  CHECK(m.entries[2] == std::vector<Int>{1, -2, -3, 0});   // boxed (2)
  CHECK(m.entries[3] == std::vector<Int>{1, -2, 0, -3});   // boxed (1,1)
}

TEST_CASE("shift column is all ones and each twist column hits one object") {
  for (int n = 2; n <= 5; ++n) {
    ActionMatrix m = action_matrix(n);
    const size_t gens = m.col_labels.size();
    for (const auto& row : m.entries) CHECK(row[0] == 1);
    for (size_t c = 2; c < gens; ++c) {
      int nonzero = 0;
      for (const auto& row : m.entries)
        if (row[c] != 0) {
          ++nonzero;
          CHECK(row[c] == -(2 * n - 1));
        }
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("rank certificate: p(n) + 2 with trivial integer kernel") {
  for (int n = 2; n <= 6; ++n) {
    TwistGroupReport report = twist_group_report(n);
    CHECK(report.commutes);
    CHECK(Int(report.rank) == report.expected_rank);
    CHECK(report.expected_rank == partition_count(n) + 2);
    CHECK(faithful_rank(n) == report.rank);
    // Full column rank means only the zero exponent vector acts trivially.
    CHECK(report.integer_kernel_trivial);
    CHECK(report.rank == static_cast<int>(report.matrix.col_labels.size()));
    // The report must call out that the stated rank differs from the
    // computed one.
    CHECK(report.discrepancy_note.find("p(n)") != std::string::npos);
  }
}

TEST_CASE("parity bookkeeping: even twist exponents act with trivial parity") {
  const int n = 3;
  for (const auto& rho : partitions(n)) {
    Generator trho{Generator::Kind::TRho, rho};
    for (const auto& o : test_objects(n)) {
      TestObject twice = apply_generator(trho, apply_generator(trho, o, n), n);
      CHECK(twice.omega_parity == o.omega_parity);
    }
  }
}

TEST_CASE("rank helper on explicit matrices") {
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{0, 1}, {1, 0}}) == 2);
  CHECK(matrix_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(matrix_rank({{2, 0, 0}, {0, 3, 0}}) == 2);
}
