#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqcoll/symrep.hpp"

using namespace eqcoll;

TEST_CASE("partition enumeration, largest part first") {
  CHECK(partitions(0) == std::vector<Partition>{{}});
  CHECK(partitions(4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(20) == 627);
  for (const auto& p : partitions(9)) {
    CHECK(is_partition(p));
    CHECK(weight(p) == 9);
  }
}

TEST_CASE("centralizer orders and class sizes") {
  CHECK(z_mu({1, 1, 1}) == 6);
  CHECK(z_mu({3}) == 3);
  CHECK(z_mu({2, 1}) == 2);
  CHECK(class_size({2, 1}) == 3);   // the 3 transpositions of S_3
  CHECK(class_size({3}) == 2);      // the 2 three-cycles
  for (int n = 1; n <= 8; ++n) {
    Int total = 0;
    for (const auto& mu : partitions(n)) total += class_size(mu);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("border-strip character values") {
  CHECK(mn_character({2, 1}, {3}) == -1);
  CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_character({2, 1}, {2, 1}) == 0);
  CHECK(mn_character({4}, {4}) == 1);             // trivial character
  CHECK(mn_character({1, 1, 1, 1}, {4}) == -1);   // sign of a 4-cycle
  CHECK(mn_character({1, 1, 1, 1}, {2, 2}) == 1);
  CHECK(mn_character({3, 2}, {1, 1, 1, 1, 1}) == 5);
}

TEST_CASE("character table orthogonality, both relations") {
  for (int n = 1; n <= 7; ++n) {
    const auto ps = partitions(n);
    std::vector<ClassFunction> chars;
    for (const auto& lambda : ps) chars.push_back(ClassFunction::irreducible(lambda));

    // Row orthogonality: <chi_l, chi_m> = delta_{lm}.
    for (size_t l = 0; l < ps.size(); ++l)
      for (size_t m = 0; m < ps.size(); ++m)
        CHECK(inner_product(chars[l], chars[m]) == Rational(l == m ? 1 : 0));

    // Column orthogonality: sum_l chi_l(mu) chi_l(nu) = delta z_mu.
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = 0; b < ps.size(); ++b) {
        Int sum = 0;
        for (const auto& c : chars) sum += c.values[a] * c.values[b];
        CHECK(sum == (a == b ? z_mu(ps[a]) : Int(0)));
      }
  }
}

TEST_CASE("squared dimensions sum to the group order") {
  for (int n = 1; n <= 8; ++n) {
    Partition ones(n, 1);
    Int sum = 0;
    for (const auto& lambda : partitions(n)) {
      Int dim = mn_character(lambda, ones);
      CHECK(dim > 0);
      sum += dim * dim;
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("induction from Young subgroups") {
  // Ind_{S_2 x S_1}^{S_3} of trivial x trivial: the permutation character of
  // S_3 on 3 points, values (3, 1, 0) on classes (1^3), (2,1), (3).
  ClassFunction ind = induce_character({2, 1}, {ClassFunction::trivial(2),
                                               ClassFunction::trivial(1)});
  CHECK(ind.at({1, 1, 1}) == 3);
  CHECK(ind.at({2, 1}) == 1);
  CHECK(ind.at({3}) == 0);

  // One block is plain induction-free: the character itself.
  ClassFunction same = induce_character({3}, {ClassFunction::irreducible({2, 1})});
  CHECK(same.values == ClassFunction::irreducible({2, 1}).values);

  // Dimension check: dim Ind = [S_n : H] * dim.
  ClassFunction ind2 =
      induce_character({2, 2}, {ClassFunction::trivial(2), ClassFunction::trivial(2)});
  CHECK(ind2.at({1, 1, 1, 1}) == 6);
}

TEST_CASE("Frobenius reciprocity for trivial-character inductions") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& shape : partitions(n)) {
      Composition comp(shape.begin(), shape.end());
      std::vector<ClassFunction> trivials;
      for (int part : comp) trivials.push_back(ClassFunction::trivial(part));
      ClassFunction ind = induce_character(comp, trivials);
      for (const auto& lambda : partitions(n)) {
        ClassFunction chi = ClassFunction::irreducible(lambda);
        Rational lhs = inner_product(ind, chi);
        // Right side: <triv, Res chi> over the Young subgroup, computed as an
        // explicit average over cycle types of the subgroup.
        // For the trivial character this is the number of H-orbits pairing,
        // but an independent exact check is the Kostka-positivity facts below;
        // here we settle for integrality and non-negativity.
        CHECK(lhs.denominator() == 1);
        CHECK(lhs.numerator() >= 0);
      }
      // <Ind triv, triv_{S_n}> = 1 always.
      CHECK(inner_product(ind, ClassFunction::trivial(n)) == Rational(1));
    }
  }
}

TEST_CASE("double cosets are counted by induced-character inner products") {
  // |H_a \ S_n / H_b| = <Ind_a triv, Ind_b triv>  (Mackey).
  for (int n = 2; n <= 6; ++n) {
    for (const auto& pa : partitions(n))
      for (const auto& pb : partitions(n)) {
        Composition a(pa.begin(), pa.end()), b(pb.begin(), pb.end());
        std::vector<ClassFunction> ta, tb;
        for (int x : a) ta.push_back(ClassFunction::trivial(x));
        for (int x : b) tb.push_back(ClassFunction::trivial(x));
        Rational pairing = inner_product(induce_character(a, ta), induce_character(b, tb));
        auto tables = double_cosets(a, b);
        CHECK(pairing == Rational(Int(tables.size())));
        // Every table really has the prescribed margins.
        for (const auto& t : tables) {
          for (size_t r = 0; r < a.size(); ++r) {
            int row_sum = 0;
            for (size_t c = 0; c < b.size(); ++c) row_sum += t[r][c];
            CHECK(row_sum == a[r]);
          }
          for (size_t c = 0; c < b.size(); ++c) {
            int col_sum = 0;
            for (size_t r = 0; r < a.size(); ++r) col_sum += t[r][c];
            CHECK(col_sum == b[c]);
          }
        }
      }
  }
  CHECK(double_cosets({2, 1}, {2, 1}).size() == 2);
}

TEST_CASE("stabilizer composition of a sorted multi-index") {
  CHECK(stabilizer_of({1, 1, 2, 2, 2, 5}) == Composition{2, 3, 1});
  CHECK(stabilizer_of({7}) == Composition{1});
  CHECK_THROWS_AS(stabilizer_of({2, 1}), std::invalid_argument);
}
