#ifndef EQCOLL_TWIST_HPP
#define EQCOLL_TWIST_HPP

#include <string>
#include <variant>
#include <vector>

#include "eqcoll/symrep.hpp"

namespace eqcoll {

/// The proof-level test objects: the pure box power of the orthogonal
/// object, the mixed inflations, and the box powers of the exceptional
/// object tensored with an irreducible representation.
struct TestObject {
  enum class Kind { PureF, MixedEF, BoxE };
  Kind kind = Kind::PureF;
  int mixed_k = 0;     // for MixedEF, 1 <= k <= n-1
  Partition rho;       // for BoxE
  Int shift = 0;
  int omega_parity = 0;  // mod 2

  bool operator==(const TestObject&) const = default;
};

struct Generator {
  enum class Kind { Shift1, TBox, TRho };
  Kind kind = Kind::Shift1;
  Partition rho;  // for TRho

  bool operator==(const Generator&) const = default;
};

std::string object_name(const TestObject& o);
std::string generator_name(const Generator& g);

std::vector<TestObject> test_objects(int n);
std::vector<Generator> generators(int n);

TestObject apply_generator(const Generator& g, TestObject o, int n);

/// Exhaustively checks that every ordered pair of generators acts the same
/// way in both orders on every test object.
bool commutation_check(int n);

struct ActionMatrix {
  std::vector<std::string> row_labels;  // test objects
  std::vector<std::string> col_labels;  // generators
  std::vector<std::vector<Int>> entries;  // shift increments
};

ActionMatrix action_matrix(int n);

/// Rational rank of an integer matrix by fraction-free elimination.
int matrix_rank(std::vector<std::vector<Int>> m);

/// Rank of the action matrix; the abelian group of generator exponent
/// vectors acts faithfully iff this equals the number of generators.
int faithful_rank(int n);

struct TwistGroupReport {
  int n = 0;
  ActionMatrix matrix;
  int rank = 0;
  Int expected_rank;  // p(n) + 2
  bool commutes = false;
  bool integer_kernel_trivial = false;
  std::string discrepancy_note;
};

TwistGroupReport twist_group_report(int n);

}  // namespace eqcoll

#endif
