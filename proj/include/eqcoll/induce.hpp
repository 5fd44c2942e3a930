#ifndef EQCOLL_INDUCE_HPP
#define EQCOLL_INDUCE_HPP

#include <string>
#include <vector>

#include "eqcoll/collection.hpp"
#include "eqcoll/symrep.hpp"

namespace eqcoll {

using MultiIndex = std::vector<int>;  // entries in 1..k

/// One object of the induced collection: a non-decreasing multi-index
/// together with one partition per block of its stabilizer.
struct InducedLabel {
  MultiIndex alpha;
  std::vector<Partition> irrep;

  bool operator==(const InducedLabel&) const = default;
};

struct InducedCollection {
  int n = 0;
  std::vector<InducedLabel> labels;
};

/// Sorted representative of the orbit of alpha under coordinate permutation.
MultiIndex nd(const MultiIndex& alpha);

/// Total order on multi-indices: compare sorted representatives
/// lexicographically, break ties lexicographically on the raw tuples.
/// Returns -1, 0 or 1.
int lhd_compare(const MultiIndex& alpha, const MultiIndex& beta);

/// The induced collection on the n-th power, in canonical order: outer order
/// by the multi-index order above, inner order by reverse-lexicographic
/// partition tuples.
InducedCollection enumerate_labels(const ExceptionalCollection& base, int n);

/// Length of the induced collection, without materializing it.
Int sequence_length(int k, int n);

enum class ExtMethod {
  Character,  // Mackey double cosets + character arithmetic (default)
  BruteForce  // explicit Koszul-signed invariant projector over cosets
};

/// Equivariant Ext dimensions between two induced objects; with twist_omega
/// the target is twisted by the box power of omega.
GradedDim equivariant_ext(const InducedLabel& a, const InducedLabel& b,
                          const ExceptionalCollection& base, bool twist_omega = false,
                          ExtMethod method = ExtMethod::Character);

struct PairFailure {
  int i = 0;
  int j = 0;
  std::string kind;  // "self-ext" or "semiorthogonality"
  GradedDim expected;
  GradedDim actual;
};

struct VerifyReport {
  int object_count = 0;
  std::vector<PairFailure> failures;
  Strength strength = Strength::General;
  std::string fullness_note;
  bool passed() const { return failures.empty(); }
};

VerifyReport verify_sequence(const InducedCollection& ic, const ExceptionalCollection& base,
                             ExtMethod method = ExtMethod::Character);

/// Ext between pullbacks of induced objects to the canonical cover of the
/// quotient: the plain and the omega-twisted equivariant Ext combined.
GradedDim cy_chain_ext(const InducedCollection& ic, const ExceptionalCollection& base,
                       int i, int j, ExtMethod method = ExtMethod::Character);

}  // namespace eqcoll

#endif
