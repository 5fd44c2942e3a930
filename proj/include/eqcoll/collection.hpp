#ifndef EQCOLL_COLLECTION_HPP
#define EQCOLL_COLLECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqcoll/graded.hpp"

namespace eqcoll {

/// k ordered objects with their pairwise Ext dimension table, plus optional
/// omega-twisted Ext data used for canonical-cover lifts.
struct ExceptionalCollection {
  int k = 0;
  std::vector<std::vector<GradedDim>> ext;  // ext[i][j] = Ext^*(E_i, E_j)
  std::optional<std::vector<std::vector<GradedDim>>> omega_ext;
  std::optional<int> cover_dim;  // even positive; 2 for a surface quotient
};

struct Violation {
  int i = 0;
  int j = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool completely_orthogonal = false;
  bool valid() const { return violations.empty(); }
};

enum class Strength { Strong, CompletelyOrthogonal, General };

std::string strength_name(Strength s);

ValidationReport validate(const ExceptionalCollection& c);

/// Requires a valid collection; completely-orthogonal collections are also
/// strong and reported as CompletelyOrthogonal.
Strength classify_strength(const ExceptionalCollection& c);

/// Fill omega_ext by the order-2 Serre rule: a dimension of ext[j][i] in
/// degree q contributes one to omega_ext[i][j] in degree cover_dim - q.
void fill_omega_serre(ExceptionalCollection& c, int cover_dim);

/// Ext between pullbacks to the canonical cover: ext[i][j] + omega_ext[i][j].
GradedDim cy_lift_ext(const ExceptionalCollection& c, int i, int j);

/// True iff the pullback of E_i to the cover has self-Ext C[0] + C[-cover_dim].
bool is_spherical_lift(const ExceptionalCollection& c, int i);

}  // namespace eqcoll

#endif
