#ifndef EQCOLL_KERNELS_HPP
#define EQCOLL_KERNELS_HPP

#include <optional>
#include <string>

#include "eqcoll/graded.hpp"

namespace eqcoll {

/// Formal sum of kernel atoms with graded multiplicities.  The atoms are the
/// diagonal, the plain box product and the omega-twisted box product.
struct FormalKernel {
  GradedDim diagonal;
  GradedDim product;
  GradedDim product_omega;

  bool operator==(const FormalKernel&) const = default;
  bool is_purely_diagonal() const { return product.is_zero() && product_omega.is_zero(); }
};

enum class CaseTag { EvenCY, OddCY, TrivialCohomology, Other };

std::string case_name(CaseTag tag);

/// Geometric input: power n, dimension d of the factor variety, and the
/// graded dimensions of the structure-sheaf cohomology.
struct GeometricInput {
  int n = 2;
  int d = 1;
  GradedDim h;  // H^*(O_Z)
  CaseTag tag = CaseTag::Other;
};

/// Throws std::invalid_argument when the tag does not match (n, d, h).
void validate_input(const GeometricInput& g);

GeometricInput make_cy_input(int n, int d);        // tag from parity of d
GeometricInput make_trivial_input(int n, int d);   // h = C[0]

struct KernelCompositions {
  FormalKernel gp_r_gp;    // G'^R G'
  FormalKernel gp_r_gpp;   // G'^R G''
  FormalKernel gpp_r_gp;   // G''^R G'
  FormalKernel gpp_r_gpp;  // G''^R G''
};

KernelCompositions compose_kernels(const GeometricInput& g);

enum class FunctorTag { PnFunctor, SphereLike, FullyFaithful, Undetermined };

struct FunctorClass {
  FunctorTag tag = FunctorTag::Undetermined;
  int degree = 0;  // n-1 for PnFunctor, unused otherwise

  bool operator==(const FunctorClass&) const = default;
};

std::string functor_class_name(const FunctorClass& c);

struct GrgResult {
  std::optional<FormalKernel> kernel;  // empty iff Undetermined
  FunctorClass cls;
};

/// G^R G resolved by the three-case analysis; anything outside the three
/// cases (including odd dimension with n = 2) is honestly Undetermined.
GrgResult grg(const GeometricInput& g);

/// Monad-shape check: the kernel is purely diagonal with multiplicity
/// exactly C[0] + C[-d] + ... + C[-d(n-1)].
bool pn_condition1_check(const FormalKernel& kernel, int n, int d);

/// Cross-check: the alternating class sum of the four compositions over the
/// 3x3 lattice of triangles equals the case-analysis output.  In the
/// Calabi-Yau cases the omega-twisted and plain box atoms are identified.
bool euler_consistency(const GeometricInput& g);

struct RankInput {
  Int chi;  // Euler characteristic of the structure sheaf
  int n = 2;
};

/// Rank of the monad value on a skyscraper of n distinct points: chi - 2n.
Int rank_fr(const RankInput& r);

/// Rank of the descended twist on the same skyscraper: -2 (chi - 2n).
Int rank_twist(const RankInput& r);

}  // namespace eqcoll

#endif
