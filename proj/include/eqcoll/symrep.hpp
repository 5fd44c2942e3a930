#ifndef EQCOLL_SYMREP_HPP
#define EQCOLL_SYMREP_HPP

#include <vector>

#include "eqcoll/graded.hpp"

namespace eqcoll {

bool is_partition(const Partition& p);
int weight(const Partition& p);  // sum of parts

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

/// Number of partitions of n.
Int partition_count(int n);

/// z_mu = prod_v v^{k_v} k_v!  (order of the centralizer).
Int z_mu(const Partition& mu);

/// Size of the conjugacy class with cycle type mu inside S_{|mu|}.
Int class_size(const Partition& mu);

/// Irreducible character value chi^lambda(mu) by Murnaghan-Nakayama
/// border-strip recursion (memoized).
Int mn_character(const Partition& lambda, const Partition& mu);

/// Integer-valued class function on S_n, stored aligned with partitions(n).
struct ClassFunction {
  int n = 0;
  std::vector<Int> values;

  static ClassFunction trivial(int n);
  static ClassFunction irreducible(const Partition& lambda);

  const Int& at(const Partition& mu) const;
};

int partition_index(int n, const Partition& mu);

Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Character of S_n induced from f_1 x ... x f_r on the Young subgroup
/// given by `comp`.
ClassFunction induce_character(const Composition& comp,
                               const std::vector<ClassFunction>& chars);

/// H_a \ S_n / H_b double cosets as contingency tables: all non-negative
/// integer matrices with row sums `a` and column sums `b`.
std::vector<std::vector<std::vector<int>>> double_cosets(const Composition& a,
                                                         const Composition& b);

/// Multiplicity composition of a non-decreasing multi-index; the Young
/// subgroup prod S_{m_j} it describes is Stab(alpha).
Composition stabilizer_of(const std::vector<int>& alpha);

}  // namespace eqcoll

#endif
