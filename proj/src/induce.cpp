#include "eqcoll/induce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace eqcoll {

MultiIndex nd(const MultiIndex& alpha) {
  MultiIndex sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

int lhd_compare(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("lhd_compare: length mismatch");
  const MultiIndex na = nd(alpha), nb = nd(beta);
  if (na != nb) return na < nb ? -1 : 1;
  if (alpha == beta) return 0;
  return alpha < beta ? -1 : 1;
}

namespace {

void nondecreasing_rec(int k, int n, int min_value, MultiIndex& current,
                       const std::function<void(const MultiIndex&)>& emit) {
  if (static_cast<int>(current.size()) == n) {
    emit(current);
    return;
  }
  for (int v = min_value; v <= k; ++v) {
    current.push_back(v);
    nondecreasing_rec(k, n, v, current, emit);
    current.pop_back();
  }
}

void for_each_nondecreasing(int k, int n, const std::function<void(const MultiIndex&)>& emit) {
  MultiIndex current;
  nondecreasing_rec(k, n, 1, current, emit);
}

void irrep_tuples_rec(const Composition& comp, size_t block, std::vector<Partition>& current,
                      const std::function<void(const std::vector<Partition>&)>& emit) {
  if (block == comp.size()) {
    emit(current);
    return;
  }
  for (const auto& p : partitions(comp[block])) {
    current.push_back(p);
    irrep_tuples_rec(comp, block + 1, current, emit);
    current.pop_back();
  }
}

}  // namespace

InducedCollection enumerate_labels(const ExceptionalCollection& base, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_labels: n must be >= 1");
  auto report = validate(base);
  if (!report.valid()) throw std::invalid_argument("enumerate_labels: invalid base collection");
  InducedCollection ic;
  ic.n = n;
  for_each_nondecreasing(base.k, n, [&](const MultiIndex& alpha) {
    const Composition comp = stabilizer_of(alpha);
    std::vector<Partition> current;
    irrep_tuples_rec(comp, 0, current, [&](const std::vector<Partition>& irrep) {
      ic.labels.push_back({alpha, irrep});
    });
  });
  return ic;
}

Int sequence_length(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("sequence_length: k, n must be >= 1");
  Int total = 0;
  for_each_nondecreasing(k, n, [&](const MultiIndex& alpha) {
    Int prod = 1;
    for (int m : stabilizer_of(alpha)) prod *= partition_count(m);
    total += prod;
  });
  return total;
}

namespace {

const GradedDim& base_entry(const ExceptionalCollection& base, int from, int to,
                            bool twist_omega) {
  if (twist_omega) {
    if (!base.omega_ext)
      throw std::invalid_argument("equivariant_ext: omega_ext missing for twisted Ext");
    return (*base.omega_ext)[from - 1][to - 1];
  }
  return base.ext[from - 1][to - 1];
}

std::vector<int> distinct_values(const MultiIndex& alpha) {
  std::vector<int> vals;
  for (int v : alpha)
    if (vals.empty() || vals.back() != v) vals.push_back(v);
  return vals;
}

// ---------------------------------------------------------------------------
// Character / Mackey path.
//
// dim Ext_{S_n}(Inf(E(a) (x) V), Inf(E(b) (x) W)) decomposes over double
// cosets of the two Young subgroups, enumerated as contingency tables.  Per
// table the intersection subgroup is a product of symmetric groups on the
// cells, and the invariants dimension is the average over it of
//   Koszul trace on the Kunneth block  *  chi_V  *  chi_W,
// grouped by cell-wise cycle types.
// ---------------------------------------------------------------------------

struct CellAssignment {
  std::vector<std::vector<Partition>> mu;  // per cell
};

SignedLaurent character_path(const InducedLabel& a, const InducedLabel& b,
                             const ExceptionalCollection& base, bool twist_omega) {
  const std::vector<int> vals_a = distinct_values(a.alpha);
  const std::vector<int> vals_b = distinct_values(b.alpha);
  const Composition comp_a = stabilizer_of(a.alpha);
  const Composition comp_b = stabilizer_of(b.alpha);
  const size_t rows = comp_a.size(), cols = comp_b.size();

  SignedLaurent total;
  for (const auto& table : double_cosets(comp_a, comp_b)) {
    // Kunneth factor per active cell; a zero factor kills the whole coset.
    std::vector<std::vector<const GradedDim*>> cell_space(rows,
                                                          std::vector<const GradedDim*>(cols, nullptr));
    bool dead = false;
    Int subgroup_order = 1;
    for (size_t r = 0; r < rows && !dead; ++r)
      for (size_t c = 0; c < cols; ++c) {
        if (table[r][c] == 0) continue;
        const GradedDim& u = base_entry(base, vals_a[r], vals_b[c], twist_omega);
        if (u.is_zero()) {
          dead = true;
          break;
        }
        cell_space[r][c] = &u;
        subgroup_order *= factorial(table[r][c]);
      }
    if (dead) continue;

    std::vector<std::pair<size_t, size_t>> cells;
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        if (table[r][c] > 0) cells.push_back({r, c});

    SignedLaurent coset_sum;
    std::vector<Partition> assignment(cells.size());
    std::function<void(size_t)> rec = [&](size_t cell) {
      if (cell == cells.size()) {
        Int weight = 1;
        SignedLaurent trace = SignedLaurent::term(0, 1);
        for (size_t t = 0; t < cells.size(); ++t) {
          weight *= class_size(assignment[t]);
          for (int len : assignment[t])
            trace = trace * cycle_substitute(*cell_space[cells[t].first][cells[t].second], len);
          if (trace.is_zero()) return;
        }
        // chi_V: cycle type per row block is the union over its cells.
        for (size_t r = 0; r < rows; ++r) {
          Partition type;
          for (size_t t = 0; t < cells.size(); ++t)
            if (cells[t].first == r)
              type.insert(type.end(), assignment[t].begin(), assignment[t].end());
          std::sort(type.rbegin(), type.rend());
          weight *= mn_character(a.irrep[r], type);
          if (weight == 0) return;
        }
        for (size_t c = 0; c < cols; ++c) {
          Partition type;
          for (size_t t = 0; t < cells.size(); ++t)
            if (cells[t].second == c)
              type.insert(type.end(), assignment[t].begin(), assignment[t].end());
          std::sort(type.rbegin(), type.rend());
          weight *= mn_character(b.irrep[c], type);
          if (weight == 0) return;
        }
        trace *= weight;
        coset_sum += trace;
        return;
      }
      for (const auto& mu : partitions(table[cells[cell].first][cells[cell].second])) {
        assignment[cell] = mu;
        rec(cell + 1);
      }
    };
    rec(0);
    total += coset_sum.divided_by(subgroup_order);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Brute-force path: average the Koszul-signed traces of every group element
// on the full coset-indexed Kunneth space, multiplicity spaces handled by
// the induced-representation cocycle.
// ---------------------------------------------------------------------------

using Perm = std::vector<int>;  // p[i] = image of position i

Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

MultiIndex act(const Perm& p, const MultiIndex& alpha) {
  MultiIndex r(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) r[p[i]] = alpha[i];
  return r;
}

// All rearrangements of alpha together with one permutation g per
// rearrangement gamma satisfying act(g, alpha) = gamma.
struct Orbit {
  std::vector<MultiIndex> elements;
  std::vector<Perm> reps;
};

Orbit orbit_of(const MultiIndex& alpha) {
  Orbit orb;
  MultiIndex gamma = nd(alpha);
  do {
    // Match equal values in order of position.
    Perm g(alpha.size());
    std::map<int, std::vector<int>> positions;
    for (size_t i = 0; i < gamma.size(); ++i) positions[gamma[i]].push_back(static_cast<int>(i));
    std::map<int, size_t> used;
    for (size_t i = 0; i < alpha.size(); ++i) g[i] = positions[alpha[i]][used[alpha[i]]++];
    orb.elements.push_back(gamma);
    orb.reps.push_back(std::move(g));
  } while (std::next_permutation(gamma.begin(), gamma.end()));
  return orb;
}

// Cycle type of h restricted to each run of equal values of alpha.
std::vector<Partition> block_cycle_types(const Perm& h, const MultiIndex& alpha) {
  std::vector<Partition> types;
  size_t start = 0;
  while (start < alpha.size()) {
    size_t end = start;
    while (end < alpha.size() && alpha[end] == alpha[start]) ++end;
    Partition type;
    std::vector<bool> seen(alpha.size(), false);
    for (size_t i = start; i < end; ++i) {
      if (seen[i]) continue;
      int len = 0;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        ++len;
        j = static_cast<size_t>(h[j]);
      }
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    types.push_back(std::move(type));
    start = end;
  }
  return types;
}

Int character_at(const std::vector<Partition>& irrep, const std::vector<Partition>& types) {
  Int chi = 1;
  for (size_t r = 0; r < irrep.size(); ++r) {
    chi *= mn_character(irrep[r], types[r]);
    if (chi == 0) break;
  }
  return chi;
}

// Koszul-signed trace of sigma on the Kunneth block for the pair (gamma,
// delta): tuples of homogeneous basis elements constant on the cycles of
// sigma, each counted with the sign of permuting odd-degree entries.
SignedLaurent block_trace(const Perm& sigma, const MultiIndex& gamma, const MultiIndex& delta,
                          const ExceptionalCollection& base, bool twist_omega) {
  const size_t n = sigma.size();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j));
      j = static_cast<size_t>(sigma[j]);
    }
    cycles.push_back(std::move(cycle));
  }

  // Degree spectrum of each cycle's Ext space (label constant along cycles).
  std::vector<std::vector<std::pair<int, Int>>> spectra;
  for (const auto& cycle : cycles) {
    const GradedDim& u = base_entry(base, gamma[cycle[0]], delta[cycle[0]], twist_omega);
    if (u.is_zero()) return {};
    spectra.emplace_back(u.dims().begin(), u.dims().end());
  }

  SignedLaurent trace;
  std::vector<int> degree_at(n, 0);
  std::function<void(size_t, Int, int)> rec = [&](size_t c, Int mult, int total_degree) {
    if (c == cycles.size()) {
      int odd_inversions = 0;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (sigma[i] > sigma[j] && degree_at[i] % 2 != 0 && degree_at[j] % 2 != 0)
            ++odd_inversions;
      trace.add(total_degree, odd_inversions % 2 == 1 ? -mult : mult);
      return;
    }
    for (const auto& [deg, m] : spectra[c]) {
      for (int pos : cycles[c]) degree_at[pos] = deg;
      rec(c + 1, mult * m, total_degree + deg * static_cast<int>(cycles[c].size()));
    }
  };
  rec(0, 1, 0);
  return trace;
}

SignedLaurent brute_force_path(const InducedLabel& a, const InducedLabel& b,
                               const ExceptionalCollection& base, bool twist_omega) {
  const int n = static_cast<int>(a.alpha.size());
  const Orbit orb_a = orbit_of(a.alpha);
  const Orbit orb_b = orbit_of(b.alpha);

  SignedLaurent total;
  Perm sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    // Summands fixed by sigma on each side, with the conjugated stabilizer
    // element driving the multiplicity-space character.
    std::vector<std::pair<size_t, Int>> fixed_a, fixed_b;
    for (size_t t = 0; t < orb_a.elements.size(); ++t) {
      if (act(sigma, orb_a.elements[t]) != orb_a.elements[t]) continue;
      Perm h = compose(inverse(orb_a.reps[t]), compose(sigma, orb_a.reps[t]));
      fixed_a.push_back({t, character_at(a.irrep, block_cycle_types(h, a.alpha))});
    }
    if (fixed_a.empty()) continue;
    for (size_t s = 0; s < orb_b.elements.size(); ++s) {
      if (act(sigma, orb_b.elements[s]) != orb_b.elements[s]) continue;
      Perm h = compose(inverse(orb_b.reps[s]), compose(sigma, orb_b.reps[s]));
      fixed_b.push_back({s, character_at(b.irrep, block_cycle_types(h, b.alpha))});
    }
    for (const auto& [t, chi_a] : fixed_a) {
      if (chi_a == 0) continue;
      for (const auto& [s, chi_b] : fixed_b) {
        if (chi_b == 0) continue;
        SignedLaurent tr = block_trace(sigma, orb_a.elements[t], orb_b.elements[s], base, twist_omega);
        tr *= chi_a * chi_b;
        total += tr;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total.divided_by(factorial(n));
}

}  // namespace

GradedDim equivariant_ext(const InducedLabel& a, const InducedLabel& b,
                          const ExceptionalCollection& base, bool twist_omega,
                          ExtMethod method) {
  if (a.alpha.size() != b.alpha.size())
    throw std::invalid_argument("equivariant_ext: multi-index length mismatch");
  if (nd(a.alpha) != a.alpha || nd(b.alpha) != b.alpha)
    throw std::invalid_argument("equivariant_ext: labels must carry non-decreasing multi-indices");
  SignedLaurent result = method == ExtMethod::Character
                             ? character_path(a, b, base, twist_omega)
                             : brute_force_path(a, b, base, twist_omega);
  return result.to_graded_dim();
}

VerifyReport verify_sequence(const InducedCollection& ic, const ExceptionalCollection& base,
                             ExtMethod method) {
  VerifyReport report;
  report.object_count = static_cast<int>(ic.labels.size());
  report.fullness_note =
      "full iff the base collection is full (inherited, not machine-checked)";
  const GradedDim unit = GradedDim::unit();
  bool strong = true, orthogonal = true;
  for (size_t i = 0; i < ic.labels.size(); ++i) {
    GradedDim self = equivariant_ext(ic.labels[i], ic.labels[i], base, false, method);
    if (self != unit)
      report.failures.push_back({static_cast<int>(i), static_cast<int>(i), "self-ext", unit, self});
    for (size_t j = i + 1; j < ic.labels.size(); ++j) {
      GradedDim backward = equivariant_ext(ic.labels[j], ic.labels[i], base, false, method);
      if (!backward.is_zero())
        report.failures.push_back(
            {static_cast<int>(j), static_cast<int>(i), "semiorthogonality", GradedDim{}, backward});
      GradedDim forward = equivariant_ext(ic.labels[i], ic.labels[j], base, false, method);
      if (!forward.is_zero()) orthogonal = false;
      if (!forward.concentrated_in_degree(0)) strong = false;
    }
  }
  report.strength = orthogonal ? Strength::CompletelyOrthogonal
                               : (strong ? Strength::Strong : Strength::General);
  return report;
}

GradedDim cy_chain_ext(const InducedCollection& ic, const ExceptionalCollection& base,
                       int i, int j, ExtMethod method) {
  const auto& a = ic.labels.at(i);
  const auto& b = ic.labels.at(j);
  return direct_sum(equivariant_ext(a, b, base, false, method),
                    equivariant_ext(a, b, base, true, method));
}

}  // namespace eqcoll
