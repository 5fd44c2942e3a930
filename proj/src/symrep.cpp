#include "eqcoll/symrep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace eqcoll {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, Partition& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
  std::vector<Partition> out;
  Partition current;
  partitions_rec(n, n, current, out);
  if (n == 0) out = {Partition{}};
  return out;
}

Int partition_count(int n) { return Int(partitions(n).size()); }

Int z_mu(const Partition& mu) {
  std::map<int, int> mult;
  for (int v : mu) ++mult[v];
  Int z = 1;
  for (const auto& [v, k] : mult) {
    for (int i = 0; i < k; ++i) z *= v;
    z *= factorial(k);
  }
  return z;
}

Int class_size(const Partition& mu) { return factorial(weight(mu)) / z_mu(mu); }

namespace {

// Beta-set (first-column hook length) encoding of a partition.
std::vector<int> beta_set(const Partition& lambda) {
  int k = static_cast<int>(lambda.size());
  std::vector<int> b(k);
  for (int i = 0; i < k; ++i) b[i] = lambda[i] + (k - 1 - i);
  return b;
}

Partition from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  int k = static_cast<int>(b.size());
  Partition lambda;
  for (int i = 0; i < k; ++i) {
    int part = b[i] - (k - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

Int mn_rec(const Partition& lambda, const Partition& mu,
           std::map<std::pair<Partition, Partition>, Int>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = mu.front();
  Partition mu_rest(mu.begin() + 1, mu.end());
  std::vector<int> b = beta_set(lambda);
  Int total = 0;
  // Removable border strips of length `strip` correspond to beta entries
  // that drop by `strip` without colliding.
  for (size_t i = 0; i < b.size(); ++i) {
    int target = b[i] - strip;
    if (target < 0) continue;
    if (std::find(b.begin(), b.end(), target) != b.end()) continue;
    int height = 0;
    for (int other : b)
      if (other > target && other < b[i]) ++height;
    std::vector<int> b2 = b;
    b2[i] = target;
    Int term = mn_rec(from_beta_set(std::move(b2)), mu_rest, memo);
    total += (height % 2 == 1) ? -term : term;
  }
  memo[key] = total;
  return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu))
    throw std::invalid_argument("mn_character: arguments must be partitions");
  if (weight(lambda) != weight(mu))
    throw std::invalid_argument("mn_character: partitions of different n");
  static std::map<std::pair<Partition, Partition>, Int> memo;
  return mn_rec(lambda, mu, memo);
}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction f;
  f.n = n;
  f.values.assign(partitions(n).size(), Int(1));
  return f;
}

ClassFunction ClassFunction::irreducible(const Partition& lambda) {
  ClassFunction f;
  f.n = weight(lambda);
  for (const auto& mu : partitions(f.n)) f.values.push_back(mn_character(lambda, mu));
  return f;
}

const Int& ClassFunction::at(const Partition& mu) const {
  return values[partition_index(n, mu)];
}

int partition_index(int n, const Partition& mu) {
  const auto ps = partitions(n);
  auto it = std::find(ps.begin(), ps.end(), mu);
  if (it == ps.end()) throw std::invalid_argument("partition_index: not a partition of n");
  return static_cast<int>(it - ps.begin());
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n != g.n) throw std::invalid_argument("inner_product: mismatched n");
  const auto ps = partitions(f.n);
  Int sum = 0;
  for (size_t i = 0; i < ps.size(); ++i)
    sum += class_size(ps[i]) * f.values[i] * g.values[i];
  return Rational(sum, factorial(f.n));
}

namespace {

// Distribute the parts of mu (grouped by value) over the blocks of comp and
// sum  prod_v multinomial * prod_i chars_i(mu^(i))  over all distributions.
struct InduceState {
  std::vector<std::pair<int, int>> part_groups;  // (value, multiplicity)
  const Composition* comp;
  const std::vector<ClassFunction>* chars;
  std::vector<int> room;                      // remaining capacity per block
  std::vector<std::vector<int>> block_parts;  // parts assigned per block
};

Int induce_distribute(InduceState& st, size_t group, Int coeff) {
  if (group == st.part_groups.size()) {
    Int term = coeff;
    for (size_t i = 0; i < st.comp->size(); ++i) {
      if (st.room[i] != 0) return 0;
      Partition mu_i = st.block_parts[i];
      std::sort(mu_i.begin(), mu_i.end(), std::greater<int>());
      term *= (*st.chars)[i].at(mu_i);
      if (term == 0) return 0;
    }
    return term;
  }
  const auto [value, count] = st.part_groups[group];
  const int r = static_cast<int>(st.comp->size());
  // Split `count` copies of `value` over the r blocks.
  std::vector<int> split(r, 0);
  Int total = 0;
  std::function<void(int, int)> rec = [&](int block, int left) {
    if (block == r - 1) {
      if (left * value > st.room[block]) return;
      split[block] = left;
      Int multi = factorial(count);
      for (int s : split) multi /= factorial(s);
      for (int i = 0; i < r; ++i) {
        st.room[i] -= split[i] * value;
        for (int j = 0; j < split[i]; ++j) st.block_parts[i].push_back(value);
      }
      total += induce_distribute(st, group + 1, coeff * multi);
      for (int i = 0; i < r; ++i) {
        st.room[i] += split[i] * value;
        for (int j = 0; j < split[i]; ++j) st.block_parts[i].pop_back();
      }
      return;
    }
    for (int take = 0; take <= left && take * value <= st.room[block]; ++take) {
      split[block] = take;
      rec(block + 1, left - take);
    }
  };
  rec(0, count);
  return total;
}

}  // namespace

ClassFunction induce_character(const Composition& comp,
                               const std::vector<ClassFunction>& chars) {
  if (comp.size() != chars.size())
    throw std::invalid_argument("induce_character: arity mismatch");
  int n = 0;
  for (size_t i = 0; i < comp.size(); ++i) {
    if (comp[i] < 1) throw std::invalid_argument("induce_character: blocks must be >= 1");
    if (chars[i].n != comp[i])
      throw std::invalid_argument("induce_character: character size mismatch");
    n += comp[i];
  }
  ClassFunction out;
  out.n = n;
  for (const auto& mu : partitions(n)) {
    InduceState st;
    std::map<int, int> groups;
    for (int v : mu) ++groups[v];
    for (const auto& [v, k] : groups) st.part_groups.push_back({v, k});
    st.comp = &comp;
    st.chars = &chars;
    st.room.assign(comp.begin(), comp.end());
    st.block_parts.assign(comp.size(), {});
    out.values.push_back(induce_distribute(st, 0, 1));
  }
  return out;
}

namespace {

void tables_rec(const Composition& a, const Composition& b, size_t row,
                std::vector<int>& col_left, std::vector<std::vector<int>>& table,
                std::vector<std::vector<std::vector<int>>>& out) {
  if (row == a.size()) {
    out.push_back(table);
    return;
  }
  const int cols = static_cast<int>(b.size());
  std::function<void(int, int)> fill = [&](int col, int left) {
    if (col == cols - 1) {
      if (left > col_left[col]) return;
      table[row][col] = left;
      col_left[col] -= left;
      tables_rec(a, b, row + 1, col_left, table, out);
      col_left[col] += left;
      return;
    }
    for (int take = 0; take <= std::min(left, col_left[col]); ++take) {
      table[row][col] = take;
      col_left[col] -= take;
      fill(col + 1, left - take);
      col_left[col] += take;
    }
  };
  fill(0, a[row]);
}

}  // namespace

std::vector<std::vector<std::vector<int>>> double_cosets(const Composition& a,
                                                         const Composition& b) {
  if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0))
    throw std::invalid_argument("double_cosets: compositions of different n");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> col_left(b.begin(), b.end());
  std::vector<std::vector<int>> table(a.size(), std::vector<int>(b.size(), 0));
  tables_rec(a, b, 0, col_left, table, out);
  return out;
}

Composition stabilizer_of(const std::vector<int>& alpha) {
  Composition comp;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0 && alpha[i] < alpha[i - 1])
      throw std::invalid_argument("stabilizer_of: multi-index not non-decreasing");
    if (i == 0 || alpha[i] != alpha[i - 1])
      comp.push_back(1);
    else
      ++comp.back();
  }
  return comp;
}

}  // namespace eqcoll
