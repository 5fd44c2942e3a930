#include "eqcoll/twist.hpp"

#include <sstream>

namespace eqcoll {

namespace {

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string object_name(const TestObject& o) {
  switch (o.kind) {
    case TestObject::Kind::PureF: return "F^n";
    case TestObject::Kind::MixedEF: return "E^" + std::to_string(o.mixed_k) + ".F^(n-" +
                                           std::to_string(o.mixed_k) + ")";
    case TestObject::Kind::BoxE: return "E^n(x)" + partition_str(o.rho);
  }
  return "";
}

std::string generator_name(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Shift1: return "[1]";
    case Generator::Kind::TBox: return "T_box";
    case Generator::Kind::TRho: return "T_" + partition_str(g.rho);
  }
  return "";
}

std::vector<TestObject> test_objects(int n) {
  if (n < 2) throw std::invalid_argument("test_objects: n must be >= 2");
  std::vector<TestObject> out;
  out.push_back({TestObject::Kind::PureF, 0, {}, 0, 0});
  for (int k = 1; k <= n - 1; ++k) out.push_back({TestObject::Kind::MixedEF, k, {}, 0, 0});
  for (const auto& rho : partitions(n)) out.push_back({TestObject::Kind::BoxE, 0, rho, 0, 0});
  return out;
}

std::vector<Generator> generators(int n) {
  if (n < 2) throw std::invalid_argument("generators: n must be >= 2");
  std::vector<Generator> out;
  out.push_back({Generator::Kind::Shift1, {}});
  out.push_back({Generator::Kind::TBox, {}});
  for (const auto& rho : partitions(n)) out.push_back({Generator::Kind::TRho, rho});
  return out;
}

TestObject apply_generator(const Generator& g, TestObject o, int n) {
  if (o.kind == TestObject::Kind::MixedEF && (o.mixed_k < 1 || o.mixed_k > n - 1))
    throw std::invalid_argument("apply_generator: mixed index out of range");
  if (o.kind == TestObject::Kind::BoxE && weight(o.rho) != n)
    throw std::invalid_argument("apply_generator: rho is not a partition of n");
  switch (g.kind) {
    case Generator::Kind::Shift1:
      o.shift += 1;
      break;
    case Generator::Kind::TBox:
      // E^k.F^(n-k) |-> E^k.F^(n-k)[-k]  (PureF is k = 0),
      // E^n(x)rho   |-> E^n(x)rho[-n].
      if (o.kind == TestObject::Kind::MixedEF) o.shift -= o.mixed_k;
      if (o.kind == TestObject::Kind::BoxE) o.shift -= n;
      break;
    case Generator::Kind::TRho:
      if (o.kind == TestObject::Kind::BoxE && o.rho == g.rho) {
        o.shift -= 2 * n - 1;
        o.omega_parity ^= 1;
      }
      break;
  }
  return o;
}

bool commutation_check(int n) {
  const auto objs = test_objects(n);
  const auto gens = generators(n);
  for (const auto& g1 : gens)
    for (const auto& g2 : gens)
      for (const auto& o : objs) {
        TestObject a = apply_generator(g2, apply_generator(g1, o, n), n);
        TestObject b = apply_generator(g1, apply_generator(g2, o, n), n);
        if (!(a == b)) return false;
      }
  return true;
}

ActionMatrix action_matrix(int n) {
  const auto objs = test_objects(n);
  const auto gens = generators(n);
  ActionMatrix m;
  for (const auto& o : objs) m.row_labels.push_back(object_name(o));
  for (const auto& g : gens) m.col_labels.push_back(generator_name(g));
  for (const auto& o : objs) {
    std::vector<Int> row;
    for (const auto& g : gens) row.push_back(apply_generator(g, o, n).shift);
    m.entries.push_back(std::move(row));
  }
  return m;
}

int matrix_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      // Integer cross-multiplication row reduction, no fractions.
      Int a = m[rank][col], b = m[r][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int faithful_rank(int n) { return matrix_rank(action_matrix(n).entries); }

TwistGroupReport twist_group_report(int n) {
  TwistGroupReport report;
  report.n = n;
  report.matrix = action_matrix(n);
  report.rank = matrix_rank(report.matrix.entries);
  report.expected_rank = partition_count(n) + 2;
  report.commutes = commutation_check(n);
  report.integer_kernel_trivial =
      report.rank == static_cast<int>(report.matrix.col_labels.size());
  report.discrepancy_note =
      "note: the source states the group is free abelian of rank p(n), while its own "
      "elimination argument pins down p(n)+2 independent exponents (shift, box twist, and "
      "one twist per partition); the computed rank is p(n)+2 = " +
      report.expected_rank.str() + " for n = " + std::to_string(n);
  return report;
}

}  // namespace eqcoll
