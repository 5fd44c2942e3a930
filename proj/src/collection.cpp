#include "eqcoll/collection.hpp"

namespace eqcoll {

std::string strength_name(Strength s) {
  switch (s) {
    case Strength::Strong: return "strong";
    case Strength::CompletelyOrthogonal: return "completely-orthogonal";
    case Strength::General: return "general";
  }
  return "general";
}

ValidationReport validate(const ExceptionalCollection& c) {
  ValidationReport report;
  if (c.k < 1 || static_cast<int>(c.ext.size()) != c.k) {
    report.violations.push_back({0, 0, "ext table is not k x k"});
    return report;
  }
  for (int i = 0; i < c.k; ++i) {
    if (static_cast<int>(c.ext[i].size()) != c.k) {
      report.violations.push_back({i, 0, "ext row has wrong length"});
      return report;
    }
  }
  const GradedDim unit = GradedDim::unit();
  for (int i = 0; i < c.k; ++i) {
    if (c.ext[i][i] != unit)
      report.violations.push_back({i, i, "diagonal entry is not C[0]"});
    for (int j = 0; j < i; ++j) {
      if (!c.ext[i][j].is_zero())
        report.violations.push_back({i, j, "nonzero lower-triangular entry"});
    }
  }
  if (c.omega_ext) {
    if (static_cast<int>(c.omega_ext->size()) != c.k) {
      report.violations.push_back({0, 0, "omega_ext table is not k x k"});
    } else {
      for (int i = 0; i < c.k; ++i)
        if (static_cast<int>((*c.omega_ext)[i].size()) != c.k)
          report.violations.push_back({i, 0, "omega_ext row has wrong length"});
    }
  }
  if (c.cover_dim && (*c.cover_dim <= 0 || *c.cover_dim % 2 != 0))
    report.violations.push_back({0, 0, "cover_dim must be an even positive integer"});

  if (report.valid()) {
    report.completely_orthogonal = true;
    for (int i = 0; i < c.k && report.completely_orthogonal; ++i)
      for (int j = 0; j < c.k; ++j)
        if (i != j && !c.ext[i][j].is_zero()) {
          report.completely_orthogonal = false;
          break;
        }
  }
  return report;
}

Strength classify_strength(const ExceptionalCollection& c) {
  auto report = validate(c);
  if (!report.valid())
    throw std::invalid_argument("classify_strength: invalid collection");
  if (report.completely_orthogonal) return Strength::CompletelyOrthogonal;
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j)
      if (!c.ext[i][j].concentrated_in_degree(0)) return Strength::General;
  return Strength::Strong;
}

void fill_omega_serre(ExceptionalCollection& c, int cover_dim) {
  if (cover_dim <= 0 || cover_dim % 2 != 0)
    throw std::invalid_argument("fill_omega_serre: cover_dim must be even positive");
  std::vector<std::vector<GradedDim>> omega(c.k, std::vector<GradedDim>(c.k));
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j) omega[i][j] = shift(dual(c.ext[j][i]), -cover_dim);
  c.omega_ext = std::move(omega);
  c.cover_dim = cover_dim;
}

GradedDim cy_lift_ext(const ExceptionalCollection& c, int i, int j) {
  if (!c.omega_ext) throw std::invalid_argument("cy_lift_ext: omega_ext missing");
  return direct_sum(c.ext[i][j], (*c.omega_ext)[i][j]);
}

bool is_spherical_lift(const ExceptionalCollection& c, int i) {
  if (!c.omega_ext || !c.cover_dim)
    throw std::invalid_argument("is_spherical_lift: omega_ext or cover_dim missing");
  GradedDim expected = direct_sum(GradedDim::unit(), GradedDim::point(*c.cover_dim));
  return cy_lift_ext(c, i, i) == expected;
}

}  // namespace eqcoll
