#include "eqcoll/kernels.hpp"

namespace eqcoll {

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::EvenCY: return "even-cy";
    case CaseTag::OddCY: return "odd-cy";
    case CaseTag::TrivialCohomology: return "trivial";
    case CaseTag::Other: return "other";
  }
  return "other";
}

void validate_input(const GeometricInput& g) {
  if (g.n < 2) throw std::invalid_argument("GeometricInput: n must be >= 2");
  if (g.d < 1) throw std::invalid_argument("GeometricInput: d must be >= 1");
  const GradedDim sphere = direct_sum(GradedDim::unit(), GradedDim::point(g.d));
  switch (g.tag) {
    case CaseTag::EvenCY:
      if (g.d % 2 != 0 || g.h != sphere)
        throw std::invalid_argument("GeometricInput: even-cy requires even d and h = C[0]+C[-d]");
      break;
    case CaseTag::OddCY:
      if (g.d % 2 != 1 || g.h != sphere)
        throw std::invalid_argument("GeometricInput: odd-cy requires odd d and h = C[0]+C[-d]");
      break;
    case CaseTag::TrivialCohomology:
      if (g.h != GradedDim::unit())
        throw std::invalid_argument("GeometricInput: trivial case requires h = C[0]");
      break;
    case CaseTag::Other:
      break;
  }
}

GeometricInput make_cy_input(int n, int d) {
  GeometricInput g;
  g.n = n;
  g.d = d;
  g.h = direct_sum(GradedDim::unit(), GradedDim::point(d));
  g.tag = d % 2 == 0 ? CaseTag::EvenCY : CaseTag::OddCY;
  validate_input(g);
  return g;
}

GeometricInput make_trivial_input(int n, int d) {
  GeometricInput g;
  g.n = n;
  g.d = d;
  g.h = GradedDim::unit();
  g.tag = CaseTag::TrivialCohomology;
  validate_input(g);
  return g;
}

KernelCompositions compose_kernels(const GeometricInput& g) {
  validate_input(g);
  KernelCompositions out;
  out.gp_r_gp.product_omega = shift(sym_power(g.h, g.n), g.d);
  out.gp_r_gpp.product_omega = shift(sym_power(g.h, g.n - 1), g.d);
  out.gpp_r_gp.product = sym_power(g.h, g.n - 1);
  out.gpp_r_gpp.diagonal = sym_power(g.h, g.n - 1);
  out.gpp_r_gpp.product = sym_power(g.h, g.n - 2);
  return out;
}

std::string functor_class_name(const FunctorClass& c) {
  switch (c.tag) {
    case FunctorTag::PnFunctor: return "P^" + std::to_string(c.degree) + "-functor";
    case FunctorTag::SphereLike: return "sphere-like";
    case FunctorTag::FullyFaithful: return "fully faithful";
    case FunctorTag::Undetermined: return "undetermined";
  }
  return "undetermined";
}

GrgResult grg(const GeometricInput& g) {
  validate_input(g);
  GrgResult result;
  switch (g.tag) {
    case CaseTag::EvenCY: {
      FormalKernel k;
      for (int j = 0; j < g.n; ++j) k.diagonal.add(g.d * j, 1);
      result.kernel = k;
      result.cls = {FunctorTag::PnFunctor, g.n - 1};
      break;
    }
    case CaseTag::OddCY: {
      if (g.n < 3) break;  // the odd case analysis starts at n = 3
      FormalKernel k;
      k.diagonal = direct_sum(GradedDim::unit(), GradedDim::point(g.d));
      result.kernel = k;
      result.cls = {FunctorTag::SphereLike, 0};
      break;
    }
    case CaseTag::TrivialCohomology: {
      FormalKernel k;
      k.diagonal = GradedDim::unit();
      result.kernel = k;
      result.cls = {FunctorTag::FullyFaithful, 0};
      break;
    }
    case CaseTag::Other:
      break;
  }
  return result;
}

bool pn_condition1_check(const FormalKernel& kernel, int n, int d) {
  if (!kernel.is_purely_diagonal()) return false;
  GradedDim expected;
  for (int j = 0; j < n; ++j) expected.add(d * j, 1);
  return kernel.diagonal == expected;
}

bool euler_consistency(const GeometricInput& g) {
  GrgResult result = grg(g);
  if (!result.kernel) throw std::invalid_argument("euler_consistency: grg is undetermined");
  KernelCompositions comp = compose_kernels(g);

  auto alternating = [&](const GradedDim FormalKernel::*atom) {
    SignedLaurent s(comp.gp_r_gp.*atom);
    s -= SignedLaurent(comp.gp_r_gpp.*atom);
    s -= SignedLaurent(comp.gpp_r_gp.*atom);
    s += SignedLaurent(comp.gpp_r_gpp.*atom);
    return s;
  };

  SignedLaurent diagonal = alternating(&FormalKernel::diagonal);
  SignedLaurent product = alternating(&FormalKernel::product);
  SignedLaurent product_omega = alternating(&FormalKernel::product_omega);

  // omega is trivial on a Calabi-Yau factor, so the two box atoms coincide.
  if (g.tag == CaseTag::EvenCY || g.tag == CaseTag::OddCY) {
    product += product_omega;
    product_omega = SignedLaurent{};
  }

  return diagonal == SignedLaurent(result.kernel->diagonal) &&
         product == SignedLaurent(result.kernel->product) &&
         product_omega == SignedLaurent(result.kernel->product_omega);
}

Int rank_fr(const RankInput& r) {
  if (r.n < 2) throw std::invalid_argument("rank_fr: n must be >= 2");
  return r.chi - 2 * r.n;
}

Int rank_twist(const RankInput& r) { return -2 * rank_fr(r); }

}  // namespace eqcoll
