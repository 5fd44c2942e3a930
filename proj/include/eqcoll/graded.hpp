#ifndef EQCOLL_GRADED_HPP
#define EQCOLL_GRADED_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace eqcoll {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

using Partition = std::vector<int>;    // weakly decreasing, parts >= 1
using Composition = std::vector<int>;  // blocks >= 1

Int factorial(int n);
Int binomial(const Int& n, int k);

/// Finite-support dimension function on integer cohomological degrees.
/// Convention: [m] translates the support by -m, so C[-d] is one dimension
/// sitting in degree d.
class GradedDim {
 public:
  GradedDim() = default;

  /// One summand: `mult` dimensions in the given degree.
  static GradedDim point(int degree, Int mult = 1);

  /// C[0], the tensor unit.
  static GradedDim unit() { return point(0); }

  void add(int degree, const Int& mult);

  const std::map<int, Int>& dims() const { return dims_; }
  Int at(int degree) const;
  Int total_dim() const;
  bool is_zero() const { return dims_.empty(); }
  bool concentrated_in_degree(int degree) const;

  bool operator==(const GradedDim& other) const = default;

 private:
  std::map<int, Int> dims_;  // degree -> multiplicity, entries > 0 only
};

/// Finite-support Laurent bookkeeping with coefficients of any sign.
class SignedLaurent {
 public:
  SignedLaurent() = default;
  explicit SignedLaurent(const GradedDim& a);

  static SignedLaurent term(int degree, Int coeff);

  void add(int degree, const Int& coeff);
  const std::map<int, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  SignedLaurent& operator+=(const SignedLaurent& other);
  SignedLaurent& operator-=(const SignedLaurent& other);
  SignedLaurent operator*(const SignedLaurent& other) const;
  SignedLaurent& operator*=(const Int& scalar);

  /// Exact division by a positive integer; throws if any coefficient is
  /// not divisible.
  SignedLaurent divided_by(const Int& divisor) const;

  /// Conversion back to a dimension vector; throws on negative coefficients.
  GradedDim to_graded_dim() const;

  bool operator==(const SignedLaurent& other) const = default;

 private:
  std::map<int, Int> coeffs_;  // degree -> coefficient, nonzero only
};

GradedDim direct_sum(const GradedDim& a, const GradedDim& b);
GradedDim tensor(const GradedDim& a, const GradedDim& b);
GradedDim shift(const GradedDim& a, int m);
GradedDim dual(const GradedDim& a);

/// Graded (super) symmetric power: ordinary symmetric powers on the even
/// part, exterior powers on the odd part, mixed by total degree.
GradedDim sym_power(const GradedDim& a, int k);

/// Koszul-signed trace of a single cycle of length `len` acting on the
/// len-fold tensor power of `a`: the degree-j term of a contributes
/// (-1)^{j(len-1)} t^{len*j}.
SignedLaurent cycle_substitute(const GradedDim& a, int len);

/// Koszul-signed trace of a permutation of the given cycle type on the
/// n-fold tensor power of `a` (n = sum of the cycle type).
SignedLaurent graded_trace(const GradedDim& a, const Partition& cycle_type);

}  // namespace eqcoll

#endif
