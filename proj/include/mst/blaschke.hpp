#pragma once

#include <vector>

#include "mst/rational.hpp"

namespace mst {

/// Finite Blaschke product c * prod (z - a_j) / (1 - conj(a_j) z).
///
/// Zeros are kept in the order given; model-space bases depend on it.
class BlaschkeProduct {
 public:
  /// The constant 1 (degree 0).
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx constant = 1.0);

  /// z^n
  static BlaschkeProduct power(int n);

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx constant() const { return constant_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  cplx operator()(cplx z) const;
  /// prod (1 - conj(a_j) z), the common denominator of the model space.
  ComplexPoly denominator_poly() const;
  /// prod (z - a_j)
  ComplexPoly numerator_poly() const;

  friend bool operator==(const BlaschkeProduct&, const BlaschkeProduct&) = default;

 private:
  std::vector<cplx> zeros_;
  cplx constant_ = 1.0;
};

RationalFn to_rational(const BlaschkeProduct& b);

/// B = alpha_minus * z^n * alpha_plus on the circle.
struct BlaschkeFactorization {
  /// c * z^-n * prod (z - a_j); invertible and conjugate-analytic.
  RationalFn alpha_minus;
  int n = 0;
  /// prod 1 / (1 - conj(a_j) z); invertible and analytic.
  RationalFn alpha_plus;
};

BlaschkeFactorization factorize(const BlaschkeProduct& b);

/// (B - a) / (1 - conj(a) B) as a Blaschke product of the same degree.
BlaschkeProduct frostman_shift(const BlaschkeProduct& b, cplx a);

struct GeneralizedFrostman {
  /// (theta - conj(h)) / (1 - h theta), unimodular on the circle.
  RationalFn theta_hbar;
  /// 1 - conj(h) conj(theta)
  RationalFn a_minus;
  /// 1 / (1 - h theta)
  RationalFn a_plus;
};

/// Requires h analytic on the closed disk with sampled sup norm below 1.
GeneralizedFrostman generalized_frostman(const BlaschkeProduct& b, const RationalFn& h);

/// Multiset intersection of the zeros (clustered), constant 1.
BlaschkeProduct blaschke_gcd(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

/// b1 / b2 when the zeros of b2 are a sub-multiset of those of b1.
BlaschkeProduct blaschke_quotient(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

/// Boundary points where the zeros accumulate. Always empty for finite products.
std::vector<cplx> boundary_spectrum(const BlaschkeProduct& b);

/// Throws InvalidArgument unless h is analytic on the closed disk with ||h||_inf < 1.
void check_contractive_analytic(const RationalFn& h);

}  // namespace mst
