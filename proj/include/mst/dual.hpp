#pragma once

#include <optional>
#include <vector>

#include "mst/model_space.hpp"

namespace mst {

/// Element f = analytic + antianalytic of the complement of K_theta, with the
/// analytic part in theta H^2 and the antianalytic part in the conjugate of z H^2.
struct ComplementElement {
  RationalFn analytic;
  RationalFn antianalytic;
  BlaschkeProduct theta;

  RationalFn value() const { return analytic + antianalytic; }
};

/// Throws InvalidArgument unless both parts lie where they should.
void validate(const ComplementElement& f);

/// Splits an arbitrary rational function g as Q_theta g.
ComplementElement complement_part(const BlaschkeProduct& theta, const RationalFn& g);

/// D^{theta,alpha}_phi f = Q_alpha(phi f).
ComplementElement dual_apply(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const RationalFn& symbol,
                             const ComplementElement& f);

struct DualKernel {
  std::vector<ComplementElement> basis;
  int dim = 0;
  /// deg theta - deg gamma
  int k = 0;
  /// gcd(theta, z alpha)
  BlaschkeProduct gamma;
  /// Largest membership residual over the basis (analytic leak and phi f outside K_theta).
  double max_residual = 0.0;
};

/// Kernel of D^theta_phi for phi = alpha (z - 1). Every returned element is
/// checked; a failed check throws FormulaMismatch.
DualKernel dual_kernel(const BlaschkeProduct& theta, const BlaschkeProduct& alpha);

/// The symbol alpha (z - 1) used by dual_kernel.
RationalFn dual_kernel_symbol(const BlaschkeProduct& alpha);

struct DualEquivalence {
  /// Largest sampled difference of the two sides over the probes.
  double residual = 0.0;
  RationalFn a1;
  RationalFn a2;
  RationalFn tilde_symbol;
};

/// Checks D^{theta,alpha}_phi = D^{gamma,alpha}_{1/conj(a2)} D^{eta,gamma}_{phi~} D^{theta,eta}_{1/a1}
/// with conjugate-analytic a1, a2 on `probes` random elements of the complement of K_theta.
/// tilde_override replaces phi~ = conj(a2) phi a1.
DualEquivalence dual_equivalence(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                 const BlaschkeProduct& eta, const BlaschkeProduct& gamma, const RationalFn& symbol,
                                 const std::optional<RationalFn>& tilde_override = std::nullopt, int probes = 10,
                                 unsigned seed = 7);

/// Rank of the Hankel matrix [f^(-i-j-1)], 0 <= i, j < max_n.
int hankel_rank(const RationalFn& symbol, int max_n);

}  // namespace mst
