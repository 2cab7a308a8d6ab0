#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mst/blaschke.hpp"

namespace mst {

/// Model space K_B = H^2 minus B H^2 for a finite Blaschke product B, with the
/// Takenaka-Malmquist orthonormal basis
///   e_k = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z) * prod_{j<k} (z - a_j) / (1 - conj(a_j) z)
/// built in the zero order of B.
class ModelSpace {
 public:
  ModelSpace() = default;
  explicit ModelSpace(BlaschkeProduct inner);

  const BlaschkeProduct& inner() const { return inner_; }
  const std::vector<RationalFn>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  /// Coordinates <f, e_k> in the basis.
  Eigen::VectorXcd coordinates(const RationalFn& f) const;
  /// sum_k c_k e_k
  RationalFn combine(const Eigen::VectorXcd& coords) const;

 private:
  BlaschkeProduct inner_;
  std::vector<RationalFn> basis_;
};

inline ModelSpace build_space(const BlaschkeProduct& b) { return ModelSpace(b); }

/// Same inner function zeros in the same order.
bool same_space(const ModelSpace& a, const ModelSpace& b);

struct KernelPair {
  /// (1 - conj(theta(lambda)) theta(z)) / (1 - conj(lambda) z)
  RationalFn k;
  /// (theta(z) - theta(lambda)) / (z - lambda)
  RationalFn k_tilde;
  cplx lambda;
};

/// Reproducing kernel and conjugate kernel at |lambda| <= 1.
KernelPair reproducing_kernels(const ModelSpace& space, cplx lambda);

/// Orthogonal projection P_B f.
RationalFn project(const ModelSpace& space, const RationalFn& f);
/// Q_B f = f - P_B f.
RationalFn complement_project(const ModelSpace& space, const RationalFn& f);

/// ||f - P_B f||, the distance from f to the model space.
double membership_residual(const ModelSpace& space, const RationalFn& f);
/// ||f - P_B f|| < tol * (1 + ||f||)
bool contains(const ModelSpace& space, const RationalFn& f, double tol = tol::kMembership);

/// Invertible multiplier a with a * source = target, built from the analytic
/// factors of the two inner functions and normalized so a(0) > 0.
/// Throws NoMultiplier when the dimensions differ.
RationalFn multiplier_between(const ModelSpace& source, const ModelSpace& target);
/// Inverse of multiplier_between(source, target), built from the same factors.
RationalFn inverse_multiplier_between(const ModelSpace& source, const ModelSpace& target);

struct CrofootResult {
  /// sqrt(1 - |w|^2) / (1 - conj(w) theta)
  RationalFn j;
  /// K over the Frostman shift of theta by w
  ModelSpace target;
};

/// Crofoot transform: isometric multiplier from K_theta onto K_{theta_w}.
CrofootResult crofoot_multiplier(const ModelSpace& space, cplx w);

/// Symbol 1 - |k|^2 / |1 - h theta|^2 whose compression to K_theta vanishes
/// exactly when multiplication by k / (1 - h theta) is isometric.
RationalFn crofoot_defect_symbol(const BlaschkeProduct& b, const RationalFn& h, cplx k);

/// Whether the compression of crofoot_defect_symbol to K_B is the zero matrix.
bool check_condition_515N(const BlaschkeProduct& b, const RationalFn& h, cplx k);

/// Gram matrix <f_j, f_i> of a finite family.
Eigen::MatrixXcd gram_matrix(const std::vector<RationalFn>& family);

}  // namespace mst
