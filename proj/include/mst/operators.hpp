#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "mst/model_space.hpp"

namespace mst {

/// Matrix of an operator K_domain -> K_codomain in the two Takenaka-Malmquist
/// bases: entries(i, j) = <T e_j, e_i>.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  BlaschkeProduct domain;
  BlaschkeProduct codomain;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// Composition a * b; throws SpaceMismatch unless b.codomain == a.domain.
OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b);

/// Antilinear map v -> J conj(v) on coordinates of a model space.
struct ConjugationMatrix {
  Eigen::MatrixXcd j;
  BlaschkeProduct space;
};

/// A^{domain, codomain}_symbol f = P_codomain(symbol f).
OperatorMatrix tto_matrix(const ModelSpace& domain, const ModelSpace& codomain, const RationalFn& symbol);

/// f -> a f. Throws MultiplierRangeViolation if some a e_j leaves the codomain.
OperatorMatrix multiplication_matrix(const ModelSpace& domain, const ModelSpace& codomain, const RationalFn& a);

/// Whether the compression of symbol from domain to codomain is zero:
/// max entry < 1e-10 (1 + sampled sup of symbol).
bool is_zero_symbol(const ModelSpace& domain, const ModelSpace& codomain, const RationalFn& symbol);

/// Factorization A^{theta,alpha}_phi = E A^{eta,gamma}_{phi~} F with
///   a1 = multiplier_between(K_eta, K_theta),  F = M_{1/a1}: K_theta -> K_eta,
///   a2 = multiplier_between(K_gamma, K_alpha), E = A^{gamma,alpha}_{1/conj(a2)},
///   phi~ = conj(a2) phi a1.
struct EquivalenceResult {
  OperatorMatrix e;
  OperatorMatrix f;
  RationalFn a1;
  RationalFn a2;
  RationalFn tilde_symbol;
  OperatorMatrix a;        ///< A^{theta,alpha}_phi
  OperatorMatrix a_tilde;  ///< A^{eta,gamma}_{phi~}
  double residual = 0.0;   ///< ||A - E A~ F||_F
  double cond_e = 0.0;
  double cond_f = 0.0;
};

EquivalenceResult equivalence_transform(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                        const BlaschkeProduct& eta, const BlaschkeProduct& gamma,
                                        const RationalFn& symbol);

struct BrownHalmosResult {
  /// ||A^{k1,k2}_{psi phi} - A^{mid,k2}_psi A^{k1,mid}_phi||_F
  double residual = 0.0;
  /// phi k1 lies in mid, checked on the basis.
  bool hypothesis_holds = false;
};

BrownHalmosResult brown_halmos_product(const ModelSpace& k1, const ModelSpace& mid, const ModelSpace& k2,
                                       const RationalFn& psi, const RationalFn& phi);

/// C f = theta conj(z f) on K_theta.
ConjugationMatrix conjugation_matrix(const ModelSpace& space);

/// ||J conj(A) J^-1 - A^H||_F < 1e-9 (1 + ||A||_F).
bool is_complex_selfadjoint(const OperatorMatrix& a, const ConjugationMatrix& c);
double selfadjoint_residual(const OperatorMatrix& a, const ConjugationMatrix& c);

enum class PullbackMode { via_F, via_EF };

/// For F: H -> K and C on K, the conjugation on H given by
/// via_F: F^-1 J conj(F), via_EF: F^H J conj(F).
ConjugationMatrix conjugation_pullback(const ConjugationMatrix& c, const OperatorMatrix& f, PullbackMode mode);

/// ||J^H J - I||_F
double conjugation_unitarity_defect(const ConjugationMatrix& c);

struct RankEquivalence {
  Eigen::MatrixXcd e;
  Eigen::MatrixXcd f;
  double residual = 0.0;
  double cond_e = 0.0;
  double cond_f = 0.0;
};

/// E, F with A = E B F when rank A = rank B; std::nullopt otherwise.
std::optional<RankEquivalence> rank_equivalence(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Rank with singular values above 1e-10 sigma_max counted.
int numerical_rank(const Eigen::MatrixXcd& a, double rel_tol = tol::kRank);
double condition_number(const Eigen::MatrixXcd& a);

struct KernelRange {
  std::vector<Eigen::VectorXcd> kernel_basis;
  int rank = 0;
};

KernelRange kernel_and_range(const Eigen::MatrixXcd& a);

}  // namespace mst
