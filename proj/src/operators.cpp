#include "mst/operators.hpp"

#include <cmath>
#include <limits>

#include "mst/errors.hpp"

namespace mst {

namespace {

Eigen::JacobiSVD<Eigen::MatrixXcd> full_svd(const Eigen::MatrixXcd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (b.codomain.zeros() != a.domain.zeros()) throw SpaceMismatch("composition of operators on different spaces");
  return {a.entries * b.entries, b.domain, a.codomain};
}

OperatorMatrix tto_matrix(const ModelSpace& domain, const ModelSpace& codomain, const RationalFn& symbol) {
  OperatorMatrix m{Eigen::MatrixXcd(codomain.dim(), domain.dim()), domain.inner(), codomain.inner()};
  for (int j = 0; j < domain.dim(); ++j)
    m.entries.col(j) = codomain.coordinates(symbol * domain.basis()[static_cast<std::size_t>(j)]);
  return m;
}

OperatorMatrix multiplication_matrix(const ModelSpace& domain, const ModelSpace& codomain, const RationalFn& a) {
  OperatorMatrix m{Eigen::MatrixXcd(codomain.dim(), domain.dim()), domain.inner(), codomain.inner()};
  for (int j = 0; j < domain.dim(); ++j) {
    const RationalFn image = a * domain.basis()[static_cast<std::size_t>(j)];
    const Eigen::VectorXcd c = codomain.coordinates(image);
    const double miss = l2_norm(image - codomain.combine(c));
    if (!(miss < tol::kMembership * (1.0 + l2_norm(image))))
      throw MultiplierRangeViolation("a e_" + std::to_string(j) + " is not in the codomain (residual " +
                                     std::to_string(miss) + ")");
    m.entries.col(j) = c;
  }
  return m;
}

bool is_zero_symbol(const ModelSpace& domain, const ModelSpace& codomain, const RationalFn& symbol) {
  const OperatorMatrix m = tto_matrix(domain, codomain, symbol);
  const double max_entry = m.entries.size() == 0 ? 0.0 : m.entries.cwiseAbs().maxCoeff();
  return max_entry < 1e-10 * (1.0 + sup_norm_sampled(symbol));
}

EquivalenceResult equivalence_transform(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                        const BlaschkeProduct& eta, const BlaschkeProduct& gamma,
                                        const RationalFn& symbol) {
  const ModelSpace k_theta(theta), k_alpha(alpha), k_eta(eta), k_gamma(gamma);
  EquivalenceResult r;
  r.a1 = multiplier_between(k_eta, k_theta);
  r.a2 = multiplier_between(k_gamma, k_alpha);
  r.f = multiplication_matrix(k_theta, k_eta, inverse_multiplier_between(k_eta, k_theta));
  r.e = tto_matrix(k_gamma, k_alpha, circle_conjugate(inverse_multiplier_between(k_gamma, k_alpha)));
  r.tilde_symbol = circle_conjugate(r.a2) * symbol * r.a1;
  r.a = tto_matrix(k_theta, k_alpha, symbol);
  r.a_tilde = tto_matrix(k_eta, k_gamma, r.tilde_symbol);
  r.residual = (r.a.entries - r.e.entries * r.a_tilde.entries * r.f.entries).norm();
  r.cond_e = condition_number(r.e.entries);
  r.cond_f = condition_number(r.f.entries);
  return r;
}

BrownHalmosResult brown_halmos_product(const ModelSpace& k1, const ModelSpace& mid, const ModelSpace& k2,
                                       const RationalFn& psi, const RationalFn& phi) {
  BrownHalmosResult r;
  r.hypothesis_holds = true;
  for (const RationalFn& e : k1.basis()) {
    if (!contains(mid, phi * e)) {
      r.hypothesis_holds = false;
      break;
    }
  }
  const Eigen::MatrixXcd lhs = tto_matrix(k1, k2, psi * phi).entries;
  const Eigen::MatrixXcd rhs = tto_matrix(mid, k2, psi).entries * tto_matrix(k1, mid, phi).entries;
  r.residual = (lhs - rhs).norm();
  return r;
}

ConjugationMatrix conjugation_matrix(const ModelSpace& space) {
  const RationalFn theta_over_z = to_rational(space.inner()) * RationalFn::monomial(-1);
  ConjugationMatrix c{Eigen::MatrixXcd(space.dim(), space.dim()), space.inner()};
  for (int j = 0; j < space.dim(); ++j)
    c.j.col(j) = space.coordinates(theta_over_z * circle_conjugate(space.basis()[static_cast<std::size_t>(j)]));
  return c;
}

double selfadjoint_residual(const OperatorMatrix& a, const ConjugationMatrix& c) {
  if (a.rows() != a.cols() || a.rows() != c.j.rows()) throw SpaceMismatch("operator and conjugation sizes differ");
  if (a.domain.zeros() != c.space.zeros()) throw SpaceMismatch("operator and conjugation act on different spaces");
  const Eigen::MatrixXcd lhs = c.j * a.entries.conjugate() * c.j.inverse();
  return (lhs - a.entries.adjoint()).norm();
}

bool is_complex_selfadjoint(const OperatorMatrix& a, const ConjugationMatrix& c) {
  return selfadjoint_residual(a, c) < 1e-9 * (1.0 + a.entries.norm());
}

ConjugationMatrix conjugation_pullback(const ConjugationMatrix& c, const OperatorMatrix& f, PullbackMode mode) {
  if (f.codomain.zeros() != c.space.zeros()) throw SpaceMismatch("F does not map into the conjugation's space");
  if (f.rows() != f.cols()) throw SingularOperator("F is not square");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(f.entries);
  if (!lu.isInvertible() || condition_number(f.entries) > 1e12) throw SingularOperator("F is singular");
  const Eigen::MatrixXcd left = mode == PullbackMode::via_F ? Eigen::MatrixXcd(lu.inverse())
                                                            : Eigen::MatrixXcd(f.entries.adjoint());
  return {left * c.j * f.entries.conjugate(), f.domain};
}

double conjugation_unitarity_defect(const ConjugationMatrix& c) {
  return (c.j.adjoint() * c.j - Eigen::MatrixXcd::Identity(c.j.rows(), c.j.cols())).norm();
}

int numerical_rank(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

double condition_number(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 1.0;
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues();
  const double smin = s(s.size() - 1);
  if (a.rows() != a.cols() || smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

std::optional<RankEquivalence> rank_equivalence(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw SpaceMismatch("rank equivalence needs square matrices of equal size");
  const int r = numerical_rank(a);
  if (r != numerical_rank(b)) return std::nullopt;
  const auto sa = full_svd(a);
  const auto sb = full_svd(b);
  // A = Ua Sa Va^H and B = Ub Sb Vb^H; with D Sb = Sa,
  // E = Ua D Ub^H and F = Vb Va^H give E B F = Ua D Sb Va^H = A.
  const Eigen::Index n = a.rows();
  Eigen::VectorXcd d = Eigen::VectorXcd::Ones(n);
  for (int i = 0; i < r; ++i) d(i) = sa.singularValues()(i) / sb.singularValues()(i);
  RankEquivalence out;
  out.e = sa.matrixU() * d.asDiagonal() * sb.matrixU().adjoint();
  out.f = sb.matrixV() * sa.matrixV().adjoint();
  out.residual = (a - out.e * b * out.f).norm();
  out.cond_e = condition_number(out.e);
  out.cond_f = condition_number(out.f);
  return out;
}

KernelRange kernel_and_range(const Eigen::MatrixXcd& a) {
  KernelRange kr;
  kr.rank = numerical_rank(a);
  if (a.cols() == 0) return kr;
  const auto svd = full_svd(a);
  for (Eigen::Index i = kr.rank; i < a.cols(); ++i) kr.kernel_basis.emplace_back(svd.matrixV().col(i));
  return kr;
}

}  // namespace mst
