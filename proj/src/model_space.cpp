#include "mst/model_space.hpp"

#include <cmath>

#include "mst/errors.hpp"

namespace mst {

namespace {

// Poles {1/conj(a)} of prod (1 - conj(a) z) and the factor c with
// prod (1 - conj(a) z) = c * prod (z - 1/conj(a)).
struct OuterPoles {
  std::vector<cplx> poles;
  cplx scale = 1.0;
};

OuterPoles outer_poles(const std::vector<cplx>& zeros) {
  OuterPoles o;
  for (const cplx a : zeros) {
    if (a == cplx(0.0)) continue;
    o.scale *= -std::conj(a);
    o.poles.push_back(1.0 / std::conj(a));
  }
  return o;
}

// Q with P = (1 - c z) Q, assuming P(1/c) = 0. Recurrence runs upward so it
// stays stable for |c| <= 1.
ComplexPoly divide_one_minus(const ComplexPoly& p, cplx c) {
  if (p.degree() < 1) return {};
  std::vector<cplx> q(static_cast<std::size_t>(p.degree()), 0.0);
  cplx prev = 0.0;
  for (int k = 0; k < p.degree(); ++k) {
    prev = p[k] + c * prev;
    q[static_cast<std::size_t>(k)] = prev;
  }
  return ComplexPoly(std::move(q));
}

}  // namespace

ModelSpace::ModelSpace(BlaschkeProduct inner) : inner_(std::move(inner)) {
  const auto& zeros = inner_.zeros();
  basis_.reserve(zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const std::vector<cplx> head(zeros.begin(), zeros.begin() + static_cast<std::ptrdiff_t>(k));
    const std::vector<cplx> upto(zeros.begin(), zeros.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    const OuterPoles o = outer_poles(upto);
    const double norm = std::sqrt(1.0 - std::norm(zeros[k]));
    basis_.push_back(RationalFn::from_roots(norm / o.scale, head, o.poles));
  }
}

Eigen::VectorXcd ModelSpace::coordinates(const RationalFn& f) const {
  Eigen::VectorXcd c(dim());
  for (int k = 0; k < dim(); ++k) c(k) = inner_product(f, basis_[static_cast<std::size_t>(k)]);
  return c;
}

RationalFn ModelSpace::combine(const Eigen::VectorXcd& coords) const {
  if (coords.size() != dim()) throw SpaceMismatch("coordinate vector length does not match dimension");
  RationalFn out;
  for (int k = 0; k < dim(); ++k)
    if (coords(k) != cplx(0.0)) out = out + basis_[static_cast<std::size_t>(k)] * coords(k);
  return out;
}

bool same_space(const ModelSpace& a, const ModelSpace& b) {
  const auto& za = a.inner().zeros();
  const auto& zb = b.inner().zeros();
  if (za.size() != zb.size()) return false;
  for (std::size_t i = 0; i < za.size(); ++i)
    if (std::abs(za[i] - zb[i]) > 1e-14) return false;
  return true;
}

KernelPair reproducing_kernels(const ModelSpace& space, cplx lambda) {
  if (std::abs(lambda) > 1.0 + 1e-12) throw InvalidArgument("reproducing kernel needs |lambda| <= 1");
  const BlaschkeProduct& b = space.inner();
  const ComplexPoly num = b.numerator_poly() * b.constant();
  const ComplexPoly den = b.denominator_poly();
  const cplx theta_l = b(lambda);
  const OuterPoles o = outer_poles(b.zeros());

  KernelPair kp;
  kp.lambda = lambda;
  const ComplexPoly pk = den - num * std::conj(theta_l);
  const ComplexPoly qk = lambda == cplx(0.0) ? pk : divide_one_minus(pk, std::conj(lambda));
  kp.k = RationalFn::from_poles(qk * (1.0 / o.scale), o.poles);
  const ComplexPoly pt = num - den * theta_l;
  kp.k_tilde = RationalFn::from_poles(pt.deflate(lambda) * (1.0 / o.scale), o.poles);
  return kp;
}

RationalFn project(const ModelSpace& space, const RationalFn& f) {
  return space.combine(space.coordinates(f));
}

RationalFn complement_project(const ModelSpace& space, const RationalFn& f) {
  return f - project(space, f);
}

double membership_residual(const ModelSpace& space, const RationalFn& f) {
  return l2_norm(complement_project(space, f));
}

bool contains(const ModelSpace& space, const RationalFn& f, double tol) {
  return membership_residual(space, f) < tol * (1.0 + l2_norm(f));
}

RationalFn multiplier_between(const ModelSpace& source, const ModelSpace& target) {
  if (source.dim() != target.dim())
    throw NoMultiplier("no invertible multiplier between model spaces of dimensions " +
                       std::to_string(source.dim()) + " and " + std::to_string(target.dim()));
  // a = prod_source (1 - conj(a) z) / prod_target (1 - conj(b) z), so a(0) = 1.
  const OuterPoles s = outer_poles(source.inner().zeros());
  const OuterPoles t = outer_poles(target.inner().zeros());
  const RationalFn a = RationalFn::from_roots(s.scale / t.scale, s.poles, t.poles);
  for (const RationalFn& e : source.basis()) {
    if (!contains(target, a * e))
      throw MultiplierRangeViolation("constructed multiplier does not map the source basis into the target");
  }
  return a;
}

RationalFn inverse_multiplier_between(const ModelSpace& source, const ModelSpace& target) {
  if (source.dim() != target.dim())
    throw NoMultiplier("no invertible multiplier between model spaces of different dimensions");
  const OuterPoles s = outer_poles(source.inner().zeros());
  const OuterPoles t = outer_poles(target.inner().zeros());
  return RationalFn::from_roots(t.scale / s.scale, t.poles, s.poles);
}

CrofootResult crofoot_multiplier(const ModelSpace& space, cplx w) {
  if (!(std::abs(w) < 1.0)) throw InvalidArgument("Crofoot transform requires |w| < 1");
  if (w == cplx(0.0)) return {RationalFn::constant(1.0), space};
  const RationalFn theta = to_rational(space.inner());
  const RationalFn denom = RationalFn::constant(1.0) - theta * std::conj(w);
  CrofootResult r;
  r.j = denom.inverse() * std::sqrt(1.0 - std::norm(w));
  r.target = ModelSpace(frostman_shift(space.inner(), w));
  return r;
}

RationalFn crofoot_defect_symbol(const BlaschkeProduct& b, const RationalFn& h, cplx k) {
  check_contractive_analytic(h);
  if (k == cplx(0.0)) throw InvalidArgument("the Crofoot constant k must be nonzero");
  const RationalFn one_minus = RationalFn::constant(1.0) - h * to_rational(b);
  const RationalFn modulus_sq = one_minus * one_minus.conj();
  return RationalFn::constant(1.0) - modulus_sq.inverse() * std::norm(k);
}

bool check_condition_515N(const BlaschkeProduct& b, const RationalFn& h, cplx k) {
  const RationalFn s = crofoot_defect_symbol(b, h, k);
  const ModelSpace space(b);
  double max_entry = 0.0;
  for (const RationalFn& ej : space.basis()) {
    const RationalFn col = s * ej;
    for (const RationalFn& ei : space.basis()) max_entry = std::max(max_entry, std::abs(inner_product(col, ei)));
  }
  return max_entry < 1e-10 * (1.0 + sup_norm_sampled(s));
}

Eigen::MatrixXcd gram_matrix(const std::vector<RationalFn>& family) {
  const auto n = static_cast<Eigen::Index>(family.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      g(i, j) = inner_product(family[static_cast<std::size_t>(j)], family[static_cast<std::size_t>(i)]);
  return g;
}

}  // namespace mst
