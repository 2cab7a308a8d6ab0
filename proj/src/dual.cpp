#include "mst/dual.hpp"

#include <random>
#include <sstream>

#include "mst/errors.hpp"
#include "mst/operators.hpp"

namespace mst {

namespace {

constexpr double kSplitTol = 1e-10;

RationalFn random_poly(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = cplx(g(rng), g(rng));
  return RationalFn(ComplexPoly(std::move(c)));
}

ComplementElement random_probe(std::mt19937_64& rng, const BlaschkeProduct& theta) {
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  ComplementElement f;
  f.theta = theta;
  f.analytic = to_rational(theta) * random_poly(rng, 2);
  // conj(z p(z)) plus one pole inside the disk: both lie in the conjugate of z H^2.
  const RationalFn zp = RationalFn::monomial(1) * random_poly(rng, 2);
  const cplx c(u(rng), u(rng));
  f.antianalytic = circle_conjugate(zp) + RationalFn::from_poles(ComplexPoly::constant(1.0), {c});
  return f;
}

}  // namespace

void validate(const ComplementElement& f) {
  const double scale = 1.0 + l2_norm(f.antianalytic) + l2_norm(f.analytic);
  const double leak_minus = l2_norm(riesz_project(f.antianalytic).analytic);
  if (!(leak_minus < kSplitTol * scale)) {
    std::ostringstream os;
    os << "antianalytic part has analytic content of norm " << leak_minus;
    throw InvalidArgument(os.str());
  }
  const double leak_plus = l2_norm(riesz_project(f.analytic).antianalytic);
  if (!(leak_plus < kSplitTol * scale)) {
    std::ostringstream os;
    os << "analytic part has antianalytic content of norm " << leak_plus;
    throw InvalidArgument(os.str());
  }
  const double in_model = l2_norm(project(ModelSpace(f.theta), f.analytic));
  if (!(in_model < tol::kMembership * scale)) {
    std::ostringstream os;
    os << "analytic part is not in theta H^2 (model-space component " << in_model << ")";
    throw InvalidArgument(os.str());
  }
}

ComplementElement complement_part(const BlaschkeProduct& theta, const RationalFn& g) {
  const FourierSplit s = riesz_project(g);
  ComplementElement out;
  out.theta = theta;
  out.analytic = complement_project(ModelSpace(theta), s.analytic);
  out.antianalytic = s.antianalytic;
  return out;
}

ComplementElement dual_apply(const BlaschkeProduct& theta, const BlaschkeProduct& alpha, const RationalFn& symbol,
                             const ComplementElement& f) {
  if (!(f.theta == theta)) throw SpaceMismatch("element does not belong to the complement of K_theta");
  validate(f);
  return complement_part(alpha, symbol * f.value());
}

RationalFn dual_kernel_symbol(const BlaschkeProduct& alpha) {
  return to_rational(alpha) * RationalFn(ComplexPoly({-1.0, 1.0}));
}

DualKernel dual_kernel(const BlaschkeProduct& theta, const BlaschkeProduct& alpha) {
  const int n = theta.degree();
  if (n < 1) throw InvalidArgument("dual_kernel needs deg theta >= 1");
  std::vector<cplx> z_alpha_zeros = alpha.zeros();
  z_alpha_zeros.push_back(0.0);
  const BlaschkeProduct z_alpha(z_alpha_zeros, alpha.constant());

  DualKernel out;
  out.gamma = blaschke_gcd(theta, z_alpha);
  out.k = n - out.gamma.degree();
  if (n <= out.k + 1) return out;

  // f_j = conj(B+) conj(d) conj(alpha z / gamma) conj(z) conj(z^j), with
  // B+ = prod 1 / (1 - conj(a) z) over the zeros of theta and
  // d = prod (1 - conj(w) z) over the zeros of theta / gamma.
  const RationalFn b_plus = factorize(theta).alpha_plus;
  const RationalFn d(blaschke_quotient(theta, out.gamma).denominator_poly());
  const RationalFn beta = to_rational(blaschke_quotient(z_alpha, out.gamma));
  const RationalFn prefix = circle_conjugate(b_plus * d * beta);
  const RationalFn phi = dual_kernel_symbol(alpha);
  const ModelSpace k_theta(theta);

  for (int j = 0; j < n - out.k - 1; ++j) {
    ComplementElement f;
    f.theta = theta;
    f.antianalytic = prefix * RationalFn::monomial(-(j + 1));
    const double scale = 1.0 + l2_norm(f.antianalytic);
    const double leak = l2_norm(riesz_project(f.antianalytic).analytic) / scale;
    const RationalFn image = phi * f.antianalytic;
    const double outside = membership_residual(k_theta, image) / (1.0 + l2_norm(image));
    out.max_residual = std::max({out.max_residual, leak, outside});
    if (!(leak < tol::kMembership) || !(outside < tol::kMembership)) {
      std::ostringstream os;
      os << "kernel candidate " << j << " failed verification (analytic leak " << leak << ", phi f outside K_theta "
         << outside << ")";
      throw FormulaMismatch(os.str());
    }
    out.basis.push_back(std::move(f));
  }
  std::vector<RationalFn> family;
  for (const auto& f : out.basis) family.push_back(f.value());
  if (numerical_rank(gram_matrix(family)) != static_cast<int>(family.size()))
    throw FormulaMismatch("kernel candidates are linearly dependent");
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

DualEquivalence dual_equivalence(const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                 const BlaschkeProduct& eta, const BlaschkeProduct& gamma, const RationalFn& symbol,
                                 const std::optional<RationalFn>& tilde_override, int probes, unsigned seed) {
  const ModelSpace k_theta(theta), k_alpha(alpha), k_eta(eta), k_gamma(gamma);
  // b1: K_eta -> K_theta analytic; a1 = 1 / conj(b1) gives theta = a1 eta / conj(a1).
  const RationalFn b1 = multiplier_between(k_eta, k_theta);
  const RationalFn b2 = multiplier_between(k_gamma, k_alpha);
  DualEquivalence out;
  out.a1 = circle_conjugate(b1).inverse();
  out.a2 = circle_conjugate(b2).inverse();
  out.tilde_symbol = tilde_override ? *tilde_override : symbol / (b2 * circle_conjugate(b1));
  const RationalFn a1_inv = circle_conjugate(b1);
  const RationalFn a2_bar_inv = b2;

  std::mt19937_64 rng(seed);
  for (int p = 0; p < probes; ++p) {
    const ComplementElement f = random_probe(rng, theta);
    const RationalFn lhs = dual_apply(theta, alpha, symbol, f).value();
    const ComplementElement step1 = dual_apply(theta, eta, a1_inv, f);
    const ComplementElement step2 = dual_apply(eta, gamma, out.tilde_symbol, step1);
    const RationalFn rhs = dual_apply(gamma, alpha, a2_bar_inv, step2).value();
    out.residual = std::max(out.residual, sampled_distance(lhs, rhs) / (1.0 + sup_norm_sampled(lhs, 32)));
  }
  return out;
}

int hankel_rank(const RationalFn& symbol, int max_n) {
  if (max_n < 1) return 0;
  const std::vector<cplx> c = fourier_coefficients(symbol, -2 * max_n + 1, -1);
  // c[m] is the coefficient of index m - 2 max_n + 1, so f^(-i-j-1) sits at 2 max_n - 2 - i - j.
  Eigen::MatrixXcd h(max_n, max_n);
  for (int i = 0; i < max_n; ++i)
    for (int j = 0; j < max_n; ++j) h(i, j) = c[static_cast<std::size_t>(2 * max_n - 2 - i - j)];
  return numerical_rank(h);
}

}  // namespace mst
