#include "mst/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "mst/dual.hpp"
#include "mst/errors.hpp"
#include "mst/random.hpp"
#include "mst/wiener_hopf.hpp"

namespace mst {

namespace {

class Suite {
 public:
  Suite(std::string name, std::optional<double> tol) : tol_(tol) { report_.suite = std::move(name); }

  void residual(const std::string& name, double value, double tolerance, std::string detail = {}) {
    CheckResult c;
    c.name = name;
    c.residual = value;
    c.tolerance = tol_.value_or(tolerance);
    c.passed = value < c.tolerance;
    c.detail = std::move(detail);
    push(std::move(c));
  }

  void require(const std::string& name, bool ok, std::string detail = {}) {
    CheckResult c;
    c.name = name;
    c.boolean = true;
    c.residual = ok ? 0.0 : 1.0;
    c.tolerance = 0.5;
    c.passed = ok;
    c.detail = std::move(detail);
    push(std::move(c));
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  void push(CheckResult c) {
    if (!c.boolean) report_.max_residual = std::max(report_.max_residual, c.residual);
    report_.passed = report_.passed && c.passed;
    report_.checks.push_back(std::move(c));
  }

  std::optional<double> tol_;
  SuiteReport report_;
};

double decay_ratio(const RationalFn& f) {
  double rho = 0.0;
  for (const cplx p : f.poles()) {
    const double r = std::abs(p);
    rho = std::max(rho, r < 1.0 ? r : 1.0 / r);
  }
  return rho;
}

BlaschkeProduct example_alpha() { return BlaschkeProduct({0.5, 1.0 / 3.0}); }

// ---------------------------------------------------------------- rational

void rational_suite(Suite& s, Rng& rng) {
  double recon = 0, idem = 0, adj = 0, parseval = 0, invol = 0;
  for (int t = 0; t < 100; ++t) {
    const int poles = 1 + static_cast<int>(rng() % 4);
    const RationalFn f = random_rational(rng, static_cast<int>(rng() % 5), poles);
    const RationalFn g = random_rational(rng, static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
    const FourierSplit sf = riesz_project(f);
    recon = std::max(recon, sampled_distance(sf.analytic + sf.antianalytic, f) / (1.0 + sup_norm_sampled(f, 32)));
    idem = std::max(idem, coefficient_residual(riesz_project(sf.analytic).analytic, sf.analytic));
    const cplx lhs = inner_product(sf.analytic, g);
    const cplx rhs = inner_product(f, riesz_project(g).analytic);
    adj = std::max(adj, std::abs(lhs - rhs) / (1.0 + l2_norm(f) * l2_norm(g)));

    const double rho = std::max(decay_ratio(f), decay_ratio(g));
    const int n = rho == 0.0 ? 40 : static_cast<int>(std::ceil(std::log(1e-17) / std::log(rho * rho))) + 40;
    const int deg = std::max(f.num().degree(), g.num().degree()) + 4;
    const int lim = std::max(n, deg);
    const auto fc = fourier_coefficients(f, -lim, lim);
    const auto gc = fourier_coefficients(g, -lim, lim);
    cplx sum = 0.0;
    for (std::size_t k = 0; k < fc.size(); ++k) sum += fc[k] * std::conj(gc[k]);
    parseval = std::max(parseval, std::abs(sum - inner_product(f, g)) / (1.0 + l2_norm(f) * l2_norm(g)));
    invol = std::max(invol, coefficient_residual(circle_conjugate(circle_conjugate(f)), f));
  }
  s.residual("riesz reconstruction P+ f + P- f = f", recon, 1e-10);
  s.residual("P+ idempotent", idem, 1e-12);
  s.residual("P+ self-adjoint", adj, 1e-10);
  s.residual("Parseval against truncated Fourier sums", parseval, 1e-10);
  s.residual("circle_conjugate involution", invol, 1e-12);
}

// ---------------------------------------------------------------- blaschke

void blaschke_suite(Suite& s, Rng& rng) {
  double shift = 0, recon = 0, unimod = 0, gf = 0;
  bool gcd_ok = true;
  for (int t = 0; t < 30; ++t) {
    const BlaschkeProduct b = random_blaschke(rng, 1 + static_cast<int>(rng() % 4));
    const cplx a = random_point(rng, 0.8);
    const BlaschkeProduct sb = frostman_shift(b, a);
    const RationalFn th = to_rational(b);
    const RationalFn direct = (th - RationalFn::constant(a)) / (RationalFn::constant(1.0) - th * std::conj(a));
    shift = std::max(shift, sampled_distance(direct, to_rational(sb)));

    const BlaschkeFactorization f = factorize(b);
    const RationalFn rebuilt = f.alpha_minus * RationalFn::monomial(f.n) * f.alpha_plus;
    recon = std::max(recon, sampled_distance(rebuilt, th));

    const RationalFn h = RationalFn(ComplexPoly({random_point(rng, 0.4), random_point(rng, 0.4)}));
    const GeneralizedFrostman g = generalized_frostman(b, h);
    for (int k = 0; k < 32; ++k) unimod = std::max(unimod, std::abs(std::abs(g.theta_hbar(circle_point(k, 32, 0.1))) - 1.0));
    gf = std::max(gf, sampled_distance(g.a_minus * th * g.a_plus, g.theta_hbar));

    std::vector<cplx> z2 = b.zeros();
    z2.resize(z2.size() / 2 + 1);
    z2.push_back(random_point(rng, 0.7));
    const BlaschkeProduct b2(z2);
    const BlaschkeProduct gcd = blaschke_gcd(b, b2);
    try {
      const BlaschkeProduct q1 = blaschke_quotient(b, gcd);
      const BlaschkeProduct q2 = blaschke_quotient(b2, gcd);
      gcd_ok = gcd_ok && q1.degree() + gcd.degree() == b.degree() && q2.degree() + gcd.degree() == b2.degree();
    } catch (const Error&) {
      gcd_ok = false;
    }
  }
  s.residual("Frostman shift matches (B - a)/(1 - conj(a) B)", shift, 1e-9);
  s.residual("alpha_minus z^n alpha_plus = B", recon, 1e-10);
  s.residual("generalized Frostman shift is unimodular", unimod, 1e-9);
  s.residual("a_minus B a_plus = theta_hbar", gf, 1e-9);
  s.require("gcd divides both products", gcd_ok);
}

// ---------------------------------------------------------------- model

void model_suite(Suite& s, Rng& rng) {
  double proj1 = 0, proj2 = 0, annih = 0, crofoot = 0, repro = 0;
  bool mult_ok = true;
  for (int t = 0; t < 10; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 4);
    const ModelSpace k(random_blaschke(rng, deg)), h(random_blaschke(rng, deg));
    const RationalFn a = multiplier_between(k, h);
    const RationalFn a_inv = inverse_multiplier_between(k, h);
    for (const cplx p : a.poles()) mult_ok = mult_ok && std::abs(p) > 1.0;
    for (const cplx p : a_inv.poles()) mult_ok = mult_ok && std::abs(p) > 1.0;

    for (int j = 0; j < 5; ++j) {
      const RationalFn f = random_rational(rng, 2, 2);
      const RationalFn ph = project(h, f);
      const double scale = 1.0 + l2_norm(f);
      proj1 = std::max(proj1, l2_norm(ph - a * project(k, a_inv * ph)) / scale);
      const RationalFn conj_form = project(h, circle_conjugate(a).inverse() * project(k, circle_conjugate(a) * f));
      proj2 = std::max(proj2, l2_norm(ph - conj_form) / scale);

      // g in the complement of H: theta_H p + conj(z q).
      const RationalFn g = to_rational(h.inner()) * random_rational(rng, 2, 0) +
                           circle_conjugate(RationalFn::monomial(1) * random_rational(rng, 2, 0));
      annih = std::max(annih, l2_norm(project(k, circle_conjugate(a) * g)) / (1.0 + l2_norm(g)));
    }

    const int cdeg = 1 + static_cast<int>(rng() % 5);
    const ModelSpace kc(random_blaschke(rng, cdeg));
    const CrofootResult c = crofoot_multiplier(kc, random_point(rng, 0.9));
    std::vector<RationalFn> images;
    for (const RationalFn& e : kc.basis()) images.push_back(c.j * e);
    crofoot = std::max(crofoot, (gram_matrix(images) - Eigen::MatrixXcd::Identity(cdeg, cdeg)).norm());

    for (int l = 0; l < 10; ++l) {
      const cplx lambda = random_point(rng, 0.95);
      const KernelPair kp = reproducing_kernels(k, lambda);
      for (const RationalFn& e : k.basis()) repro = std::max(repro, std::abs(inner_product(e, kp.k) - e(lambda)));
    }
  }
  s.residual("P_H f = a P_K a^-1 P_H f", proj1, 1e-9);
  s.residual("P_H f = P_H conj(a)^-1 P_K conj(a) f", proj2, 1e-9);
  s.residual("P_K conj(a) g = 0 for g orthogonal to H", annih, 1e-9);
  s.residual("Crofoot image is orthonormal", crofoot, 1e-9);
  s.residual("reproducing property <f, k_lambda> = f(lambda)", repro, 1e-9);
  s.require("multipliers and inverses have no poles in the closed disk", mult_ok);
}

// ---------------------------------------------------------------- operators

double subspace_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.cols() == 0 && b.cols() == 0) return 0.0;
  if (a.cols() != b.cols()) return 1.0;
  const Eigen::MatrixXcd qa = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ() *
                              Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  const Eigen::MatrixXcd qb = Eigen::HouseholderQR<Eigen::MatrixXcd>(b).householderQ() *
                              Eigen::MatrixXcd::Identity(b.rows(), b.cols());
  return (qa - qb * (qb.adjoint() * qa)).norm();
}

Eigen::MatrixXcd stack(const std::vector<Eigen::VectorXcd>& cols, Eigen::Index rows) {
  Eigen::MatrixXcd m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = cols[i];
  return m;
}

void operators_suite(Suite& s, Rng& rng) {
  double equiv = 0, cond = 0, transport = 0, inv1 = 0, inv2 = 0, selfadj = 0, bh = 0;
  bool criterion_ok = true;
  for (int t = 0; t < 25; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 4);
    const BlaschkeProduct alpha = random_blaschke(rng, deg), gamma = random_blaschke(rng, deg);
    const RationalFn phi = random_rational(rng, 2, 2);
    const EquivalenceResult r = equivalence_transform(alpha, alpha, gamma, gamma, phi);
    equiv = std::max(equiv, r.residual / (1.0 + r.a.entries.norm()));
    cond = std::max({cond, r.cond_e, r.cond_f});
  }
  s.residual("A^alpha_phi = E A^gamma_{|a|^2 phi} F", equiv, 1e-9);
  s.require("E and F have condition number below 1e8", cond < 1e8, "max " + std::to_string(cond));

  for (int t = 0; t < 10; ++t) {
    const int deg = 2 + static_cast<int>(rng() % 3);
    const BlaschkeProduct theta = random_blaschke(rng, deg), alpha = random_blaschke(rng, deg);
    const BlaschkeProduct zn = BlaschkeProduct::power(deg);
    const ModelSpace kt(theta), ka(alpha), kz(zn);
    // psi = z^m p(z) compresses to a strictly lower triangular matrix, so A has a kernel.
    const int m = 1 + static_cast<int>(rng() % (deg - 1));
    const RationalFn psi = RationalFn::monomial(m) * random_rational(rng, 1, 0);
    const RationalFn a1 = multiplier_between(kz, kt), a2 = multiplier_between(kz, ka);
    const RationalFn phi = psi / (circle_conjugate(a2) * a1);
    const EquivalenceResult r = equivalence_transform(theta, alpha, zn, zn, phi);
    const KernelRange ka_ker = kernel_and_range(r.a.entries);
    const KernelRange kt_ker = kernel_and_range(r.a_tilde.entries);
    const Eigen::MatrixXcd image = r.f.entries * stack(ka_ker.kernel_basis, deg);
    transport = std::max(transport, subspace_gap(image, stack(kt_ker.kernel_basis, deg)));

    const OperatorMatrix ma = multiplication_matrix(kt, ka, multiplier_between(kt, ka));
    const OperatorMatrix ma_inv = multiplication_matrix(ka, kt, inverse_multiplier_between(kt, ka));
    inv1 = std::max(inv1, (ma_inv.entries * ma.entries - Eigen::MatrixXcd::Identity(deg, deg)).norm());
    const OperatorMatrix tc = tto_matrix(kt, ka, circle_conjugate(multiplier_between(kt, ka)).inverse());
    inv2 = std::max(inv2, (tc.entries - ma.entries.adjoint().inverse()).norm() / (1.0 + tc.entries.norm()));

    const OperatorMatrix a = tto_matrix(kt, kt, random_rational(rng, 2, 2));
    selfadj = std::max(selfadj, selfadjoint_residual(a, conjugation_matrix(kt)) / (1.0 + a.entries.norm()));
  }
  s.residual("multiplication maps F ker A onto ker A~", transport, 1e-7);
  s.residual("M_{a^-1} M_a = I", inv1, 1e-9);
  s.residual("T_{conj(a)^-1} = (M_a^H)^-1", inv2, 1e-9);
  s.residual("A^gamma_phi complex selfadjoint for C_gamma", selfadj, 1e-9);

  for (int t = 0; t < 8; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 4);
    const ModelSpace k(random_blaschke(rng, deg));
    const CrofootResult c = crofoot_multiplier(k, random_point(rng, 0.8));
    for (const double scale : {1.0, 1.5}) {
      const RationalFn a = c.j * scale;
      const bool zero = is_zero_symbol(k, k, RationalFn::constant(1.0) - a * circle_conjugate(a));
      const OperatorMatrix m = multiplication_matrix(k, c.target, a);
      const bool unitary =
          (m.entries.adjoint() * m.entries - Eigen::MatrixXcd::Identity(deg, deg)).norm() < 1e-9;
      criterion_ok = criterion_ok && zero == unitary && unitary == (scale == 1.0);
    }
  }
  s.require("1 - |a|^2 has zero compression exactly when M_a is unitary", criterion_ok);

  for (int t = 0; t < 20; ++t) {
    const int d1 = 1 + static_cast<int>(rng() % 3);
    const ModelSpace k1(random_blaschke(rng, d1)), mid(random_blaschke(rng, d1));
    const ModelSpace k2(random_blaschke(rng, 1 + static_cast<int>(rng() % 3)));
    const BrownHalmosResult r =
        brown_halmos_product(k1, mid, k2, random_rational(rng, 2, 2), multiplier_between(k1, mid));
    if (r.hypothesis_holds) bh = std::max(bh, r.residual);
  }
  s.residual("Brown-Halmos product identity under the multiplier hypothesis", bh, 1e-9);
}

// ---------------------------------------------------------------- dual

void dual_suite(Suite& s, Rng& rng) {
  bool unique_ok = true, zero_ok = true;
  for (int t = 0; t < 10; ++t) {
    const BlaschkeProduct theta = random_blaschke(rng, 1 + static_cast<int>(rng() % 3));
    const RationalFn phi = random_rational(rng, 2, 2);
    const RationalFn th = to_rational(theta);
    std::vector<ComplementElement> probes = {
        {th, RationalFn(), theta},
        {th * RationalFn::monomial(1), RationalFn(), theta},
        {RationalFn(), RationalFn::monomial(-1), theta},
        {RationalFn(), RationalFn::monomial(-2), theta},
    };
    double best = 0.0, zero = 0.0;
    for (const auto& p : probes) {
      best = std::max(best, l2_norm(dual_apply(theta, theta, phi, p).value()));
      zero = std::max(zero, l2_norm(dual_apply(theta, theta, RationalFn(), p).value()));
    }
    unique_ok = unique_ok && best > 1e-8 * sup_norm_sampled(phi);
    zero_ok = zero_ok && zero == 0.0;
  }
  s.require("nonzero symbol acts nontrivially on a probe", unique_ok);
  s.require("zero symbol annihilates every probe", zero_ok);

  const std::vector<BlaschkeProduct> alphas = {
      BlaschkeProduct(), BlaschkeProduct::power(1), BlaschkeProduct::power(2), BlaschkeProduct({0.5}),
      example_alpha(), random_blaschke(rng, 1), random_blaschke(rng, 2)};
  bool dims_ok = true;
  double membership = 0.0;
  std::string detail;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& alpha : alphas) {
      const DualKernel k = dual_kernel(BlaschkeProduct::power(n), alpha);
      if (k.dim != std::max(0, n - 1 - k.k)) {
        dims_ok = false;
        detail = "n=" + std::to_string(n) + " dim=" + std::to_string(k.dim);
      }
      membership = std::max(membership, k.max_residual);
    }
  }
  s.require("kernel dimension max(0, n - 1 - k)", dims_ok, detail);
  s.residual("kernel elements lie in the complement and phi f in K_theta", membership, 1e-9);

  double deq = 0.0;
  for (int t = 0; t < 4; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 3);
    deq = std::max(deq, dual_equivalence(random_blaschke(rng, deg), random_blaschke(rng, deg), random_blaschke(rng, deg),
                                         random_blaschke(rng, deg), random_rational(rng, 1, 1), std::nullopt, 10,
                                         static_cast<unsigned>(rng()))
                            .residual);
  }
  s.residual("dual operator equivalence on probes", deq, 1e-8);
  const double neg = dual_equivalence(example_alpha(), BlaschkeProduct::power(2), BlaschkeProduct::power(2),
                                      BlaschkeProduct::power(2), RationalFn::monomial(1),
                                      RationalFn::monomial(1) * 1.01)
                         .residual;
  s.require("perturbed symbol breaks the dual equivalence", neg > 1e-3, "residual " + std::to_string(neg));

  bool hankel_ok = true;
  for (int t = 0; t < 10; ++t) {
    const RationalFn f = random_rational(rng, 2, 1 + static_cast<int>(rng() % 4));
    int inside = 0;
    for (const cplx p : f.poles()) inside += std::abs(p) < 1.0;
    int prev = 0;
    for (int n = 1; n <= 8; ++n) {
      const int r = hankel_rank(f, n);
      hankel_ok = hankel_ok && r >= prev && (n <= inside || r == inside);
      prev = r;
    }
  }
  s.require("Hankel rank nondecreasing and equal to the inside pole count", hankel_ok);
}

// ---------------------------------------------------------------- wh

void wh_suite(Suite& s, Rng& rng) {
  double consistency = 0, agree = 0;
  bool dichotomy = true;
  int solved = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      const int lo = -static_cast<int>(rng() % 3);
      const RationalFn phi = random_laurent(rng, lo, lo + static_cast<int>(rng() % 4));
      const ModelSpace kz(BlaschkeProduct::power(n));
      const double cond = condition_number(tto_matrix(kz, kz, phi).entries);
      bool factored = false;
      try {
        const MatrixFactorization fac = wh_factorize(n, phi);
        factored = true;
        consistency = std::max(consistency, fac.consistency_residual);
        if (cond < 1e6) {
          const OperatorMatrix inv = invert_direct(n, phi);
          Eigen::MatrixXcd via(n, n);
          for (int k = 0; k < n; ++k) via.col(k) = kz.coordinates(tto_inverse_via_wh(fac, RationalFn::monomial(k)));
          agree = std::max(agree, (via - inv.entries).norm() / (1.0 + inv.entries.norm()));
          ++solved;
        }
      } catch (const NoCanonicalFactorization&) {
      }
      dichotomy = dichotomy && factored == (cond < 1e10);
    }
  }
  s.residual("G- G+ = G on circle samples", consistency, 1e-9);
  s.residual("Wiener-Hopf inverse matches direct inverse", agree, 1e-8, std::to_string(solved) + " symbols");
  s.require("factorization exists exactly when A is invertible", dichotomy);

  double chain = 0.0;
  for (int t = 0; t < 6; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const BlaschkeProduct alpha = random_blaschke(rng, n), zn = BlaschkeProduct::power(n);
    const RationalFn psi = random_laurent(rng, -1, 1);
    const ModelSpace ka(alpha), kz(zn);
    const RationalFn a = multiplier_between(kz, ka);
    const RationalFn phi = psi / (circle_conjugate(a) * a);
    const EquivalenceResult r = equivalence_transform(alpha, alpha, zn, zn, phi);
    if (condition_number(r.a_tilde.entries) > 1e6) continue;
    const MatrixFactorization fac = wh_factorize(n, psi);
    Eigen::MatrixXcd tilde_inv(n, n);
    for (int k = 0; k < n; ++k) tilde_inv.col(k) = kz.coordinates(tto_inverse_via_wh(fac, RationalFn::monomial(k)));
    const Eigen::MatrixXcd chained = r.f.entries.inverse() * tilde_inv * r.e.entries.inverse();
    const Eigen::MatrixXcd direct = r.a.entries.inverse();
    chain = std::max(chain, (chained - direct).norm() / (1.0 + direct.norm()));
  }
  s.residual("inverse through the z^n equivalence matches direct inversion", chain, 1e-8);
}

const std::map<std::string, std::function<void(Suite&, Rng&)>>& registry() {
  static const std::map<std::string, std::function<void(Suite&, Rng&)>> r = {
      {"rational", rational_suite}, {"blaschke", blaschke_suite}, {"model", model_suite},
      {"operators", operators_suite}, {"dual", dual_suite},       {"wh", wh_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rational", "blaschke", "model", "operators", "dual", "wh"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::optional<double> tol_override, unsigned seed) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown suite \"" + name + "\"");
  Suite s(name, tol_override);
  Rng rng(seed);
  it->second(s, rng);
  return s.finish();
}

}  // namespace mst
