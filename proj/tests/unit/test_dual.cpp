#include <doctest.h>

#include <cmath>

#include "mst/dual.hpp"
#include "mst/errors.hpp"
#include "mst/operators.hpp"
#include "mst/random.hpp"
#include "oracles.hpp"

using mst::BlaschkeProduct;
using mst::ComplementElement;
using mst::ComplexPoly;
using mst::cplx;
using mst::RationalFn;

namespace {

ComplementElement anti(const BlaschkeProduct& theta, const RationalFn& f) { return {RationalFn(), f, theta}; }

// Kernel dimension of D^{z^n}_phi for a Laurent polynomial phi, restricted to
// f = sum_{j=1..m} c_j zbar^j + z^n sum_{j<m} d_j z^j. The map to the Fourier
// coefficients of phi f outside [0, n) is exact on this family.
int brute_force_dim(int n, const RationalFn& phi, int m) {
  const int lo = -m - 8, hi = n + m + 8;
  Eigen::MatrixXcd a(hi - lo + 1, 2 * m);
  for (int j = 0; j < 2 * m; ++j) {
    const RationalFn f = j < m ? RationalFn::monomial(-(j + 1)) : RationalFn::monomial(n + j - m);
    const auto c = oracle::fft_coefficients(phi * f, lo, hi, 256);
    for (int i = lo; i <= hi; ++i) a(i - lo, j) = (i >= 0 && i < n) ? cplx(0.0) : c[static_cast<std::size_t>(i - lo)];
  }
  return 2 * m - mst::numerical_rank(a);
}

}  // namespace

TEST_CASE("dual operator application") {
  const BlaschkeProduct z2 = BlaschkeProduct::power(2);
  const auto id = mst::dual_apply(z2, z2, RationalFn::constant(1.0), anti(z2, RationalFn::monomial(-1)));
  CHECK(mst::l2_norm(id.value() - RationalFn::monomial(-1)) < 1e-15);

  const RationalFn phi = RationalFn(ComplexPoly({0.0, 0.0, -1.0, 1.0}));  // z^2 (z - 1)
  CHECK(mst::l2_norm(mst::dual_apply(z2, z2, phi, anti(z2, RationalFn::monomial(-2))).value()) < 1e-15);

  const auto hi = mst::dual_apply(z2, z2, RationalFn::constant(1.0), {RationalFn::monomial(2), RationalFn(), z2});
  CHECK(mst::l2_norm(hi.value() - RationalFn::monomial(2)) < 1e-15);
  CHECK(mst::l2_norm(hi.antianalytic) < 1e-15);

  // Elements outside the complement are rejected.
  CHECK_THROWS_AS(mst::validate({RationalFn::constant(1.0), RationalFn(), z2}), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::validate(anti(z2, RationalFn::monomial(1))), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::dual_apply(z2, z2, phi, anti(BlaschkeProduct::power(3), RationalFn::monomial(-1))),
                  mst::SpaceMismatch);
}

TEST_CASE("complement split against sampled Fourier coefficients") {
  mst::Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const BlaschkeProduct theta = mst::random_blaschke(rng, 1 + t % 3);
    const RationalFn g = mst::random_rational(rng, 2, 3);
    const ComplementElement q = mst::complement_part(theta, g);
    const auto anti_c = oracle::fft_coefficients(q.antianalytic, 0, 32);
    for (const cplx c : anti_c) CHECK(std::abs(c) < 1e-10 * (1.0 + mst::l2_norm(g)));
    const mst::ModelSpace k(theta);
    CHECK(mst::l2_norm(q.value() - mst::complement_project(k, g)) < 1e-10 * (1.0 + mst::l2_norm(g)));
  }
}

TEST_CASE("dual kernel examples") {
  const auto k1 = mst::dual_kernel(BlaschkeProduct::power(1), BlaschkeProduct({0.3}));
  CHECK(k1.dim == 0);
  CHECK(k1.basis.empty());

  const auto k2 = mst::dual_kernel(BlaschkeProduct::power(2), BlaschkeProduct::power(2));
  CHECK(k2.dim == 1);
  CHECK(k2.k == 0);
  CHECK(k2.gamma.degree() == 2);
  REQUIRE(k2.basis.size() == 1);
  const RationalFn f = k2.basis[0].value();
  const cplx scale = f(0.5) / std::pow(cplx(0.5), -2);
  CHECK(mst::l2_norm(f - RationalFn::monomial(-2, scale)) < 1e-12 * std::abs(scale));

  const auto k4 = mst::dual_kernel(BlaschkeProduct::power(4), BlaschkeProduct());
  CHECK(k4.gamma.degree() == 1);
  CHECK(k4.k == 3);
  CHECK(k4.dim == 0);
}

TEST_CASE("dual kernel dimensions and membership") {
  const std::vector<BlaschkeProduct> alphas = {BlaschkeProduct(), BlaschkeProduct::power(1), BlaschkeProduct::power(2),
                                               BlaschkeProduct({0.5}), BlaschkeProduct({0.5, 1.0 / 3.0}),
                                               BlaschkeProduct({cplx(0.2, -0.6), 0.0})};
  for (int n = 1; n <= 5; ++n) {
    const BlaschkeProduct theta = BlaschkeProduct::power(n);
    const mst::ModelSpace kt(theta);
    for (const auto& alpha : alphas) {
      const auto ker = mst::dual_kernel(theta, alpha);
      int zeros_at_origin = 1;
      for (const cplx a : alpha.zeros()) zeros_at_origin += a == cplx(0.0) ? 1 : 0;
      const int k = n - std::min(n, zeros_at_origin);
      CHECK(ker.k == k);
      CHECK(ker.dim == std::max(0, n - 1 - k));
      CHECK(static_cast<int>(ker.basis.size()) == ker.dim);

      const RationalFn phi = mst::dual_kernel_symbol(alpha);
      std::vector<RationalFn> values;
      for (const auto& e : ker.basis) {
        const RationalFn v = e.value();
        values.push_back(v);
        // Antianalytic: no nonnegative frequencies. Image: phi f in K_{z^n}.
        for (const cplx c : oracle::fft_coefficients(v, 0, 24)) CHECK(std::abs(c) < 1e-9 * mst::l2_norm(v));
        const auto pc = oracle::fft_coefficients(phi * v, -24, 24);
        for (int i = -24; i <= 24; ++i)
          if (i < 0 || i >= n) CHECK(std::abs(pc[static_cast<std::size_t>(i + 24)]) < 1e-9 * mst::l2_norm(v));
      }
      if (!values.empty()) CHECK(mst::numerical_rank(mst::gram_matrix(values)) == ker.dim);
      const bool laurent = zeros_at_origin == alpha.degree() + 1;
      if (laurent) CHECK(brute_force_dim(n, phi, n + 3) == ker.dim);
    }
  }
}

TEST_CASE("dual equivalence") {
  const BlaschkeProduct alpha63({0.5, 1.0 / 3.0}), z2 = BlaschkeProduct::power(2);
  mst::Rng rng(32);
  const RationalFn phi = mst::random_rational(rng, 1, 1);
  CHECK(mst::dual_equivalence(alpha63, z2, alpha63, z2, phi).residual < 1e-12);
  const auto r = mst::dual_equivalence(alpha63, z2, z2, z2, RationalFn::monomial(1));
  CHECK(r.residual < 1e-8);
  const auto wrong = mst::dual_equivalence(alpha63, z2, z2, z2, RationalFn::monomial(1),
                                           r.tilde_symbol + RationalFn::constant(0.5));
  CHECK(wrong.residual > 1e-3);
  CHECK_THROWS_AS(mst::dual_equivalence(alpha63, z2, BlaschkeProduct::power(3), z2, phi), mst::NoMultiplier);
}

TEST_CASE("Hankel rank") {
  CHECK(mst::hankel_rank(RationalFn::monomial(3), 6) == 0);
  CHECK(mst::hankel_rank(RationalFn(ComplexPoly({1.0}), ComplexPoly({-0.5, 1.0})), 6) == 1);
  const RationalFn two(ComplexPoly({1.0}), ComplexPoly::from_roots(std::vector<cplx>{0.5, 1.0 / 3.0}));
  CHECK(mst::hankel_rank(two, 6) == 2);

  mst::Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    const RationalFn f = mst::random_rational(rng, 2, 3);
    int inside = 0;
    for (const cplx p : f.poles()) inside += std::abs(p) < 1.0 ? 1 : 0;
    int prev = 0;
    for (int n = 1; n <= 6; ++n) {
      const int r = mst::hankel_rank(f, n);
      CHECK(r >= prev);
      if (n > inside) CHECK(r == inside);
      prev = r;
    }
  }
}
