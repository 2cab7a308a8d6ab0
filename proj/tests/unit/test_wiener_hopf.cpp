#include <doctest.h>

#include <cmath>

#include "mst/errors.hpp"
#include "mst/random.hpp"
#include "mst/wiener_hopf.hpp"
#include "oracles.hpp"

using mst::BlaschkeProduct;
using mst::ComplexPoly;
using mst::cplx;
using mst::ModelSpace;
using mst::RationalFn;
using Mat = Eigen::MatrixXcd;

namespace {

Mat inverse_by_formula(const mst::MatrixFactorization& fac) {
  const ModelSpace kz(BlaschkeProduct::power(fac.n));
  Mat out(fac.n, fac.n);
  for (int k = 0; k < fac.n; ++k) out.col(k) = kz.coordinates(mst::tto_inverse_via_wh(fac, RationalFn::monomial(k)));
  return out;
}

// G(z) = [[conj(z)^n, 0], [phi, z^n]] on the circle.
Eigen::Matrix2cd symbol_at(int n, const RationalFn& phi, cplx z) {
  Eigen::Matrix2cd g;
  g << std::pow(z, -n), 0.0, phi(z), std::pow(z, n);
  return g;
}

}  // namespace

TEST_CASE("hand-worked scalar case") {
  const cplx c(2.0, -1.0);
  const auto fac = mst::wh_factorize(1, RationalFn::constant(c));
  const auto& x = fac.g_plus_inv;
  CHECK(std::abs(x[0][0](0.7) - 0.7) < 1e-14);
  CHECK(x[0][0].degree() == 1);
  CHECK(std::abs(x[0][1](0.7) - 1.0 / c) < 1e-14);
  CHECK(x[0][1].degree() == 0);
  CHECK(std::abs(x[1][0](0.7) + c) < 1e-14);
  CHECK(x[1][1].is_zero());
  // G- = [[1, conj(z)/c], [0, 1]], so G-^-1 = [[1, -conj(z)/c], [0, 1]].
  const cplx z = std::polar(1.0, 0.4);
  CHECK(std::abs(fac.g_minus_inv[0][1](z) + std::conj(z) / c) < 1e-14);
  CHECK(std::abs(fac.g_minus_inv[0][0](z) - 1.0) < 1e-14);
  CHECK(std::abs(fac.g_minus_inv[1][1](z) - 1.0) < 1e-14);
  CHECK(std::abs(fac.g_minus_inv[1][0](z)) < 1e-14);

  const RationalFn g = mst::tto_inverse_via_wh(fac, RationalFn::constant(1.0));
  CHECK(std::abs(g(0.3) - 1.0 / c) < 1e-14);
}

TEST_CASE("singular symbols have no canonical factorization") {
  CHECK_THROWS_AS(mst::wh_factorize(1, RationalFn()), mst::NoCanonicalFactorization);
  CHECK_THROWS_AS(mst::wh_factorize(2, RationalFn::monomial(1)), mst::NoCanonicalFactorization);
  CHECK_THROWS_AS(mst::invert_direct(2, RationalFn::monomial(1)), mst::SingularOperator);
  CHECK_THROWS_AS(mst::wh_factorize(2, RationalFn(ComplexPoly({1.0}), ComplexPoly({-2.0, 1.0}))),
                  mst::InvalidArgument);
  CHECK_THROWS_AS(mst::wh_factorize(0, RationalFn::constant(1.0)), mst::InvalidArgument);
}

TEST_CASE("invertible example in K_{z^2}") {
  const RationalFn phi(ComplexPoly({1.0, 5.0 / 6.0}));
  const auto fac = mst::wh_factorize(2, phi);
  Mat expect(2, 2);
  expect << 1.0, 0.0, -5.0 / 6.0, 1.0;
  CHECK((inverse_by_formula(fac) - expect).norm() < 1e-12);
  CHECK((mst::invert_direct(2, phi).entries - expect).norm() < 1e-14);
  const RationalFn g = mst::tto_inverse_via_wh(2, phi, RationalFn::constant(1.0));
  CHECK(mst::l2_norm(g - RationalFn(ComplexPoly({1.0, -5.0 / 6.0}))) < 1e-12);

  const RationalFn f(ComplexPoly({cplx(0.3, 1.0), -2.0}));
  CHECK(mst::l2_norm(mst::tto_inverse_via_wh(2, RationalFn::constant(1.0), f) - f) < 1e-13);
  CHECK(std::abs(mst::invert_direct(1, RationalFn::constant(4.0)).entries(0, 0) - 0.25) < 1e-15);
  CHECK_THROWS_AS(mst::tto_inverse_via_wh(fac, RationalFn::monomial(2)), mst::InvalidArgument);
}

TEST_CASE("factorization is consistent and inverts the operator") {
  mst::Rng rng(41);
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      const int lo = -static_cast<int>(rng() % 3);
      const RationalFn phi = mst::random_laurent(rng, lo, lo + static_cast<int>(rng() % 4));
      const ModelSpace kz(BlaschkeProduct::power(n));
      const Mat a = mst::tto_matrix(kz, kz, phi).entries;
      const double cond = mst::condition_number(a);
      if (!(cond < 1e10)) {
        CHECK_THROWS_AS(mst::wh_factorize(n, phi), mst::NoCanonicalFactorization);
        continue;
      }
      const auto fac = mst::wh_factorize(n, phi);
      // G- G+ = G at circle points, with G+ = X^-1.
      for (int k = 0; k < 16; ++k) {
        const cplx z = oracle::node(k, 16);
        Eigen::Matrix2cd x, gm_inv;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            x(i, j) = fac.g_plus_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](z);
            gm_inv(i, j) = fac.g_minus_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](z);
          }
        CHECK((gm_inv.inverse() * x.inverse() - symbol_at(n, phi, z)).norm() < 1e-9);
      }
      CHECK(fac.consistency_residual < 1e-9);
      // det G+^-1 is constant.
      const auto det_at = [&](cplx z) {
        return fac.g_plus_inv[0][0](z) * fac.g_plus_inv[1][1](z) - fac.g_plus_inv[0][1](z) * fac.g_plus_inv[1][0](z);
      };
      CHECK(std::abs(det_at(0.9) - det_at(cplx(-0.2, 0.5))) < 1e-8 * (1.0 + std::abs(det_at(0.0))));
      if (cond < 1e6) {
        const Mat inv = mst::invert_direct(n, phi).entries;
        CHECK((inverse_by_formula(fac) - inv).norm() < 1e-8 * (1.0 + inv.norm()));
        CHECK((a * inverse_by_formula(fac) - Mat::Identity(n, n)).norm() < 1e-8 * (1.0 + inv.norm()));
        ++checked;
      }
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("Laurent coefficients") {
  const RationalFn phi = RationalFn::monomial(-2, 3.0) + RationalFn::monomial(1, cplx(0.0, 1.0));
  const auto [lo, c] = mst::laurent_coefficients(phi);
  CHECK(lo == -2);
  REQUIRE(c.size() == 4);
  CHECK(std::abs(c[0] - 3.0) < 1e-15);
  CHECK(std::abs(c[3] - cplx(0.0, 1.0)) < 1e-15);
  CHECK(mst::laurent_coefficients(RationalFn()).second.empty());
}
