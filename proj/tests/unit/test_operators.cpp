#include <doctest.h>

#include <cmath>
#include <functional>

#include "mst/errors.hpp"
#include "mst/operators.hpp"
#include "mst/random.hpp"
#include "oracles.hpp"

using mst::BlaschkeProduct;
using mst::ComplexPoly;
using mst::cplx;
using mst::ModelSpace;
using mst::RationalFn;
using Mat = Eigen::MatrixXcd;

namespace {

const BlaschkeProduct kAlpha({0.5, 1.0 / 3.0});
const BlaschkeProduct kZ2 = BlaschkeProduct::power(2);

std::vector<std::function<cplx(cplx)>> callables(const ModelSpace& k) {
  std::vector<std::function<cplx(cplx)>> out;
  for (const auto& e : k.basis()) out.emplace_back([e](cplx z) { return e(z); });
  return out;
}

Mat mat2(cplx a, cplx b, cplx c, cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

// (z - 1/2)(z - 1/3)(z^2 + 1) / z^2
RationalFn example_65_symbol() {
  return RationalFn(ComplexPoly::from_roots(std::vector<cplx>{0.5, 1.0 / 3.0}) * ComplexPoly({1.0, 0.0, 1.0}),
                    ComplexPoly({0.0, 0.0, 1.0}));
}

}  // namespace

TEST_CASE("truncated Toeplitz matrices") {
  const ModelSpace k(kZ2);
  const auto a = mst::tto_matrix(k, k, RationalFn(ComplexPoly({1.0, 5.0 / 6.0})));
  CHECK((a.entries - mat2(1.0, 0.0, 5.0 / 6.0, 1.0)).norm() < 1e-15);
  CHECK((mst::tto_matrix(k, k, RationalFn::monomial(1)).entries - mat2(0.0, 0.0, 1.0, 0.0)).norm() < 1e-15);
  CHECK(mst::tto_matrix(k, k, RationalFn::monomial(2)).entries.norm() < 1e-15);

  mst::Rng rng(21);
  for (int t = 0; t < 8; ++t) {
    const ModelSpace d(mst::random_blaschke(rng, 1 + t % 3)), c(mst::random_blaschke(rng, 1 + (t + 1) % 4));
    const RationalFn phi = mst::random_rational(rng, 2, 2);
    const Mat ref = oracle::compression(callables(d), callables(c), phi, 4096);
    const Mat got = mst::tto_matrix(d, c, phi).entries;
    CHECK((got - ref).norm() < 1e-9 * (1.0 + ref.norm()));
  }
}

TEST_CASE("multiplication matrices") {
  const ModelSpace k(kZ2), ka(kAlpha), kz(BlaschkeProduct::power(1));
  CHECK((mst::multiplication_matrix(ka, ka, RationalFn::constant(1.0)).entries - Mat::Identity(2, 2)).norm() < 1e-14);

  const RationalFn a = mst::multiplier_between(k, ka);
  const Mat m = mst::multiplication_matrix(k, ka, a).entries;
  const Mat mi = mst::multiplication_matrix(ka, k, a.inverse()).entries;
  CHECK((m * mi - Mat::Identity(2, 2)).norm() < 1e-12);

  const Mat emb = mst::multiplication_matrix(kz, k, RationalFn::monomial(1)).entries;
  CHECK(emb.rows() == 2);
  CHECK(emb.cols() == 1);
  CHECK(std::abs(emb(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(emb(0, 0)) < 1e-15);

  CHECK_THROWS_AS(mst::multiplication_matrix(k, k, RationalFn::monomial(1)), mst::MultiplierRangeViolation);
}

TEST_CASE("zero symbols") {
  const ModelSpace k2(kZ2), k3(BlaschkeProduct::power(3));
  // conj(gamma) / z + alpha z^3 with gamma = z^2 and alpha = z^3.
  const RationalFn phi = RationalFn::monomial(-3) + RationalFn::monomial(6);
  CHECK(mst::is_zero_symbol(k2, k3, phi));
  CHECK_FALSE(mst::is_zero_symbol(k2, k2, RationalFn::constant(1.0)));
  CHECK(mst::is_zero_symbol(k2, k3, RationalFn::monomial(-2)));
}

TEST_CASE("equivalence on the worked examples") {
  // Rank one: phi = alpha / z.
  const RationalFn phi = mst::to_rational(kAlpha) * RationalFn::monomial(-1);
  const auto r = mst::equivalence_transform(kAlpha, kAlpha, kZ2, kZ2, phi);
  CHECK(r.residual < 1e-9 * (1.0 + r.a.entries.norm()));
  CHECK(mst::numerical_rank(r.a.entries) == 1);

  const ModelSpace k(kZ2), ka(kAlpha);
  const RationalFn a = mst::multiplier_between(k, ka);
  const Mat conjugated = mst::multiplication_matrix(ka, k, a.inverse()).entries * r.a.entries *
                         mst::multiplication_matrix(k, ka, a).entries;
  const RationalFn kt = mst::reproducing_kernels(ka, 0.0).k_tilde;
  Mat outer = Mat::Zero(2, 2);
  outer.col(0) = k.coordinates(a.inverse() * kt) * a(0.0);
  CHECK((conjugated - outer).norm() < 1e-9);

  // Invertibility reduction.
  const auto s = mst::equivalence_transform(kAlpha, kAlpha, kZ2, kZ2, example_65_symbol());
  CHECK((s.a_tilde.entries - mat2(1.0, 0.0, 5.0 / 6.0, 1.0)).norm() < 1e-10);
  CHECK(mst::condition_number(s.a_tilde.entries) < 1e3);
  CHECK(mst::condition_number(s.a.entries) < 1e3);
  CHECK(s.residual < 1e-9 * (1.0 + s.a.entries.norm()));

  // Identical spaces: trivial factors.
  const auto id = mst::equivalence_transform(kAlpha, kAlpha, kAlpha, kAlpha, phi);
  CHECK((id.e.entries - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK((id.f.entries - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK(mst::coefficient_residual(id.tilde_symbol, phi) < 1e-14);

  CHECK_THROWS_AS(mst::equivalence_transform(kAlpha, kAlpha, BlaschkeProduct::power(3), kZ2, phi), mst::NoMultiplier);
}

TEST_CASE("equivalence on random instances") {
  mst::Rng rng(22);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + t % 4, m = 1 + (t / 4) % 4;
    const BlaschkeProduct theta = mst::random_blaschke(rng, n), eta = mst::random_blaschke(rng, n);
    const BlaschkeProduct alpha = mst::random_blaschke(rng, m), gamma = mst::random_blaschke(rng, m);
    const auto r = mst::equivalence_transform(theta, alpha, eta, gamma, mst::random_rational(rng, 2, 2));
    CHECK(r.residual < 1e-9 * (1.0 + r.a.entries.norm()));
    CHECK(r.cond_e < 1e8);
    CHECK(r.cond_f < 1e8);
  }
}

TEST_CASE("Brown-Halmos products") {
  const ModelSpace k(kZ2), ka(kAlpha), kz(BlaschkeProduct::power(1));
  mst::Rng rng(23);
  const auto r = mst::brown_halmos_product(k, ka, ka, mst::random_rational(rng, 2, 2), mst::multiplier_between(k, ka));
  CHECK(r.hypothesis_holds);
  CHECK(r.residual < 1e-9);

  const auto one = mst::brown_halmos_product(k, k, ka, mst::random_rational(rng, 1, 1), RationalFn::constant(1.0));
  CHECK(one.hypothesis_holds);
  CHECK(one.residual == 0.0);

  const auto shift = mst::brown_halmos_product(kz, k, kz, RationalFn::monomial(-1), RationalFn::monomial(1));
  CHECK(shift.hypothesis_holds);
  CHECK(shift.residual < 1e-9);

  const auto bad = mst::brown_halmos_product(k, k, k, RationalFn::monomial(-1), RationalFn::monomial(1));
  CHECK_FALSE(bad.hypothesis_holds);
  CHECK(bad.residual > 1e-3);
}

TEST_CASE("conjugations and complex selfadjointness") {
  const ModelSpace k(kZ2), ka(kAlpha);
  CHECK((mst::conjugation_matrix(k).j - mat2(0.0, 1.0, 1.0, 0.0)).norm() < 1e-15);
  CHECK(std::abs(mst::conjugation_matrix(ModelSpace(BlaschkeProduct::power(1))).j(0, 0) - 1.0) < 1e-15);
  const auto c = mst::conjugation_matrix(ka);
  CHECK(mst::conjugation_unitarity_defect(c) < 1e-12);
  CHECK((c.j * c.j.conjugate() - Mat::Identity(2, 2)).norm() < 1e-12);

  CHECK(mst::is_complex_selfadjoint(mst::tto_matrix(k, k, RationalFn::monomial(1)), mst::conjugation_matrix(k)));

  mst::Rng rng(24);
  for (int t = 0; t < 10; ++t) {
    const ModelSpace b(mst::random_blaschke(rng, 1 + t % 4));
    const auto a = mst::tto_matrix(b, b, mst::random_rational(rng, 2, 2));
    CHECK(mst::is_complex_selfadjoint(a, mst::conjugation_matrix(b)));
  }

  // E A F with generic invertible E, F is no longer selfadjoint for the same conjugation.
  const auto a = mst::tto_matrix(ka, ka, mst::random_rational(rng, 2, 2));
  mst::OperatorMatrix skew = a;
  skew.entries = mat2(1.0, 0.3, cplx(0.0, 0.7), 2.0) * a.entries * mat2(2.0, cplx(0.5, 1.0), 0.0, 1.0);
  CHECK_FALSE(mst::is_complex_selfadjoint(skew, c));
  CHECK_THROWS_AS(mst::selfadjoint_residual(mst::tto_matrix(k, k, RationalFn::monomial(1)),
                                            mst::conjugation_matrix(ModelSpace(BlaschkeProduct::power(3)))),
                  mst::SpaceMismatch);
}

TEST_CASE("conjugation pullbacks") {
  const ModelSpace k(kZ2), ka(kAlpha);
  const auto ck = mst::conjugation_matrix(k);
  const auto f = mst::multiplication_matrix(ka, k, mst::multiplier_between(ka, k));
  const auto pulled = mst::conjugation_pullback(ck, f, mst::PullbackMode::via_F);
  CHECK((pulled.j - mst::conjugation_matrix(ka).j).norm() < 1e-9);

  const auto identity = mst::multiplication_matrix(ka, ka, RationalFn::constant(1.0));
  const auto ca = mst::conjugation_matrix(ka);
  CHECK((mst::conjugation_pullback(ca, identity, mst::PullbackMode::via_F).j - ca.j).norm() < 1e-14);

  const ModelSpace kz3(BlaschkeProduct::power(3));
  const auto cr = mst::crofoot_multiplier(kz3, cplx(0.3, -0.2));
  const auto u = mst::multiplication_matrix(kz3, cr.target, cr.j);
  const auto ct = mst::conjugation_matrix(cr.target);
  const Mat via_f = mst::conjugation_pullback(ct, u, mst::PullbackMode::via_F).j;
  const Mat via_ef = mst::conjugation_pullback(ct, u, mst::PullbackMode::via_EF).j;
  CHECK((via_f - via_ef).norm() < 1e-9);
}

TEST_CASE("rank equivalence") {
  Mat a = Mat::Zero(2, 2), b = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 2.0;
  const auto r = mst::rank_equivalence(a, b);
  REQUIRE(r.has_value());
  CHECK((a - r->e * b * r->f).norm() < 1e-10);

  const auto id = mst::rank_equivalence(Mat::Identity(3, 3), Mat::Identity(3, 3));
  REQUIRE(id.has_value());
  CHECK(id->residual < 1e-12);
  CHECK_FALSE(mst::rank_equivalence(Mat::Identity(2, 2), a).has_value());
  CHECK_THROWS_AS(mst::rank_equivalence(Mat::Identity(2, 2), Mat::Identity(3, 3)), mst::SpaceMismatch);

  mst::Rng rng(25);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 5, rank = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    auto random_rank = [&](int rk) {
      Mat l(n, std::max(rk, 1)), rt(std::max(rk, 1), n);
      for (Eigen::Index i = 0; i < l.size(); ++i) l.data()[i] = mst::random_gaussian(rng);
      for (Eigen::Index i = 0; i < rt.size(); ++i) rt.data()[i] = mst::random_gaussian(rng);
      return rk == 0 ? Mat(Mat::Zero(n, n)) : Mat(l * rt);
    };
    const Mat x = random_rank(rank), y = random_rank(rank);
    const auto q = mst::rank_equivalence(x, y);
    REQUIRE(q.has_value());
    CHECK((x - q->e * y * q->f).norm() < 1e-8 * (1.0 + x.norm()));
    CHECK(q->cond_e < 1e8);
    CHECK(q->cond_f < 1e8);
  }
}

TEST_CASE("kernel and range") {
  const ModelSpace k(kZ2);
  const auto shift = mst::kernel_and_range(mst::tto_matrix(k, k, RationalFn::monomial(1)).entries);
  CHECK(shift.rank == 1);
  REQUIRE(shift.kernel_basis.size() == 1);
  CHECK(std::abs(std::abs(shift.kernel_basis[0](1)) - 1.0) < 1e-14);
  CHECK(std::abs(shift.kernel_basis[0](0)) < 1e-14);

  const auto inv = mst::kernel_and_range(mat2(1.0, 0.0, 5.0 / 6.0, 1.0));
  CHECK(inv.rank == 2);
  CHECK(inv.kernel_basis.empty());

  const auto zero = mst::kernel_and_range(Mat::Zero(3, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel_basis.size() == 3);
}
