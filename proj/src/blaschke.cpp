#include "mst/blaschke.hpp"

#include <cmath>
#include <sstream>

#include "mst/errors.hpp"

namespace mst {

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx constant)
    : zeros_(std::move(zeros)), constant_(constant) {
  for (const cplx a : zeros_) {
    if (!(std::abs(a) < 1.0 - tol::kZeroMargin)) {
      std::ostringstream os;
      os << "Blaschke zero " << a << " is not inside the open unit disk";
      throw InvalidArgument(os.str());
    }
  }
  if (std::abs(std::abs(constant_) - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "Blaschke constant " << constant_ << " is not unimodular";
    throw InvalidArgument(os.str());
  }
}

BlaschkeProduct BlaschkeProduct::power(int n) {
  if (n < 0) throw InvalidArgument("z^n requires n >= 0");
  return BlaschkeProduct(std::vector<cplx>(static_cast<std::size_t>(n), cplx(0.0)));
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = constant_;
  for (const cplx a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

ComplexPoly BlaschkeProduct::denominator_poly() const {
  ComplexPoly d = ComplexPoly::constant(1.0);
  for (const cplx a : zeros_) d = d * ComplexPoly({1.0, -std::conj(a)});
  return d;
}

ComplexPoly BlaschkeProduct::numerator_poly() const { return ComplexPoly::from_roots(zeros_); }

RationalFn to_rational(const BlaschkeProduct& b) {
  // (z - a) / (1 - conj(a) z) = (z - a) / (-conj(a) (z - 1/conj(a))) for a != 0.
  cplx scale = b.constant();
  std::vector<cplx> poles;
  for (const cplx a : b.zeros()) {
    if (a == cplx(0.0)) continue;
    scale /= -std::conj(a);
    poles.push_back(1.0 / std::conj(a));
  }
  return RationalFn::from_roots(scale, b.zeros(), poles);
}

BlaschkeFactorization factorize(const BlaschkeProduct& b) {
  BlaschkeFactorization f;
  f.n = b.degree();
  f.alpha_minus = RationalFn::from_roots(b.constant(), b.zeros(),
                                         std::vector<cplx>(b.zeros().size(), cplx(0.0)));
  std::vector<cplx> poles;
  cplx scale = 1.0;
  for (const cplx a : b.zeros()) {
    if (a == cplx(0.0)) continue;
    scale /= -std::conj(a);
    poles.push_back(1.0 / std::conj(a));
  }
  f.alpha_plus = RationalFn::from_roots(scale, {}, poles);
  return f;
}

BlaschkeProduct frostman_shift(const BlaschkeProduct& b, cplx a) {
  if (!(std::abs(a) < 1.0)) throw InvalidArgument("Frostman shift requires |a| < 1");
  if (a == cplx(0.0)) return b;
  if (b.degree() == 0) {
    const cplx c = (b.constant() - a) / (1.0 - std::conj(a) * b.constant());
    return BlaschkeProduct({}, c / std::abs(c));
  }
  // Zeros of B - a are the roots of c prod(z - a_j) - a prod(1 - conj(a_j) z).
  const ComplexPoly shifted = b.numerator_poly() * b.constant() - b.denominator_poly() * a;
  std::vector<cplx> zeros = roots(shifted);
  const cplx probe = circle_point(1, 7);
  const cplx target = (b(probe) - a) / (1.0 - std::conj(a) * b(probe));
  const BlaschkeProduct bare(zeros);
  cplx c = target / bare(probe);
  c /= std::abs(c);
  return BlaschkeProduct(std::move(zeros), c);
}

void check_contractive_analytic(const RationalFn& h) {
  for (const cplx p : h.poles()) {
    if (!(std::abs(p) > 1.0)) {
      std::ostringstream os;
      os << "h has a pole at " << p << " in the closed disk";
      throw InvalidArgument(os.str());
    }
  }
  const double sup = sup_norm_sampled(h);
  if (!(sup < 1.0)) {
    std::ostringstream os;
    os << "sampled sup norm of h is " << sup << ", must be < 1";
    throw InvalidArgument(os.str());
  }
}

GeneralizedFrostman generalized_frostman(const BlaschkeProduct& b, const RationalFn& h) {
  check_contractive_analytic(h);
  const RationalFn theta = to_rational(b);
  const RationalFn one = RationalFn::constant(1.0);
  const RationalFn h_bar = h.conj();
  GeneralizedFrostman g;
  const RationalFn denom = one - h * theta;
  g.theta_hbar = (theta - h_bar) / denom;
  g.a_minus = one - h_bar * theta.conj();
  g.a_plus = denom.inverse();
  return g;
}

BlaschkeProduct blaschke_gcd(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  std::vector<bool> used(b2.zeros().size(), false);
  std::vector<cplx> common;
  for (const cplx a : b1.zeros()) {
    for (std::size_t j = 0; j < b2.zeros().size(); ++j) {
      if (!used[j] && std::abs(a - b2.zeros()[j]) <= tol::kCluster) {
        used[j] = true;
        common.push_back(a);
        break;
      }
    }
  }
  return BlaschkeProduct(std::move(common));
}

BlaschkeProduct blaschke_quotient(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  std::vector<cplx> rest = b1.zeros();
  for (const cplx a : b2.zeros()) {
    bool found = false;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (std::abs(rest[j] - a) <= tol::kCluster) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("Blaschke quotient: divisor zeros are not a sub-multiset");
  }
  return BlaschkeProduct(std::move(rest), b1.constant() / b2.constant());
}

std::vector<cplx> boundary_spectrum(const BlaschkeProduct&) { return {}; }

}  // namespace mst
