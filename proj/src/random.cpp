#include "mst/random.hpp"

#include <cmath>
#include <numbers>

namespace mst {

cplx random_point(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

cplx random_gaussian(Rng& rng) {
  std::normal_distribution<double> g;
  const double re = g(rng);
  return {re, g(rng)};
}

BlaschkeProduct random_blaschke(Rng& rng, int degree, double max_radius) {
  std::vector<cplx> zeros;
  for (int i = 0; i < degree; ++i) zeros.push_back(random_point(rng, max_radius));
  return BlaschkeProduct(std::move(zeros));
}

RationalFn random_rational(Rng& rng, int num_degree, int pole_count, double margin) {
  std::vector<cplx> c;
  for (int i = 0; i <= num_degree; ++i) c.push_back(random_gaussian(rng));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> poles;
  for (int i = 0; i < pole_count; ++i) {
    const bool inside = u(rng) < 0.5;
    const double r = inside ? (1.0 - margin) * u(rng) : (1.0 + margin) + 0.6 * u(rng);
    poles.push_back(std::polar(r, 2.0 * std::numbers::pi * u(rng)));
  }
  return RationalFn::from_poles(ComplexPoly(std::move(c)), std::move(poles));
}

RationalFn random_laurent(Rng& rng, int lo, int hi) {
  std::vector<cplx> c;
  for (int k = lo; k <= hi; ++k) c.push_back(random_gaussian(rng));
  const RationalFn p{ComplexPoly(std::move(c))};
  return lo == 0 ? p : p * RationalFn::monomial(lo);
}

}  // namespace mst
