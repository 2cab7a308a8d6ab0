#pragma once

#include <random>

#include "mst/blaschke.hpp"

namespace mst {

using Rng = std::mt19937_64;

/// Uniform in the disk of the given radius.
cplx random_point(Rng& rng, double radius);
/// Standard complex normal.
cplx random_gaussian(Rng& rng);

/// Zeros uniform in |z| <= max_radius.
BlaschkeProduct random_blaschke(Rng& rng, int degree, double max_radius = 0.8);

/// Polynomial of the given degree over the number of poles, each pole at
/// distance >= margin from the circle (inside or outside) and at most 0.8 / 1.6 in modulus.
RationalFn random_rational(Rng& rng, int num_degree, int pole_count, double margin = 0.2);

/// sum_{k=lo}^{hi} c_k z^k with complex normal c_k.
RationalFn random_laurent(Rng& rng, int lo, int hi);

}  // namespace mst
