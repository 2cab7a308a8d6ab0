#pragma once

#include <array>

#include "mst/operators.hpp"

namespace mst {

/// Canonical factorization G = G- G+ of G = [[conj(z)^n, 0], [phi, z^n]],
/// normalized by G-(infinity) = I.
struct MatrixFactorization {
  /// Entries of G+^-1, polynomials in z.
  std::array<std::array<ComplexPoly, 2>, 2> g_plus_inv;
  /// Entries of G-^-1, polynomials in 1/z.
  std::array<std::array<RationalFn, 2>, 2> g_minus_inv;
  int n = 0;
  RationalFn phi;
  /// Degree bound at which the linear system became solvable.
  int degree_bound = 0;
  /// Least-squares residual of the coefficient system.
  double solve_residual = 0.0;
  /// max over 32 circle points of |G - G- G+|.
  double consistency_residual = 0.0;
};

/// Laurent coefficients of a function whose poles all sit at 0: {lowest index, coefficients}.
/// Throws InvalidArgument for other poles.
std::pair<int, std::vector<cplx>> laurent_coefficients(const RationalFn& phi);

/// Solves G G+^-1 = G- for polynomial G+^-1, raising the degree bound from n up to
/// n + 2 width(phi) + 4. Throws NoCanonicalFactorization if A^{z^n}_phi is singular
/// and FactorizationUndetermined if the search fails although A is invertible.
MatrixFactorization wh_factorize(int n, const RationalFn& phi);

/// (A^{z^n}_phi)^-1 f = P(g11+ P+(g12- f) + g12+ P+(g22- f)) for f in K_{z^n}.
RationalFn tto_inverse_via_wh(const MatrixFactorization& fac, const RationalFn& f);
RationalFn tto_inverse_via_wh(int n, const RationalFn& phi, const RationalFn& f);

/// Inverse of A^{z^n}_phi by LU. Throws SingularOperator when cond > 1e10.
OperatorMatrix invert_direct(int n, const RationalFn& phi);

}  // namespace mst
