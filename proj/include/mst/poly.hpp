#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace mst {

using cplx = std::complex<double>;

/// Complex-coefficient polynomial, coefficients in ascending degree.
///
/// The zero polynomial has no coefficients and degree -1. Construction strips
/// exact trailing zeros only, so coefficient vectors read from a file survive a
/// round trip unchanged.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cplx> coeffs);

  static ComplexPoly constant(cplx c);
  static ComplexPoly monomial(int degree, cplx c = 1.0);
  /// lead * prod (z - r)
  static ComplexPoly from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator[](int k) const;
  cplx leading() const;

  cplx operator()(cplx z) const;
  /// sum_k |c_k| |z|^k, the natural scale for judging |p(z)| against rounding.
  double eval_scale(cplx z) const;
  double max_abs_coeff() const;

  ComplexPoly derivative() const;
  /// z^deg * conj(p(1 / conj(z))): conjugated coefficients in reverse order.
  ComplexPoly reversed_conjugate() const;
  /// Multiply by z^k (k >= 0).
  ComplexPoly shifted(int k) const;
  /// Number of exactly-zero low-order coefficients (multiplicity of the root at 0).
  int low_order_zeros() const;
  /// Divide by z^k, assuming the low coefficients are zero.
  ComplexPoly unshifted(int k) const;
  /// Drop leading coefficients whose modulus is below abs_tol.
  ComplexPoly trimmed(double abs_tol) const;

  /// Synthetic division by (z - r); the remainder is discarded.
  ComplexPoly deflate(cplx r) const;
  /// Quotient and remainder of division by d.
  std::pair<ComplexPoly, ComplexPoly> divmod(const ComplexPoly& d) const;

  ComplexPoly operator-() const;
  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  ComplexPoly& operator*=(cplx s);

  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(ComplexPoly a, cplx s) { return a *= s; }
  friend ComplexPoly operator*(cplx s, ComplexPoly a) { return a *= s; }
  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void strip();
  std::vector<cplx> coeffs_;
};

/// Roots by eigenvalues of the companion matrix, with exact roots at the origin
/// peeled off first and a Newton polish on the remainder.
std::vector<cplx> roots(const ComplexPoly& p);

struct RootCluster {
  cplx value;
  int multiplicity;
};

/// Group values lying within tol of a cluster representative.
std::vector<RootCluster> cluster_roots(std::span<const cplx> values, double tol);

}  // namespace mst
