#pragma once

#include <vector>

#include "mst/poly.hpp"
#include "mst/tolerances.hpp"

namespace mst {

/// Quotient of two complex polynomials with no poles near the unit circle.
///
/// The denominator is monic and its roots (the poles) are kept alongside it, so
/// that products and sums of functions with known poles never go back through
/// root finding. Every constructor cancels numerator roots that coincide with a
/// pole, which keeps the representation reduced.
class RationalFn {
 public:
  /// The zero function.
  RationalFn() = default;
  /// Polynomial function.
  explicit RationalFn(ComplexPoly num);
  /// num / den. den is normalized to be monic; its roots are found numerically.
  RationalFn(ComplexPoly num, ComplexPoly den, double pole_tolerance = tol::kPole);

  static RationalFn constant(cplx c);
  /// z^k for any integer k.
  static RationalFn monomial(int k, cplx c = 1.0);
  /// num / prod (z - p).
  static RationalFn from_poles(ComplexPoly num, std::vector<cplx> poles,
                               double pole_tolerance = tol::kPole);
  /// scale * prod (z - zero) / prod (z - pole).
  static RationalFn from_roots(cplx scale, const std::vector<cplx>& zeros,
                               const std::vector<cplx>& poles);

  const ComplexPoly& num() const { return num_; }
  const ComplexPoly& den() const { return den_; }
  const std::vector<cplx>& poles() const { return poles_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return poles_.empty(); }
  cplx operator()(cplx z) const;

  /// g(z) = conj(f(1 / conj(z))); equals the pointwise conjugate on the circle.
  RationalFn conj() const;
  RationalFn inverse() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& f, const RationalFn& g);
  friend RationalFn operator-(const RationalFn& f, const RationalFn& g);
  friend RationalFn operator*(const RationalFn& f, const RationalFn& g);
  friend RationalFn operator/(const RationalFn& f, const RationalFn& g);
  friend RationalFn operator*(const RationalFn& f, cplx s);
  friend RationalFn operator*(cplx s, const RationalFn& f) { return f * s; }

 private:
  static RationalFn reduced(ComplexPoly num, std::vector<cplx> poles, double pole_tolerance);

  ComplexPoly num_;
  ComplexPoly den_ = ComplexPoly::constant(1.0);
  std::vector<cplx> poles_;
};

enum class ArithOp { add, sub, mul, div };
RationalFn rat_arith(const RationalFn& f, const RationalFn& g, ArithOp op);

inline RationalFn circle_conjugate(const RationalFn& f) { return f.conj(); }

/// Decomposition f = analytic + antianalytic along the Hardy space.
struct FourierSplit {
  /// P+ f: polynomial part plus the terms with poles outside the closed disk.
  RationalFn analytic;
  /// P- f: terms with poles inside the disk, vanishing at infinity.
  RationalFn antianalytic;
};

FourierSplit riesz_project(const RationalFn& f);

/// Fourier coefficient f^(n) on the unit circle.
cplx fourier_coefficient(const RationalFn& f, int n);
/// f^(lo), ..., f^(hi) from a single partial fraction decomposition.
std::vector<cplx> fourier_coefficients(const RationalFn& f, int lo, int hi);

/// L2(m) pairing: integral over the circle of f * conj(g).
cplx inner_product(const RationalFn& f, const RationalFn& g);
double l2_norm(const RationalFn& f);

/// max over n equally spaced circle points of |f|.
double sup_norm_sampled(const RationalFn& f, int samples = tol::kSupSamples);
/// max over n equally spaced circle points of |f - g|.
double sampled_distance(const RationalFn& f, const RationalFn& g, int samples = 32);
/// The n-th of `count` equally spaced points on the circle, starting at angle offset.
cplx circle_point(int k, int count, double offset = 0.0);

/// Cross-multiplied coefficient residual ||num_f den_g - num_g den_f||_inf,
/// relative to the size of the two products.
double coefficient_residual(const RationalFn& f, const RationalFn& g);

}  // namespace mst
