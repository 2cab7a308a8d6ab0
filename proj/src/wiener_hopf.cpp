#include "mst/wiener_hopf.hpp"

#include <Eigen/QR>
#include <sstream>

#include "mst/errors.hpp"

namespace mst {

namespace {

constexpr double kSolveGate = 1e-10;
constexpr double kSingularCond = 1e10;

// sum_k c[k] z^(lo + k) as a RationalFn.
RationalFn laurent(int lo, const std::vector<cplx>& c) {
  if (lo >= 0) return RationalFn(ComplexPoly(c).shifted(lo));
  return RationalFn(ComplexPoly(c)) * RationalFn::monomial(lo);
}

cplx poly_at(const ComplexPoly& p, cplx z) { return p(z); }

}  // namespace

std::pair<int, std::vector<cplx>> laurent_coefficients(const RationalFn& phi) {
  for (const cplx p : phi.poles())
    if (p != cplx(0.0)) throw InvalidArgument("symbol is not a Laurent polynomial (pole away from 0)");
  const int shift = static_cast<int>(phi.poles().size());
  std::vector<cplx> c = phi.num().coeffs();
  int lo = -shift;
  std::size_t first = 0;
  while (first < c.size() && c[first] == cplx(0.0)) ++first;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(first));
  lo += static_cast<int>(first);
  if (c.empty()) lo = 0;
  return {lo, c};
}

MatrixFactorization wh_factorize(int n, const RationalFn& phi) {
  if (n < 1) throw InvalidArgument("Wiener-Hopf factorization needs n >= 1");
  const auto [lo, coeffs] = laurent_coefficients(phi);
  const int width = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
  const int hi = lo + width;
  auto phi_at = [&](int k) -> cplx {
    const int i = k - lo;
    return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : cplx(0.0);
  };

  const int cap = n + 2 * width + 4;
  for (int d = n; d <= cap && !coeffs.empty(); ++d) {
    // Unknowns: x1_0..x1_d, x2_0..x2_d for one column of G+^-1.
    // Row 1 of G X: z^-n x1, coefficients z^m for m = 0..d-n.
    // Row 2: phi x1 + z^n x2, coefficients z^m for m = 0..d+max(hi, n).
    const int top = d + std::max(hi, n);
    const int eqs = (d - n + 1) + (top + 1);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(eqs, 2 * (d + 1));
    for (int mm = 0; mm <= d - n; ++mm) m(mm, mm + n) = 1.0;
    const int off = d - n + 1;
    for (int mm = 0; mm <= top; ++mm) {
      for (int k = 0; k <= d; ++k) m(off + mm, k) = phi_at(mm - k);
      if (mm - n >= 0 && mm - n <= d) m(off + mm, d + 1 + mm - n) = 1.0;
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(m);
    MatrixFactorization out;
    bool ok = true;
    double worst = 0.0;
    for (int col = 0; col < 2 && ok; ++col) {
      Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(eqs);
      rhs(col == 0 ? 0 : off) = 1.0;
      const Eigen::VectorXcd x = cod.solve(rhs);
      const double res = (m * x - rhs).norm();
      worst = std::max(worst, res);
      if (!(res < kSolveGate * std::max(1.0, m.norm() * x.norm()))) ok = false;
      std::vector<cplx> x1(x.data(), x.data() + d + 1), x2(x.data() + d + 1, x.data() + 2 * (d + 1));
      out.g_plus_inv[0][static_cast<std::size_t>(col)] = ComplexPoly(std::move(x1));
      out.g_plus_inv[1][static_cast<std::size_t>(col)] = ComplexPoly(std::move(x2));
    }
    if (!ok) continue;

    const auto& x = out.g_plus_inv;
    const ComplexPoly det = x[0][0] * x[1][1] - x[0][1] * x[1][0];
    const double det_defect = (det - ComplexPoly::constant(1.0)).max_abs_coeff();
    if (!(det_defect < 1e-8 * (1.0 + x[0][0].max_abs_coeff() * x[1][1].max_abs_coeff() +
                               x[0][1].max_abs_coeff() * x[1][0].max_abs_coeff())))
      continue;

    // G- = G X has entries in 1/z; with det G- = 1 its inverse is the adjugate.
    const RationalFn zn_bar = RationalFn::monomial(-n);
    const RationalFn zn = RationalFn::monomial(n);
    const RationalFn phi_l = laurent(lo, coeffs);
    std::array<std::array<RationalFn, 2>, 2> gm;
    for (std::size_t c = 0; c < 2; ++c) {
      gm[0][c] = zn_bar * RationalFn(x[0][c]);
      gm[1][c] = phi_l * RationalFn(x[0][c]) + zn * RationalFn(x[1][c]);
    }
    out.g_minus_inv[0][0] = gm[1][1];
    out.g_minus_inv[0][1] = -gm[0][1];
    out.g_minus_inv[1][0] = -gm[1][0];
    out.g_minus_inv[1][1] = gm[0][0];
    out.n = n;
    out.phi = phi;
    out.degree_bound = d;
    out.solve_residual = worst;

    for (int s = 0; s < 32; ++s) {
      const cplx z = circle_point(s, 32, 0.1);
      Eigen::Matrix2cd g, gminus, gplus;
      g << std::pow(std::conj(z), n), 0.0, phi(z), std::pow(z, n);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gminus(i, j) = gm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](z);
      // G+ = adj(X) since det X = 1.
      gplus << poly_at(x[1][1], z), -poly_at(x[0][1], z), -poly_at(x[1][0], z), poly_at(x[0][0], z);
      out.consistency_residual = std::max(out.consistency_residual, (g - gminus * gplus).cwiseAbs().maxCoeff());
    }
    return out;
  }

  const ModelSpace space(BlaschkeProduct::power(n));
  const double cond = condition_number(tto_matrix(space, space, phi).entries);
  std::ostringstream os;
  if (!(cond < kSingularCond)) {
    os << "A^{z^" << n << "}_phi is singular (condition number " << cond << "); no canonical factorization";
    throw NoCanonicalFactorization(os.str());
  }
  os << "no factorization found up to degree bound " << cap << " although A^{z^" << n
     << "}_phi has condition number " << cond;
  throw FactorizationUndetermined(os.str());
}

RationalFn tto_inverse_via_wh(const MatrixFactorization& fac, const RationalFn& f) {
  if (!f.is_polynomial() || f.num().degree() >= fac.n) throw InvalidArgument("f must be a polynomial of degree < n");
  const RationalFn g11p(fac.g_plus_inv[0][0]);
  const RationalFn g12p(fac.g_plus_inv[0][1]);
  const RationalFn sum = g11p * riesz_project(fac.g_minus_inv[0][1] * f).analytic +
                         g12p * riesz_project(fac.g_minus_inv[1][1] * f).analytic;
  return project(ModelSpace(BlaschkeProduct::power(fac.n)), sum);
}

RationalFn tto_inverse_via_wh(int n, const RationalFn& phi, const RationalFn& f) {
  return tto_inverse_via_wh(wh_factorize(n, phi), f);
}

OperatorMatrix invert_direct(int n, const RationalFn& phi) {
  const ModelSpace space(BlaschkeProduct::power(n));
  OperatorMatrix a = tto_matrix(space, space, phi);
  const double cond = condition_number(a.entries);
  if (!(cond < kSingularCond)) {
    std::ostringstream os;
    os << "A^{z^" << n << "}_phi is singular (condition number " << cond << ")";
    throw SingularOperator(os.str());
  }
  a.entries = Eigen::FullPivLU<Eigen::MatrixXcd>(a.entries).inverse();
  return a;
}

}  // namespace mst
