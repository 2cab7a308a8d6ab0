#include "mst/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace mst {

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void ComplexPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

ComplexPoly ComplexPoly::constant(cplx c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(int degree, cplx c) {
  std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, cplx(0.0));
  v.back() = c;
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> c{lead};
  for (const cplx r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return ComplexPoly(std::move(c));
}

cplx ComplexPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx ComplexPoly::leading() const { return coeffs_.empty() ? cplx(0.0) : coeffs_.back(); }

cplx ComplexPoly::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double ComplexPoly::eval_scale(cplx z) const {
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double ComplexPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPoly ComplexPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::reversed_conjugate() const {
  std::vector<cplx> r(coeffs_.rbegin(), coeffs_.rend());
  for (cplx& c : r) c = std::conj(c);
  return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<cplx> v(static_cast<std::size_t>(k), cplx(0.0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return ComplexPoly(std::move(v));
}

int ComplexPoly::low_order_zeros() const {
  int k = 0;
  while (k <= degree() && coeffs_[static_cast<std::size_t>(k)] == cplx(0.0)) ++k;
  return k;
}

ComplexPoly ComplexPoly::unshifted(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return ComplexPoly(std::vector<cplx>(coeffs_.begin() + k, coeffs_.end()));
}

ComplexPoly ComplexPoly::trimmed(double abs_tol) const {
  std::vector<cplx> v = coeffs_;
  while (!v.empty() && std::abs(v.back()) <= abs_tol) v.pop_back();
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::deflate(cplx r) const {
  if (degree() < 1) return {};
  const std::size_t n = coeffs_.size() - 1;
  std::vector<cplx> q(n);
  if (std::abs(r) > 1.0) {
    // Forward Horner amplifies error by |r| per step; run from the constant term instead.
    cplx prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      q[k] = (prev - coeffs_[k]) / r;
      prev = q[k];
    }
    return ComplexPoly(std::move(q));
  }
  cplx acc = coeffs_[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = acc;
    acc = coeffs_[k] + acc * r;
  }
  return ComplexPoly(std::move(q));
}

std::pair<ComplexPoly, ComplexPoly> ComplexPoly::divmod(const ComplexPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {ComplexPoly{}, *this};
  std::vector<cplx> rem = coeffs_;
  const int dn = d.degree();
  const int qn = degree() - dn;
  std::vector<cplx> q(static_cast<std::size_t>(qn) + 1);
  const cplx lead = d.leading();
  for (int k = qn; k >= 0; --k) {
    const cplx c = rem[static_cast<std::size_t>(k + dn)] / lead;
    q[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d[j];
  }
  rem.resize(static_cast<std::size_t>(dn));
  return {ComplexPoly(std::move(q)), ComplexPoly(std::move(rem))};
}

ComplexPoly ComplexPoly::operator-() const {
  ComplexPoly r = *this;
  for (cplx& c : r.coeffs_) c = -c;
  return r;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  strip();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  strip();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(cplx s) {
  if (s == cplx(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (cplx& c : coeffs_) c *= s;
  return *this;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ComplexPoly(std::move(c));
}

std::vector<cplx> roots(const ComplexPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const int zeros = p.low_order_zeros();
  std::vector<cplx> out(static_cast<std::size_t>(zeros), cplx(0.0));
  const ComplexPoly q = p.unshifted(zeros);
  const int n = q.degree();
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(-q[0] / q[1]);
    return out;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = q.leading();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -q[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const ComplexPoly dq = q.derivative();
  for (int i = 0; i < n; ++i) {
    cplx r = solver.eigenvalues()(i);
    // Newton polish, accepted only while it strictly reduces the residual.
    double res = std::abs(q(r));
    for (int it = 0; it < 3 && res > 0.0; ++it) {
      const cplx d = dq(r);
      if (d == cplx(0.0)) break;
      const cplx cand = r - q(r) / d;
      const double cres = std::abs(q(cand));
      if (!(cres < res)) break;
      r = cand;
      res = cres;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<RootCluster> cluster_roots(std::span<const cplx> values, double tol) {
  std::vector<RootCluster> clusters;
  std::vector<cplx> sums;
  for (const cplx v : values) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(clusters[c].value - v) <= tol) {
        sums[c] += v;
        ++clusters[c].multiplicity;
        clusters[c].value = sums[c] / static_cast<double>(clusters[c].multiplicity);
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({v, 1});
      sums.push_back(v);
    }
  }
  return clusters;
}

}  // namespace mst
