#include "mst/rational.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mst/errors.hpp"

namespace mst {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_pole(cplx p, double pole_tolerance) {
  if (std::abs(std::abs(p) - 1.0) < pole_tolerance) {
    std::ostringstream os;
    os << "pole " << p << " lies within " << pole_tolerance << " of the unit circle";
    throw PoleOnCircle(os.str());
  }
}

bool same_pole(cplx a, cplx b) {
  return std::abs(a - b) <= tol::kPoleMerge * std::max(1.0, std::abs(a));
}

// For each entry of `from`, whether it is matched by a distinct entry of `into`.
std::vector<bool> match_poles(const std::vector<cplx>& from, const std::vector<cplx>& into) {
  std::vector<bool> used(into.size(), false);
  std::vector<bool> matched(from.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < into.size(); ++j) {
      if (!used[j] && same_pole(from[i], into[j])) {
        used[j] = true;
        matched[i] = true;
        break;
      }
    }
  }
  return matched;
}

// f = Q + A / D_in + B / D_out with D_in monic (poles inside the disk) and
// D_out normalized to D_out(0) = 1 (poles outside the closed disk).
struct PartialFractions {
  ComplexPoly quotient;
  ComplexPoly inner_num;
  ComplexPoly inner_den;
  ComplexPoly outer_num;
  ComplexPoly outer_den;
  std::vector<cplx> inner_poles;
  std::vector<cplx> outer_poles;
  cplx outer_lead = 1.0;  // D_out = outer_lead * prod (z - q)
};

PartialFractions decompose(const RationalFn& f) {
  PartialFractions pf;
  for (const cplx p : f.poles()) (std::abs(p) < 1.0 ? pf.inner_poles : pf.outer_poles).push_back(p);
  for (const cplx p : pf.inner_poles)
    for (const cplx q : pf.outer_poles)
      if (std::abs(p - q) <= tol::kCluster)
        throw ClusteredPoles("poles inside and outside the disk are numerically coincident; "
                             "adjust the input so they separate");

  cplx lead = 1.0;
  for (const cplx q : pf.outer_poles) lead *= -1.0 / q;
  pf.outer_lead = lead;
  pf.inner_den = ComplexPoly::from_roots(pf.inner_poles);
  pf.outer_den = ComplexPoly::from_roots(pf.outer_poles, lead);

  // f = num / prod(z - p) = (num * lead) / (D_in * D_out).
  const ComplexPoly num = f.num() * lead;
  const ComplexPoly full = pf.inner_den * pf.outer_den;
  auto [q, r] = num.divmod(full);
  pf.quotient = std::move(q);

  const int din = static_cast<int>(pf.inner_poles.size());
  const int dout = static_cast<int>(pf.outer_poles.size());
  if (din == 0) {
    pf.outer_num = std::move(r);
    return pf;
  }
  if (dout == 0) {
    pf.inner_num = std::move(r);
    return pf;
  }
  // Sylvester system R = A * D_out + B * D_in, deg A < din, deg B < dout.
  const int d = din + dout;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  Eigen::VectorXcd rhs(d);
  for (int k = 0; k < d; ++k) rhs(k) = r[k];
  for (int i = 0; i < din; ++i)
    for (int j = 0; j <= dout; ++j) m(i + j, i) = pf.outer_den[j];
  for (int i = 0; i < dout; ++i)
    for (int j = 0; j <= din; ++j) m(i + j, din + i) = pf.inner_den[j];
  const Eigen::VectorXcd x = m.fullPivLu().solve(rhs);
  pf.inner_num = ComplexPoly(std::vector<cplx>(x.data(), x.data() + din));
  pf.outer_num = ComplexPoly(std::vector<cplx>(x.data() + din, x.data() + d));
  return pf;
}

// Taylor coefficients of num / den at 0 (den(0) != 0), indices 0..count-1.
std::vector<cplx> series(const ComplexPoly& num, const ComplexPoly& den, int count) {
  std::vector<cplx> s(static_cast<std::size_t>(std::max(count, 0)), cplx(0.0));
  const cplx d0 = den[0];
  for (int k = 0; k < count; ++k) {
    cplx acc = num[k];
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den[j] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc / d0;
  }
  return s;
}

// Coefficients c_1..c_count of A / D_in = sum_{m>=1} c_m z^{-m}.
std::vector<cplx> tail_series(const ComplexPoly& a, const ComplexPoly& d_in, int count) {
  const int d = d_in.degree();
  if (d <= 0 || a.is_zero() || count <= 0) return std::vector<cplx>(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  std::vector<cplx> arev(static_cast<std::size_t>(d), 0.0);
  for (int j = 0; j < d; ++j) arev[static_cast<std::size_t>(j)] = a[d - 1 - j];
  std::vector<cplx> drev(static_cast<std::size_t>(d) + 1, 0.0);
  for (int j = 0; j <= d; ++j) drev[static_cast<std::size_t>(j)] = d_in[d - j];
  return series(ComplexPoly(std::move(arev)), ComplexPoly(std::move(drev)), count);
}

}  // namespace

RationalFn::RationalFn(ComplexPoly num) : num_(std::move(num)) {}

RationalFn::RationalFn(ComplexPoly num, ComplexPoly den, double pole_tolerance) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const cplx lead = den.leading();
  if (lead != cplx(1.0)) {
    num *= 1.0 / lead;
    den *= 1.0 / lead;
  }
  std::vector<cplx> poles = roots(den);
  const std::size_t npoles = poles.size();
  *this = reduced(std::move(num), std::move(poles), pole_tolerance);
  // Keep the caller's denominator verbatim when nothing cancelled.
  if (poles_.size() == npoles && !num_.is_zero()) den_ = std::move(den);
}

RationalFn RationalFn::constant(cplx c) { return RationalFn(ComplexPoly::constant(c)); }

RationalFn RationalFn::monomial(int k, cplx c) {
  if (k >= 0) return RationalFn(ComplexPoly::monomial(k, c));
  return from_poles(ComplexPoly::constant(c), std::vector<cplx>(static_cast<std::size_t>(-k), 0.0));
}

RationalFn RationalFn::from_poles(ComplexPoly num, std::vector<cplx> poles, double pole_tolerance) {
  return reduced(std::move(num), std::move(poles), pole_tolerance);
}

RationalFn RationalFn::from_roots(cplx scale, const std::vector<cplx>& zeros,
                                  const std::vector<cplx>& poles) {
  return reduced(ComplexPoly::from_roots(zeros, scale), poles, tol::kPole);
}

RationalFn RationalFn::reduced(ComplexPoly num, std::vector<cplx> poles, double pole_tolerance) {
  for (const cplx p : poles) check_pole(p, pole_tolerance);
  RationalFn out;
  if (num.is_zero()) return out;
  std::vector<cplx> kept;
  kept.reserve(poles.size());
  for (const cplx p : poles) {
    if (num.degree() >= 1 && std::abs(num(p)) <= tol::kCancel * num.eval_scale(p)) {
      num = num.deflate(p);
    } else {
      kept.push_back(p);
    }
  }
  out.num_ = std::move(num);
  out.den_ = ComplexPoly::from_roots(kept);
  out.poles_ = std::move(kept);
  return out;
}

cplx RationalFn::operator()(cplx z) const { return num_(z) / den_(z); }

RationalFn RationalFn::conj() const {
  if (is_zero()) return {};
  const int n = num_.degree();
  const int m = static_cast<int>(poles_.size());
  ComplexPoly num = num_.reversed_conjugate();
  std::vector<cplx> poles;
  cplx scale = 1.0;
  for (const cplx p : poles_) {
    if (p == cplx(0.0)) continue;
    scale /= -std::conj(p);
    poles.push_back(1.0 / std::conj(p));
  }
  if (m >= n) {
    num = num.shifted(m - n);
  } else {
    poles.insert(poles.end(), static_cast<std::size_t>(n - m), cplx(0.0));
  }
  return reduced(num * scale, std::move(poles), 0.0);
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  const std::vector<cplx> zeros = roots(num_);
  return reduced(den_ * (1.0 / num_.leading()), zeros, tol::kPole);
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn operator+(const RationalFn& f, const RationalFn& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const std::vector<bool> g_matched = match_poles(g.poles_, f.poles_);
  const std::vector<bool> f_matched = match_poles(f.poles_, g.poles_);
  std::vector<cplx> extra_g;
  std::vector<cplx> extra_f;
  for (std::size_t i = 0; i < g.poles_.size(); ++i)
    if (!g_matched[i]) extra_g.push_back(g.poles_[i]);
  for (std::size_t i = 0; i < f.poles_.size(); ++i)
    if (!f_matched[i]) extra_f.push_back(f.poles_[i]);

  const ComplexPoly a = f.num_ * ComplexPoly::from_roots(extra_g);
  const ComplexPoly b = g.num_ * ComplexPoly::from_roots(extra_f);
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  ComplexPoly num = (a + b).trimmed(4.0 * kEps * scale);
  std::vector<cplx> poles = f.poles_;
  poles.insert(poles.end(), extra_g.begin(), extra_g.end());
  return RationalFn::reduced(std::move(num), std::move(poles), 0.0);
}

RationalFn operator-(const RationalFn& f, const RationalFn& g) { return f + (-g); }

RationalFn operator*(const RationalFn& f, const RationalFn& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<cplx> poles = f.poles_;
  poles.insert(poles.end(), g.poles_.begin(), g.poles_.end());
  return RationalFn::reduced(f.num_ * g.num_, std::move(poles), 0.0);
}

RationalFn operator*(const RationalFn& f, cplx s) {
  if (s == cplx(0.0)) return {};
  RationalFn r = f;
  r.num_ *= s;
  return r;
}

RationalFn operator/(const RationalFn& f, const RationalFn& g) { return f * g.inverse(); }

RationalFn rat_arith(const RationalFn& f, const RationalFn& g, ArithOp op) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    case ArithOp::div: return f / g;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

FourierSplit riesz_project(const RationalFn& f) {
  if (f.is_zero()) return {};
  const PartialFractions pf = decompose(f);
  FourierSplit split;
  split.antianalytic = RationalFn::from_poles(pf.inner_num, pf.inner_poles);
  const ComplexPoly outer = pf.quotient * pf.outer_den + pf.outer_num;
  split.analytic = RationalFn::from_poles(outer * (1.0 / pf.outer_lead), pf.outer_poles);
  return split;
}

std::vector<cplx> fourier_coefficients(const RationalFn& f, int lo, int hi) {
  std::vector<cplx> out;
  if (hi < lo) return out;
  out.assign(static_cast<std::size_t>(hi - lo + 1), cplx(0.0));
  if (f.is_zero()) return out;
  const PartialFractions pf = decompose(f);
  if (hi >= 0) {
    const int count = hi + 1;
    const std::vector<cplx> s = series(pf.outer_num, pf.outer_den, count);
    for (int n = std::max(lo, 0); n <= hi; ++n)
      out[static_cast<std::size_t>(n - lo)] = pf.quotient[n] + s[static_cast<std::size_t>(n)];
  }
  if (lo < 0) {
    const int count = -lo;
    const std::vector<cplx> t = tail_series(pf.inner_num, pf.inner_den, count);
    for (int n = lo; n <= std::min(hi, -1); ++n)
      out[static_cast<std::size_t>(n - lo)] = t[static_cast<std::size_t>(-n - 1)];
  }
  return out;
}

cplx fourier_coefficient(const RationalFn& f, int n) { return fourier_coefficients(f, n, n).front(); }

cplx inner_product(const RationalFn& f, const RationalFn& g) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  return fourier_coefficient(f * g.conj(), 0);
}

double l2_norm(const RationalFn& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

cplx circle_point(int k, int count, double offset) {
  return std::polar(1.0, 2.0 * std::numbers::pi * k / count + offset);
}

double sup_norm_sampled(const RationalFn& f, int samples) {
  double m = 0.0;
  for (int k = 0; k < samples; ++k) m = std::max(m, std::abs(f(circle_point(k, samples))));
  return m;
}

double sampled_distance(const RationalFn& f, const RationalFn& g, int samples) {
  double m = 0.0;
  for (int k = 0; k < samples; ++k) {
    const cplx z = circle_point(k, samples, 0.1);
    m = std::max(m, std::abs(f(z) - g(z)));
  }
  return m;
}

double coefficient_residual(const RationalFn& f, const RationalFn& g) {
  const ComplexPoly a = f.num() * g.den();
  const ComplexPoly b = g.num() * f.den();
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  return (a - b).max_abs_coeff() / scale;
}

}  // namespace mst
