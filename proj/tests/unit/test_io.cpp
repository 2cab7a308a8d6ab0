#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "mst/errors.hpp"
#include "mst/json_io.hpp"
#include "mst/random.hpp"
#include "mst/shorthand.hpp"

using mst::BlaschkeProduct;
using mst::ComplexPoly;
using mst::cplx;
using mst::json;
using mst::RationalFn;

namespace {

json reparse(const json& j) { return mst::parse_json_text(j.dump()); }

bool same_bits(const ComplexPoly& a, const ComplexPoly& b) { return a.coeffs() == b.coeffs(); }

}  // namespace

TEST_CASE("complex numbers and polynomials round-trip bit-exactly") {
  mst::Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const cplx c = mst::random_gaussian(rng) * std::pow(10.0, static_cast<double>(static_cast<int>(rng() % 40) - 20));
    CHECK(mst::complex_from_json(reparse(mst::to_json(c))) == c);
  }
  const cplx tiny(std::numeric_limits<double>::denorm_min(), -std::numeric_limits<double>::max());
  CHECK(mst::complex_from_json(reparse(mst::to_json(tiny))) == tiny);
  CHECK(mst::to_json(cplx(-0.0, 0.0)).dump() == "[0.0,0.0]");

  const ComplexPoly p({cplx(0.1, 0.2), cplx(1.0 / 3.0, -2.0 / 7.0), 1e-300});
  CHECK(same_bits(mst::poly_from_json(reparse(mst::to_json(p))), p));
  CHECK(mst::to_json(ComplexPoly()).dump() == "[]");
}

TEST_CASE("rational functions and Blaschke products round-trip") {
  mst::Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const RationalFn f = mst::random_rational(rng, 3, 3);
    const RationalFn g = mst::rational_from_json(reparse(mst::to_json(f)));
    CHECK(same_bits(g.num(), f.num()));
    CHECK(same_bits(g.den(), f.den()));
    CHECK(reparse(mst::to_json(g)) == reparse(mst::to_json(f)));

    const BlaschkeProduct b(mst::random_blaschke(rng, 3).zeros(), std::polar(1.0, 0.7));
    const BlaschkeProduct c = mst::blaschke_from_json(reparse(mst::to_json(b)));
    CHECK(c == b);
  }
  const RationalFn poly = mst::rational_from_json(json::parse(R"({"num": [[1, 0], [2, 0]]})"));
  CHECK(poly.is_polynomial());
  CHECK(mst::blaschke_from_json(json::parse(R"({"zeros": [[0.5, 0]]})")).constant() == cplx(1.0));
}

TEST_CASE("matrices and operator matrices round-trip") {
  Eigen::MatrixXcd m(2, 3);
  m << cplx(1.0, 2.0), 0.1, cplx(0.0, -1e-17), 3.0, cplx(5.0 / 6.0, 0.0), cplx(-1.0, 1.0 / 3.0);
  CHECK(mst::matrix_from_json(reparse(mst::to_json(m))) == m);

  const mst::ModelSpace k(BlaschkeProduct({0.5, 1.0 / 3.0}));
  const mst::OperatorMatrix a = mst::tto_matrix(k, k, RationalFn(ComplexPoly({1.0, 0.25})));
  const json j = reparse(mst::to_json(a));
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 2);
  const mst::OperatorMatrix back = mst::operator_from_json(j);
  CHECK(back.entries == a.entries);
  CHECK(back.domain == a.domain);
  CHECK(back.codomain == a.codomain);
}

TEST_CASE("complement elements and factorizations serialize") {
  const BlaschkeProduct z2 = BlaschkeProduct::power(2);
  const mst::ComplementElement f{RationalFn::monomial(3), RationalFn::monomial(-1, 2.0), z2};
  const mst::ComplementElement g = mst::complement_from_json(reparse(mst::to_json(f)));
  CHECK(same_bits(g.analytic.num(), f.analytic.num()));
  CHECK(same_bits(g.antianalytic.num(), f.antianalytic.num()));
  CHECK(same_bits(g.antianalytic.den(), f.antianalytic.den()));
  CHECK(g.theta == z2);
  CHECK_THROWS_AS(mst::complement_from_json(json::parse(R"({"theta": {"zeros": [[0,0]]}, "analytic": {"num": [[1,0]]}})")),
                  mst::InvalidArgument);

  const auto fac = mst::wh_factorize(1, RationalFn::constant(2.0));
  const json jf = reparse(mst::to_json(fac));
  CHECK(jf.at("n") == 1);
  CHECK(jf.at("g_plus_inv").size() == 2);
  CHECK(jf.at("g_minus_inv").at(0).size() == 2);
}

TEST_CASE("readers reject malformed documents") {
  CHECK_THROWS_AS(mst::rational_from_json(json::parse(R"({"num": [[1,0]], "extra": 1})")), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::rational_from_json(json::parse(R"({"den": [[1,0]]})")), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::rational_from_json(json::parse(R"({"num": [[1,0]], "den": []})")), mst::DivisionByZero);
  CHECK_THROWS_AS(mst::blaschke_from_json(json::parse(R"({"zeros": [[1.5, 0]]})")), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::blaschke_from_json(json::parse(R"({"zeros": [], "const": [1, 0]})")), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::complex_from_json(json::parse("[1, 2, 3]")), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::complex_from_json(json::parse(R"(["a", 0])")), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::matrix_from_json(json::parse("[[[1,0]], [[1,0],[2,0]]]")), mst::InvalidArgument);

  try {
    mst::parse_json_text("{\n  \"zeros\": [\n    [0, 0],,\n  ]\n}");
    FAIL("expected a parse error");
  } catch (const mst::ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("CSV cells") {
  CHECK(mst::csv_cell(cplx(0.5, -0.25)) == "0.5-0.25i");
  CHECK(mst::csv_cell(cplx(1.0, 0.0)) == "1+0i");
  CHECK(mst::csv_cell(cplx(-2.0, 3.0)) == "-2+3i");
  const double third = 1.0 / 3.0;
  const std::string s = mst::csv_cell(cplx(third, 0.0));
  CHECK(std::stod(s.substr(0, s.find('+'))) == third);

  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 0.0, 5.0 / 6.0, 1.0;
  const std::string csv = mst::matrix_csv(m);
  CHECK(csv.rfind("1+0i,0+0i\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("shorthand grammar") {
  const BlaschkeProduct z3 = mst::parse_blaschke_shorthand("z^3");
  CHECK(z3.degree() == 3);
  CHECK(z3.zeros() == std::vector<cplx>(3, 0.0));
  CHECK(mst::parse_blaschke_shorthand(" z ").degree() == 1);

  const BlaschkeProduct b = mst::parse_blaschke_shorthand("blaschke(0.5, 0.3333333333)");
  REQUIRE(b.degree() == 2);
  CHECK(b.zeros()[0] == cplx(0.5));
  CHECK(std::abs(b.zeros()[1] - 1.0 / 3.0) < 1e-10);
  CHECK(mst::parse_blaschke_shorthand("blaschke(0.2+0.1i, -0.3i)").zeros()[1] == cplx(0.0, -0.3));

  const RationalFn f = mst::parse_rational_expression("(1 + 0.8333333333z)/1");
  CHECK(f.is_polynomial());
  CHECK(std::abs(f.num()[1] - 0.8333333333) < 1e-16);
  const RationalFn g = mst::parse_rational_expression("2z^-1 + 3");
  CHECK(std::abs(g(0.5) - 7.0) < 1e-14);
  const RationalFn h = mst::parse_rational_expression("(z - 1/2)(z - 1/3)(z^2 + 1)/z^2");
  CHECK(std::abs(h(cplx(0.2, 0.4)) - (cplx(0.2, 0.4) - 0.5) * (cplx(0.2, 0.4) - 1.0 / 3.0) *
                                         (cplx(0.2, 0.4) * cplx(0.2, 0.4) + 1.0) / (cplx(0.2, 0.4) * cplx(0.2, 0.4))) <
        1e-14);
  CHECK(std::abs(mst::parse_rational_expression("1-2i")(0.0) - cplx(1.0, -2.0)) == 0.0);
  CHECK(std::abs(mst::parse_rational_expression("i z")(2.0) - cplx(0.0, 2.0)) == 0.0);

  CHECK(std::holds_alternative<BlaschkeProduct>(mst::parse_shorthand("z^2")));
  CHECK(std::holds_alternative<RationalFn>(mst::parse_shorthand("z^2 + 1")));

  CHECK_THROWS_AS(mst::parse_rational_expression("1 + "), mst::ParseError);
  CHECK_THROWS_AS(mst::parse_rational_expression("(z"), mst::ParseError);
  CHECK_THROWS_AS(mst::parse_rational_expression("1/(z - z)"), mst::ParseError);
  CHECK_THROWS_AS(mst::parse_rational_expression("z^x"), mst::ParseError);
  CHECK_THROWS_AS(mst::parse_blaschke_shorthand("blaschke(0.5, 1.2)"), mst::InvalidArgument);
  CHECK_THROWS_AS(mst::parse_blaschke_shorthand("blaschke(0.5"), mst::ParseError);
  try {
    mst::parse_rational_expression("1 + $");
    FAIL("expected a parse error");
  } catch (const mst::ParseError& e) {
    CHECK(e.position() == 4);
  }
}
