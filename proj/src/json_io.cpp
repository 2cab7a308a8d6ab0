#include "mst/json_io.hpp"

#include <charconv>
#include <initializer_list>
#include <sstream>

#include "mst/errors.hpp"

namespace mst {

namespace {

void require_object(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw InvalidArgument(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InvalidArgument(std::string("unknown field \"") + key + "\" in " + what);
  }
}

const json& field(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

json to_json(cplx c) {
  // Adding 0.0 turns -0.0 into 0.0 and leaves every other value unchanged.
  return json::array({c.real() + 0.0, c.imag() + 0.0});
}

json to_json(const ComplexPoly& p) {
  json a = json::array();
  for (const cplx c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const RationalFn& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const BlaschkeProduct& b) {
  json zeros = json::array();
  for (const cplx a : b.zeros()) zeros.push_back(to_json(a));
  return {{"zeros", zeros}, {"constant", to_json(b.constant())}};
}

json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const OperatorMatrix& m) {
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", to_json(m.entries)},
          {"domain", to_json(m.domain)},
          {"codomain", to_json(m.codomain)}};
}

json to_json(const ComplementElement& f) {
  return {{"theta", to_json(f.theta)}, {"analytic", to_json(f.analytic)}, {"antianalytic", to_json(f.antianalytic)}};
}

json to_json(const MatrixFactorization& f) {
  json plus = json::array(), minus = json::array();
  for (int i = 0; i < 2; ++i) {
    json prow = json::array(), mrow = json::array();
    for (int j = 0; j < 2; ++j) {
      prow.push_back(to_json(f.g_plus_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      mrow.push_back(to_json(f.g_minus_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    plus.push_back(prow);
    minus.push_back(mrow);
  }
  return {{"n", f.n},
          {"phi", to_json(f.phi)},
          {"g_plus_inv", plus},
          {"g_minus_inv", minus},
          {"degree_bound", f.degree_bound},
          {"solve_residual", f.solve_residual},
          {"consistency_residual", f.consistency_residual}};
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidArgument("complex number must be [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be an array of [re, im] pairs");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(complex_from_json(x));
  return ComplexPoly(std::move(c));
}

RationalFn rational_from_json(const json& j) {
  require_object(j, {"num", "den"}, "rational function");
  const ComplexPoly num = poly_from_json(field(j, "num", "rational function"));
  const auto it = j.find("den");
  const ComplexPoly den = it == j.end() ? ComplexPoly::constant(1.0) : poly_from_json(*it);
  if (den.is_zero()) throw DivisionByZero("rational function has a zero denominator");
  return RationalFn(num, den);
}

BlaschkeProduct blaschke_from_json(const json& j) {
  require_object(j, {"zeros", "constant"}, "Blaschke product");
  const json& z = field(j, "zeros", "Blaschke product");
  if (!z.is_array()) throw InvalidArgument("\"zeros\" must be an array");
  std::vector<cplx> zeros;
  for (const auto& x : z) zeros.push_back(complex_from_json(x));
  const auto it = j.find("constant");
  return BlaschkeProduct(std::move(zeros), it == j.end() ? cplx(1.0) : complex_from_json(*it));
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidArgument("matrix rows must all have the same length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

OperatorMatrix operator_from_json(const json& j) {
  require_object(j, {"rows", "cols", "entries", "domain", "codomain"}, "operator matrix");
  OperatorMatrix m;
  m.entries = matrix_from_json(field(j, "entries", "operator matrix"));
  if (j.contains("rows") && j["rows"].get<Eigen::Index>() != m.rows()) throw InvalidArgument("\"rows\" disagrees with entries");
  if (j.contains("cols") && j["cols"].get<Eigen::Index>() != m.cols()) throw InvalidArgument("\"cols\" disagrees with entries");
  if (j.contains("domain")) m.domain = blaschke_from_json(j["domain"]);
  if (j.contains("codomain")) m.codomain = blaschke_from_json(j["codomain"]);
  return m;
}

ComplementElement complement_from_json(const json& j) {
  require_object(j, {"theta", "analytic", "antianalytic"}, "complement element");
  ComplementElement f;
  f.theta = blaschke_from_json(field(j, "theta", "complement element"));
  if (j.contains("analytic")) f.analytic = rational_from_json(j["analytic"]);
  if (j.contains("antianalytic")) f.antianalytic = rational_from_json(j["antianalytic"]);
  validate(f);
  return f;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "malformed JSON at line " << line << ", column " << col << ": " << e.what();
    throw ParseError(os.str(), e.byte);
  }
}

std::string csv_cell(cplx c) {
  std::string out = shortest(c.real());
  const double im = c.imag();
  if (std::signbit(im)) {
    out += "-" + shortest(-im);
  } else {
    out += "+" + shortest(im);
  }
  return out + "i";
}

std::string matrix_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += csv_cell(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace mst
