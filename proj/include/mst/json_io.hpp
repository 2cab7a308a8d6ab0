#pragma once

#include <json.hpp>
#include <string>

#include "mst/dual.hpp"
#include "mst/wiener_hopf.hpp"

namespace mst {

using json = nlohmann::json;

// Complex numbers are [re, im]; polynomials are arrays of them in ascending
// degree. Readers reject unknown object keys.

json to_json(cplx c);
json to_json(const ComplexPoly& p);
json to_json(const RationalFn& f);
json to_json(const BlaschkeProduct& b);
json to_json(const Eigen::MatrixXcd& m);
json to_json(const OperatorMatrix& m);
json to_json(const ComplementElement& f);
json to_json(const MatrixFactorization& f);

cplx complex_from_json(const json& j);
ComplexPoly poly_from_json(const json& j);
RationalFn rational_from_json(const json& j);
BlaschkeProduct blaschke_from_json(const json& j);
Eigen::MatrixXcd matrix_from_json(const json& j);
OperatorMatrix operator_from_json(const json& j);
ComplementElement complement_from_json(const json& j);

/// Parses text, turning syntax errors into ParseError with a line:column message.
json parse_json_text(const std::string& text);

/// "re+im i" with round-trip precision, e.g. "0.5-0.25i".
std::string csv_cell(cplx c);
/// Matrix as CSV, one row per line.
std::string matrix_csv(const Eigen::MatrixXcd& m);

}  // namespace mst
