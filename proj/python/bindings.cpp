#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mst/cli.hpp"
#include "mst/errors.hpp"
#include "mst/json_io.hpp"
#include "mst/shorthand.hpp"
#include "mst/verify.hpp"

namespace py = pybind11;
using namespace mst;

namespace {

std::vector<cplx> coeffs(const ComplexPoly& p) { return p.coeffs(); }

py::dict equivalence_dict(const EquivalenceResult& r) {
  py::dict d;
  d["E"] = r.e.entries;
  d["F"] = r.f.entries;
  d["A"] = r.a.entries;
  d["A_tilde"] = r.a_tilde.entries;
  d["a1"] = r.a1;
  d["a2"] = r.a2;
  d["tilde_symbol"] = r.tilde_symbol;
  d["residual"] = r.residual;
  d["cond_E"] = r.cond_e;
  d["cond_F"] = r.cond_f;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated Toeplitz operators on model spaces of finite Blaschke products";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NoMultiplier>(m, "NoMultiplier", base.ptr());
  py::register_exception<FormulaMismatch>(m, "FormulaMismatch", base.ptr());
  py::register_exception<NoCanonicalFactorization>(m, "NoCanonicalFactorization", base.ptr());
  py::register_exception<SingularOperator>(m, "SingularOperator", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<RationalFn>(m, "RationalFn")
      .def(py::init<>())
      .def(py::init([](const std::vector<cplx>& num, const std::vector<cplx>& den) {
             return RationalFn(ComplexPoly(num), ComplexPoly(den));
           }),
           py::arg("num"), py::arg("den") = std::vector<cplx>{1.0})
      .def_static("constant", &RationalFn::constant)
      .def_static("monomial", &RationalFn::monomial, py::arg("k"), py::arg("c") = cplx(1.0))
      .def_static("parse", &parse_rational_expression)
      .def_property_readonly("num", [](const RationalFn& f) { return coeffs(f.num()); })
      .def_property_readonly("den", [](const RationalFn& f) { return coeffs(f.den()); })
      .def_property_readonly("poles", &RationalFn::poles)
      .def("__call__", &RationalFn::operator())
      .def("conj", &RationalFn::conj)
      .def("inverse", &RationalFn::inverse)
      .def("fourier", &fourier_coefficient)
      .def("riesz", [](const RationalFn& f) {
        const FourierSplit s = riesz_project(f);
        return py::make_tuple(s.analytic, s.antianalytic);
      })
      .def("__add__", [](const RationalFn& a, const RationalFn& b) { return a + b; })
      .def("__sub__", [](const RationalFn& a, const RationalFn& b) { return a - b; })
      .def("__mul__", [](const RationalFn& a, const RationalFn& b) { return a * b; })
      .def("__truediv__", [](const RationalFn& a, const RationalFn& b) { return a / b; })
      .def("__mul__", [](const RationalFn& a, cplx s) { return a * s; })
      .def("__rmul__", [](const RationalFn& a, cplx s) { return a * s; })
      .def("__neg__", [](const RationalFn& a) { return -a; })
      .def("to_json", [](const RationalFn& f) { return to_json(f).dump(); })
      .def("__repr__", [](const RationalFn& f) { return "RationalFn(" + to_json(f).dump() + ")"; });

  m.def("inner_product", &inner_product);
  m.def("l2_norm", &l2_norm);

  py::class_<BlaschkeProduct>(m, "BlaschkeProduct")
      .def(py::init<std::vector<cplx>, cplx>(), py::arg("zeros") = std::vector<cplx>{}, py::arg("constant") = cplx(1.0))
      .def_static("power", &BlaschkeProduct::power)
      .def_static("parse", &parse_blaschke_shorthand)
      .def_property_readonly("zeros", &BlaschkeProduct::zeros)
      .def_property_readonly("constant", &BlaschkeProduct::constant)
      .def_property_readonly("degree", &BlaschkeProduct::degree)
      .def("__call__", &BlaschkeProduct::operator())
      .def("to_rational", [](const BlaschkeProduct& b) { return to_rational(b); })
      .def("__repr__", [](const BlaschkeProduct& b) { return "BlaschkeProduct(" + to_json(b).dump() + ")"; });

  m.def("frostman_shift", &frostman_shift);

  py::class_<ModelSpace>(m, "ModelSpace")
      .def(py::init<BlaschkeProduct>())
      .def_property_readonly("inner", &ModelSpace::inner)
      .def_property_readonly("basis", &ModelSpace::basis)
      .def_property_readonly("dim", &ModelSpace::dim)
      .def("coordinates", &ModelSpace::coordinates)
      .def("project", [](const ModelSpace& k, const RationalFn& f) { return project(k, f); })
      .def("contains", [](const ModelSpace& k, const RationalFn& f) { return contains(k, f); });

  m.def("multiplier_between", &multiplier_between);
  m.def("reproducing_kernels", [](const ModelSpace& k, cplx lambda) {
    const KernelPair p = reproducing_kernels(k, lambda);
    return py::make_tuple(p.k, p.k_tilde);
  });
  m.def("crofoot_multiplier", [](const ModelSpace& k, cplx w) {
    const CrofootResult r = crofoot_multiplier(k, w);
    return py::make_tuple(r.j, r.target);
  });

  m.def("tto_matrix", [](const ModelSpace& d, const ModelSpace& c, const RationalFn& s) { return tto_matrix(d, c, s).entries; });
  m.def("multiplication_matrix",
        [](const ModelSpace& d, const ModelSpace& c, const RationalFn& a) { return multiplication_matrix(d, c, a).entries; });
  m.def("is_zero_symbol", &is_zero_symbol);
  m.def("conjugation_matrix", [](const ModelSpace& k) { return conjugation_matrix(k).j; });
  m.def("equivalence_transform", [](const BlaschkeProduct& theta, const BlaschkeProduct& alpha,
                                    const BlaschkeProduct& eta, const BlaschkeProduct& gamma,
                                    const RationalFn& symbol) {
    return equivalence_dict(equivalence_transform(theta, alpha, eta, gamma, symbol));
  });
  m.def("rank_equivalence", [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) -> py::object {
    const auto r = rank_equivalence(a, b);
    if (!r) return py::none();
    return py::make_tuple(r->e, r->f, r->residual);
  });
  m.def("numerical_rank", [](const Eigen::MatrixXcd& a) { return numerical_rank(a); });

  m.def("dual_kernel", [](const BlaschkeProduct& theta, const BlaschkeProduct& alpha) {
    const DualKernel k = dual_kernel(theta, alpha);
    std::vector<RationalFn> basis;
    for (const auto& f : k.basis) basis.push_back(f.value());
    py::dict d;
    d["dim"] = k.dim;
    d["k"] = k.k;
    d["gamma"] = k.gamma;
    d["basis"] = basis;
    d["max_residual"] = k.max_residual;
    return d;
  });
  m.def("hankel_rank", &hankel_rank);

  m.def("wh_inverse", [](int n, const RationalFn& phi) {
    const MatrixFactorization fac = wh_factorize(n, phi);
    const ModelSpace kz(BlaschkeProduct::power(n));
    Eigen::MatrixXcd inv(n, n);
    for (int j = 0; j < n; ++j) inv.col(j) = kz.coordinates(tto_inverse_via_wh(fac, RationalFn::monomial(j)));
    return inv;
  });
  m.def("invert_direct", [](int n, const RationalFn& phi) { return invert_direct(n, phi).entries; });

  m.def("run_suite", [](const std::string& name) {
    const SuiteReport r = run_suite(name);
    py::dict d;
    d["passed"] = r.passed;
    d["max_residual"] = r.max_residual;
    py::list checks;
    for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.residual, c.tolerance, c.passed));
    d["checks"] = checks;
    return d;
  });

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the mst command line; returns (exit_code, stdout, stderr).");
}
