#include "mst/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "mst/errors.hpp"
#include "mst/json_io.hpp"
#include "mst/shorthand.hpp"
#include "mst/verify.hpp"

namespace mst {

namespace {

struct Outcome {
  json doc;
  bool verified = true;
  std::string failure;
  /// Replaces the generic CSV rendering when set.
  std::optional<std::string> csv;
};

class Params {
 public:
  explicit Params(json values) : v_(std::move(values)) {}

  bool has(const std::string& key) const { return v_.contains(key); }

  const json& raw(const std::string& key) const {
    const auto it = v_.find(key);
    if (it == v_.end()) throw InvalidArgument("missing required input --" + key);
    return *it;
  }

  BlaschkeProduct blaschke(const std::string& key) const {
    const json& j = raw(key);
    return j.is_string() ? parse_blaschke_shorthand(j.get<std::string>()) : blaschke_from_json(j);
  }

  RationalFn rational(const std::string& key) const {
    const json& j = raw(key);
    if (j.is_string()) return parse_rational_expression(j.get<std::string>());
    if (j.is_number() || j.is_array()) return RationalFn::constant(complex_from_json(j));
    return rational_from_json(j);
  }

  cplx complex(const std::string& key) const {
    const json& j = raw(key);
    if (!j.is_string()) return complex_from_json(j);
    const RationalFn f = parse_rational_expression(j.get<std::string>());
    if (!f.is_polynomial() || f.num().degree() > 0) throw InvalidArgument("--" + key + " must be a complex constant");
    return f.num()[0];
  }

  int integer(const std::string& key) const {
    const json& j = raw(key);
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == s.size() && used > 0) return v;
    }
    throw InvalidArgument("--" + key + " must be an integer");
  }

  Eigen::MatrixXcd matrix(const std::string& key) const {
    const json& j = raw(key);
    if (j.is_object()) return operator_from_json(j).entries;
    return matrix_from_json(j);
  }

 private:
  json v_;
};

std::string input_help(const std::string& key) {
  static const std::map<std::string, std::string> text = {
      {"space", "inner function of the model space (domain)"},
      {"codomain", "inner function of the codomain model space (default: space)"},
      {"symbol", "rational symbol"},
      {"theta", "inner function theta"},
      {"alpha", "inner function alpha"},
      {"eta", "inner function eta"},
      {"gamma", "inner function gamma"},
      {"n", "dimension of K_{z^n}"},
      {"rhs", "right-hand side, a polynomial of degree < n"},
      {"w", "Crofoot parameter in the open disk"},
      {"h", "analytic contraction for the generalized transform"},
      {"k", "nonzero constant of the generalized transform"},
      {"a", "matrix A"},
      {"b", "matrix B"},
  };
  const auto it = text.find(key);
  return it == text.end() ? key : it->second;
}

struct Command {
  std::string description;
  std::vector<std::string> inputs;
  double default_tol;
  std::function<Outcome(const Params&, double)> run;
};

json matrix_doc(const Eigen::MatrixXcd& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", to_json(m)}};
}

Outcome check(json doc, const std::string& what, double residual, double tol) {
  Outcome o;
  o.doc = std::move(doc);
  o.doc["tolerance"] = tol;
  if (!(residual < tol)) {
    o.verified = false;
    std::ostringstream os;
    os << what << " residual " << residual << " exceeds tolerance " << tol;
    o.failure = os.str();
  }
  return o;
}

// ------------------------------------------------------------------ commands

Outcome cmd_tto(const Params& p, double) {
  const ModelSpace domain(p.blaschke("space"));
  const ModelSpace codomain(p.has("codomain") ? p.blaschke("codomain") : domain.inner());
  const OperatorMatrix m = tto_matrix(domain, codomain, p.rational("symbol"));
  Outcome o;
  o.doc = to_json(m);
  o.csv = matrix_csv(m.entries);
  return o;
}

Outcome cmd_equiv(const Params& p, double tol) {
  const BlaschkeProduct theta = p.blaschke("theta");
  const BlaschkeProduct alpha = p.has("alpha") ? p.blaschke("alpha") : theta;
  const BlaschkeProduct eta = p.blaschke("eta");
  const BlaschkeProduct gamma = p.has("gamma") ? p.blaschke("gamma") : eta;
  const EquivalenceResult r = equivalence_transform(theta, alpha, eta, gamma, p.rational("symbol"));
  const double rel = r.residual / (1.0 + r.a.entries.norm());
  json doc = {{"E", to_json(r.e)},
              {"F", to_json(r.f)},
              {"A", to_json(r.a)},
              {"A_tilde", to_json(r.a_tilde)},
              {"a1", to_json(r.a1)},
              {"a2", to_json(r.a2)},
              {"tilde_symbol", to_json(r.tilde_symbol)},
              {"residual", r.residual},
              {"relative_residual", rel},
              {"cond_E", r.cond_e},
              {"cond_F", r.cond_f}};
  return check(std::move(doc), "equivalence", rel, tol);
}

Outcome cmd_dual_kernel(const Params& p, double tol) {
  const DualKernel k = dual_kernel(p.blaschke("theta"), p.has("alpha") ? p.blaschke("alpha") : BlaschkeProduct());
  json basis = json::array();
  for (const auto& f : k.basis) basis.push_back(to_json(f));
  json doc = {{"dim", k.dim},
              {"k", k.k},
              {"gamma", to_json(k.gamma)},
              {"symbol", to_json(dual_kernel_symbol(p.has("alpha") ? p.blaschke("alpha") : BlaschkeProduct()))},
              {"basis", basis},
              {"max_residual", k.max_residual}};
  return check(std::move(doc), "kernel membership", k.max_residual, tol);
}

Outcome cmd_wh_inverse(const Params& p, double tol) {
  const int n = p.integer("n");
  const RationalFn phi = p.rational("symbol");
  const MatrixFactorization fac = wh_factorize(n, phi);
  const OperatorMatrix direct = invert_direct(n, phi);
  const ModelSpace kz(BlaschkeProduct::power(n));
  Eigen::MatrixXcd via(n, n);
  for (int j = 0; j < n; ++j) via.col(j) = kz.coordinates(tto_inverse_via_wh(fac, RationalFn::monomial(j)));
  const double residual = (via - direct.entries).norm() / (1.0 + direct.entries.norm());
  json doc = {{"factorization", to_json(fac)},
              {"inverse", matrix_doc(via)},
              {"direct_inverse", matrix_doc(direct.entries)},
              {"residual", residual}};
  if (p.has("rhs")) doc["solution"] = to_json(tto_inverse_via_wh(fac, p.rational("rhs")));
  Outcome o = check(std::move(doc), "Wiener-Hopf inverse", std::max(residual, fac.consistency_residual), tol);
  o.csv = matrix_csv(via);
  return o;
}

Outcome cmd_crofoot(const Params& p, double tol) {
  const ModelSpace space(p.blaschke("space"));
  const cplx w = p.complex("w");
  const CrofootResult c = crofoot_multiplier(space, w);
  std::vector<RationalFn> images;
  for (const RationalFn& e : space.basis()) images.push_back(c.j * e);
  const Eigen::MatrixXcd gram = gram_matrix(images);
  const double gram_res = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).norm();
  json doc = {{"j", to_json(c.j)}, {"target", to_json(c.target.inner())}, {"gram", matrix_doc(gram)},
              {"gram_residual", gram_res}};
  if (p.has("h")) {
    const RationalFn h = p.rational("h");
    const cplx k = p.has("k") ? p.complex("k") : cplx(std::sqrt(std::max(0.0, 1.0 - std::norm(h(0.0)))));
    doc["isometry_condition"] = check_condition_515N(space.inner(), h, k);
  }
  return check(std::move(doc), "Crofoot Gram", gram_res, tol);
}

Outcome cmd_conjugation_check(const Params& p, double tol) {
  const ModelSpace space(p.blaschke("space"));
  const ConjugationMatrix c = conjugation_matrix(space);
  const OperatorMatrix a = tto_matrix(space, space, p.rational("symbol"));
  const double rel = selfadjoint_residual(a, c) / (1.0 + a.entries.norm());
  json doc = {{"J", matrix_doc(c.j)},
              {"A", to_json(a)},
              {"unitarity_defect", conjugation_unitarity_defect(c)},
              {"selfadjoint_residual", rel},
              {"complex_selfadjoint", rel < tol}};
  return check(std::move(doc), "complex selfadjointness", rel, tol);
}

Outcome cmd_rank_equiv(const Params& p, double tol) {
  const Eigen::MatrixXcd a = p.matrix("a");
  const Eigen::MatrixXcd b = p.matrix("b");
  const auto r = rank_equivalence(a, b);
  json doc = {{"rank_a", numerical_rank(a)}, {"rank_b", numerical_rank(b)}, {"equivalent", r.has_value()}};
  if (!r) {
    Outcome o;
    o.doc = std::move(doc);
    return o;
  }
  const double rel = r->residual / (1.0 + a.norm());
  doc["E"] = matrix_doc(r->e);
  doc["F"] = matrix_doc(r->f);
  doc["residual"] = r->residual;
  doc["cond_E"] = r->cond_e;
  doc["cond_F"] = r->cond_f;
  return check(std::move(doc), "rank equivalence", rel, tol);
}

Outcome cmd_verify(const Params& p, std::optional<double> tol) {
  const std::string name = p.raw("suite").is_string() ? p.raw("suite").get<std::string>() : "";
  std::vector<std::string> names;
  if (name == "all") {
    names = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == name;
    if (!known) throw InvalidArgument("unknown suite \"" + name + "\" (rational, blaschke, model, operators, dual, wh, all)");
    names = {name};
  }
  Outcome o;
  json suites = json::array();
  std::string csv = "suite,check,residual,tolerance,passed\n";
  double worst = 0.0;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, tol);
    json checks = json::array();
    for (const auto& c : r.checks) {
      json jc = {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}};
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
      std::ostringstream row;
      row << n << ",\"" << c.name << "\"," << c.residual << ',' << c.tolerance << ',' << (c.passed ? "true" : "false");
      csv += row.str() + '\n';
      if (!c.passed) o.failure += (o.failure.empty() ? "" : "; ") + n + ": " + c.name;
    }
    suites.push_back({{"suite", n}, {"passed", r.passed}, {"max_residual", r.max_residual}, {"checks", checks}});
    worst = std::max(worst, r.max_residual);
    o.verified = o.verified && r.passed;
  }
  o.doc = {{"suites", suites}, {"passed", o.verified}, {"max_residual", worst}};
  if (!o.verified) o.failure = "failed checks: " + o.failure;
  o.csv = csv;
  return o;
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> c = {
      {"tto", {"Matrix of A^{space,codomain}_symbol", {"space", "codomain", "symbol"}, 0.0, cmd_tto}},
      {"equiv",
       {"Equivalence A^{theta,alpha}_phi = E A^{eta,gamma}_{phi~} F", {"theta", "alpha", "eta", "gamma", "symbol"}, 1e-9,
        cmd_equiv}},
      {"dual-kernel", {"Kernel of the dual operator with symbol alpha (z - 1)", {"theta", "alpha"}, 1e-9, cmd_dual_kernel}},
      {"wh-inverse", {"Inverse of A^{z^n}_phi by Wiener-Hopf factorization", {"n", "symbol", "rhs"}, 1e-8, cmd_wh_inverse}},
      {"crofoot", {"Crofoot transform of K_space by w", {"space", "w", "h", "k"}, 1e-9, cmd_crofoot}},
      {"conjugation-check",
       {"Complex selfadjointness of A^space_symbol for C_space", {"space", "symbol"}, 1e-9, cmd_conjugation_check}},
      {"rank-equiv", {"E, F with A = E B F for equal-rank matrices", {"a", "b"}, 1e-8, cmd_rank_equiv}},
  };
  return c;
}

json option_value(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return parse_json_text(text);
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<double> parse_tol(const std::string& text, const char* source) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0)) throw InvalidArgument(std::string(source) + " must be a positive number");
  return v;
}

std::string csv_scalar(const json& v) {
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return csv_cell({v[0].get<double>(), v[1].get<double>()});
  if (v.is_string()) return v.get<std::string>();
  if (v.is_primitive()) return v.dump();
  std::string s = v.dump();
  std::string quoted = "\"";
  for (const char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string generic_csv(const json& doc) {
  std::string out = "field,value\n";
  for (const auto& [key, v] : doc.items()) out += key + "," + csv_scalar(v) + "\n";
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated Toeplitz operator toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", "mst 1.0");

  std::map<std::string, std::string> values;
  std::string format = "json", out_path, tol_text, input_path, suite;
  std::map<std::string, CLI::App*> subs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
    sub->add_option("--tol", tol_text, "tolerance for the verification residual (overrides MST_TOL)");
    sub->add_option("--input", input_path, "JSON problem file whose keys name the inputs");
  };
  for (const auto& [name, cmd] : commands()) {
    CLI::App* sub = app.add_subcommand(name, cmd.description);
    for (const auto& key : cmd.inputs) sub->add_option("--" + key, values[name + "." + key], input_help(key));
    add_common(sub);
    subs[name] = sub;
  }
  CLI::App* verify = app.add_subcommand("verify", "Run a module invariant suite");
  verify->add_option("--suite", suite, "rational, blaschke, model, operators, dual, wh or all")->required();
  add_common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    std::optional<double> tol;
    if (!tol_text.empty()) {
      tol = parse_tol(tol_text, "--tol");
    } else if (const char* env = std::getenv("MST_TOL"); env && *env) {
      tol = parse_tol(env, "MST_TOL");
    }

    Outcome outcome;
    if (verify->parsed()) {
      outcome = cmd_verify(Params(json{{"suite", suite}}), tol);
    } else {
      std::string name;
      for (const auto& [n, sub] : subs)
        if (sub->parsed()) name = n;
      const Command& cmd = commands().at(name);
      json params = json::object();
      if (!input_path.empty()) {
        const json file = parse_json_text(read_file(input_path));
        if (!file.is_object()) throw InvalidArgument("problem file must hold a JSON object");
        for (const auto& [key, v] : file.items()) {
          if (std::find(cmd.inputs.begin(), cmd.inputs.end(), key) == cmd.inputs.end())
            throw InvalidArgument("unknown field \"" + key + "\" in problem file for " + name);
          params[key] = v;
        }
      }
      for (const auto& key : cmd.inputs) {
        const std::string& text = values[name + "." + key];
        if (!text.empty()) params[key] = option_value(text);
      }
      outcome = cmd.run(Params(params), tol.value_or(cmd.default_tol));
    }

    const std::string text = format == "csv" ? outcome.csv.value_or(generic_csv(outcome.doc)) : outcome.doc.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw InvalidArgument("cannot write " + out_path);
      f << text;
    }
    if (!outcome.verified) {
      err << "verification failed: " << outcome.failure << "\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const FormulaMismatch& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const FactorizationUndetermined& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace mst
