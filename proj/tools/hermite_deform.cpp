// hermite-deform: command line front end for the complex Hermite library.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hdef/hdef.hpp"
#include "hdef/io/json.hpp"
#include "hdef/io/verify.hpp"

using namespace hdef;
using hdef::io::Json;

namespace {

struct Options {
  std::string format = "pretty";
  std::string backend = "exact";
  bool use_float = false;
  bool seed_manifest = false;

  std::vector<std::string> g;
  std::string alpha, theta, gamma;
  int max_level = -1;
  unsigned order = 4;
  unsigned m = 0, n = 0, level = 0;
  std::string route = "sum";
  std::string suite;
  std::string basis;
  bool real = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <Scalar C>
C parse_scalar(const std::string& text) {
  if constexpr (is_exact_v<C>) {
    return parse_complex(text);
  } else {
    try {
      return to_complex(parse_complex(text));
    } catch (const std::exception&) {
      std::size_t used = 0;
      double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("cannot parse '" + text + "' as a number");
      return C(v, 0.0);
    }
  }
}

std::string csv_number(const Rational& r) { return to_fraction_string(r); }
std::string csv_number(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}
template <Scalar C>
std::pair<std::string, std::string> csv_parts(const C& c) {
  if constexpr (is_exact_v<C>)
    return {csv_number(c.re), csv_number(c.im)};
  else
    return {csv_number(c.real()), csv_number(c.imag())};
}

template <class P>
void csv_poly(std::ostream& os, const P& p, const std::string& prefix = {}) {
  using V = typename P::variables;
  for (const auto& [e, c] : p.terms()) {
    auto [re, im] = csv_parts(c);
    os << prefix << e.first << ',' << e.second << ',' << re << ',' << im << '\n';
  }
}
template <class P>
std::string csv_header() {
  using V = typename P::variables;
  return std::string(V::first_key) + "," + V::second_key + ",re,im";
}

template <Scalar C>
std::optional<GL2<C>> group_element(const Options& o) {
  if (!o.g.empty() && !o.alpha.empty()) throw UsageError("--g and --alpha are mutually exclusive");
  if (!o.g.empty()) {
    if (o.g.size() != 4) throw UsageError("--g takes four entries g11 g12 g21 g22");
    return GL2<C>(parse_scalar<C>(o.g[0]), parse_scalar<C>(o.g[1]), parse_scalar<C>(o.g[2]), parse_scalar<C>(o.g[3]));
  }
  if (!o.alpha.empty()) return alpha_matrix(AlphaPoint<C>::from(parse_scalar<C>(o.alpha)));
  return std::nullopt;
}

template <Scalar C>
GL2<C> require_group_element(const Options& o) {
  auto g = group_element<C>(o);
  if (!g) throw UsageError("this command needs --g g11 g12 g21 g22 or --alpha p/q");
  return *g;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

template <class P>
int print_poly(const Options& o, const P& p, const Rational& norm_squared, const std::string& label,
               const std::string& norm_label) {
  if (o.format == "json") {
    emit(Json{{"poly", io::encode(p)}, {"norm_squared", norm_label.empty() ? to_fraction_string(norm_squared) : norm_label}});
  } else if (o.format == "csv") {
    std::cout << csv_header<P>() << '\n';
    csv_poly(std::cout, p);
  } else {
    std::cout << label << " = " << p.pretty() << '\n';
  }
  return 0;
}

template <Scalar C>
int cmd_hermite(const Options& o) {
  Normalized<C> h;
  if (o.route == "sum")
    h = complex_hermite_sum<C>(o.m, o.n);
  else if (o.route == "rodrigues")
    h = complex_hermite_rodrigues<C>(o.m, o.n);
  else
    h = complex_hermite_operator<C>(o.m, o.n);
  return print_poly(o, h.scaled, h.norm_squared, "H_{" + std::to_string(o.m) + "," + std::to_string(o.n) + "}", "");
}

template <Scalar C>
int cmd_real_hermite(const Options& o) {
  auto h = real_hermite<C>(o.n);
  const Rational norm = Rational(mpz_class(1) << o.n) * factorial(o.n);
  return print_poly(o, h, norm, "H_" + std::to_string(o.n), to_fraction_string(norm) + " sqrt(pi)");
}

template <Scalar C>
int cmd_deform(const Options& o) {
  auto h = deformed_hermite(require_group_element<C>(o), o.m, o.n);
  return print_poly(o, h.scaled, h.norm_squared, "H^g_{" + std::to_string(o.m) + "," + std::to_string(o.n) + "}", "");
}

template <Scalar C>
void print_matrix(const Matrix<C>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? "\t" : "") << to_string(m(r, c));
    std::cout << '\n';
  }
}

template <Scalar C>
int cmd_repmat(const Options& o) {
  auto rep = rep_matrix(require_group_element<C>(o), o.level);
  if (o.format == "json") {
    emit(io::encode(rep));
  } else if (o.format == "csv") {
    std::cout << "row,col,re,im\n";
    for (std::size_t r = 0; r < rep.entries.rows(); ++r)
      for (std::size_t c = 0; c < rep.entries.cols(); ++c) {
        auto [re, im] = csv_parts(rep.entries(r, c));
        std::cout << r << ',' << c << ',' << re << ',' << im << '\n';
      }
  } else {
    print_matrix(rep.entries);
  }
  return 0;
}

template <Scalar C>
int cmd_dual(const Options& o) {
  auto d = dual_family(require_group_element<C>(o), o.level);
  if (o.format == "json") {
    Json family = Json::array();
    for (const auto& h : d.family) family.push_back(io::encode(h.scaled));
    emit(Json{{"L", o.level},
              {"dual_matrix", io::encode(d.dual_matrix)},
              {"family", std::move(family)},
              {"routes_agree", d.routes_agree}});
  } else if (o.format == "csv") {
    std::cout << "k," << csv_header<BiPoly<C>>() << '\n';
    for (std::size_t k = 0; k < d.family.size(); ++k) csv_poly(std::cout, d.family[k].scaled, std::to_string(k) + ",");
  } else {
    std::cout << "dual matrix (g*)^-1:\n";
    print_matrix(d.dual_matrix.matrix());
    for (std::size_t k = 0; k < d.family.size(); ++k)
      std::cout << "H'_{" << k << "," << o.level - k << "} = " << d.family[k].scaled.pretty() << '\n';
    std::cout << "routes agree: " << (d.routes_agree ? "yes" : "no") << '\n';
  }
  return d.routes_agree ? 0 : 1;
}

template <class P>
int print_series(const Options& o, const SeriesTruncation<P>& s, const std::string& kind) {
  if (o.format == "json") {
    Json coeffs = Json::array();
    for (const auto& [e, p] : s.coefficients())
      coeffs.push_back(Json{{"k", e.first}, {"l", e.second}, {"poly", io::encode(scaled_coefficient(s, e.first, e.second))}});
    emit(Json{{"kind", kind}, {"order", s.order()}, {"coefficients", std::move(coeffs)}});
  } else if (o.format == "csv") {
    std::cout << "k,l," << csv_header<P>() << '\n';
    for (const auto& [e, p] : s.coefficients())
      csv_poly(std::cout, scaled_coefficient(s, e.first, e.second), std::to_string(e.first) + "," + std::to_string(e.second) + ",");
  } else {
    for (const auto& [e, p] : s.coefficients())
      std::cout << "[" << e.first << "," << e.second << "] " << scaled_coefficient(s, e.first, e.second).pretty() << '\n';
  }
  return 0;
}

template <Scalar C>
int cmd_genfun(const Options& o) {
  auto g = group_element<C>(o);
  if (o.real) {
    if (g) throw UsageError("--real does not take a deformation");
    return print_series(o, generating_series_real<C>(o.order), "real");
  }
  if (g) return print_series(o, deformed_generating_series(*g, o.order), "deformed");
  return print_series(o, generating_series_complex<C>(o.order), "complex");
}

template <Scalar C>
io::SuiteParams<C> suite_params(const Options& o) {
  io::SuiteParams<C> p;
  if (!o.g.empty()) p.g = group_element<C>(o);
  if (!o.alpha.empty()) p.alpha = parse_scalar<C>(o.alpha);
  if (!o.theta.empty()) p.theta = parse_scalar<C>(o.theta);
  if (!o.gamma.empty()) p.gamma = parse_scalar<C>(o.gamma);
  if (o.max_level >= 0) p.max_level = static_cast<unsigned>(o.max_level);
  return p;
}

void print_checks(const Json& report) {
  if (report.contains("checks"))
    for (const auto& c : report["checks"]) {
      std::cout << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>();
      if (c.contains("expected") && !c["pass"].get<bool>())
        std::cout << " (expected " << c["expected"].get<std::string>() << ", got " << c["actual"].get<std::string>() << ")";
      std::cout << '\n';
    }
  if (report.contains("violations"))
    for (const auto& v : report["violations"]) std::cout << "[FAIL] " << v.dump() << '\n';
  if (report.contains("failures"))
    for (const auto& v : report["failures"]) std::cout << "[FAIL] " << v.get<std::string>() << '\n';
  if (report.contains("class")) std::cout << "class: " << report["class"].get<std::string>() << '\n';
}

template <Scalar C>
int cmd_verify(const Options& o) {
  if (o.format == "csv") throw UsageError("csv output is only available for coefficient tables");
  auto result = io::run_suite(o.suite, suite_params<C>(o));
  if (o.format == "json") {
    emit(result.payload);
  } else {
    print_checks(result.payload);
    std::cout << o.suite << ": " << (result.pass ? "pass" : "fail") << '\n';
  }
  return result.pass ? 0 : 1;
}

template <Scalar C>
int cmd_lie_report(const Options& o) {
  if (o.format == "csv") throw UsageError("csv output is only available for coefficient tables");
  auto run = io::lie_run(suite_params<C>(o));
  const bool boundary = run.tables.size() == 2;
  std::string basis = o.basis.empty() ? (boundary ? "X" : "Z") : o.basis;
  std::size_t index = basis == "J" ? 0 : basis == "X" ? 1 : 2;
  if (index >= run.tables.size()) throw std::domain_error("rescaling singular at theta = 1");
  const auto& [sc, cls] = run.tables[index];
  if (o.format == "json") {
    emit(io::encode(sc, cls.kind));
  } else {
    for (const auto& b : sc.brackets) {
      std::ostringstream rhs;
      bool first = true;
      for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
        if (negligible(b.coeffs[k], 1e-12)) continue;
        const std::string c = to_string(b.coeffs[k]);
        rhs << (first ? "" : " + ") << (c == "1" ? "" : c == "-1" ? "-" : "(" + c + ") ") << sc.names[k];
        first = false;
      }
      std::cout << "[" << sc.names[b.i] << ", " << sc.names[b.j] << "] = " << (first ? "0" : rhs.str()) << '\n';
    }
    std::cout << "class: " << to_string(cls.kind) << '\n';
  }
  return run.report.passed() ? 0 : 1;
}

template <Scalar C>
int seed_manifest(const Options& o) {
  Json suites = Json::object();
  bool all = true;
  auto params = suite_params<C>(o);
  for (const auto& name : io::suite_names()) {
    auto r = io::run_suite(name, params);
    all = all && r.pass;
    suites[name] = std::move(r.payload);
  }
  // theta = 1 runs on the float backend regardless of the selected one
  io::SuiteParams<FloatComplex> boundary;
  boundary.theta = FloatComplex(1.0, 0.0);
  auto b = io::run_suite("lie", boundary);
  all = all && b.pass;
  suites["lie_theta_1"] = std::move(b.payload);
  emit(Json{{"backend", is_exact_v<C> ? "exact" : "float"}, {"status", all ? "pass" : "fail"}, {"suites", std::move(suites)}});
  return all ? 0 : 1;
}

template <Scalar C>
int dispatch(const CLI::App& app, const Options& o) {
  if (o.seed_manifest) return seed_manifest<C>(o);
  if (app.got_subcommand("hermite")) return cmd_hermite<C>(o);
  if (app.got_subcommand("real-hermite")) return cmd_real_hermite<C>(o);
  if (app.got_subcommand("deform")) return cmd_deform<C>(o);
  if (app.got_subcommand("repmat")) return cmd_repmat<C>(o);
  if (app.got_subcommand("dual")) return cmd_dual<C>(o);
  if (app.got_subcommand("genfun")) return cmd_genfun<C>(o);
  if (app.got_subcommand("verify")) return cmd_verify<C>(o);
  if (app.got_subcommand("lie-report")) return cmd_lie_report<C>(o);
  throw UsageError("a subcommand or --seed-manifest is required");
}

void add_group(CLI::App* sub, Options& o) {
  sub->add_option("--g", o.g, "group element entries g11 g12 g21 g22")->expected(4)->allow_extra_args(false);
  sub->add_option("--alpha", o.alpha, "NCQM deformation parameter, e.g. 3/5");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Complex Hermite polynomials and their GL(2,C) deformations"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--backend", o.backend, "coefficient field")->check(CLI::IsMember({"exact", "float"}));
  app.add_flag("--float", o.use_float, "shorthand for --backend float");
  app.add_flag("--seed-manifest", o.seed_manifest, "run the full verification battery and print one JSON document");
  app.add_option("--Lmax", o.max_level, "highest level checked")->check(CLI::NonNegativeNumber);
  app.add_option("--theta", o.theta, "deformation parameter theta");
  app.add_option("--gamma", o.gamma, "Q/P parameter gamma");
  add_group(&app, o);

  auto* hermite = app.add_subcommand("hermite", "complex Hermite polynomial H_{m,n}(z, z~)");
  hermite->add_option("m", o.m)->required();
  hermite->add_option("n", o.n)->required();
  hermite->add_option("--route", o.route, "construction route")->check(CLI::IsMember({"sum", "rodrigues", "operator"}));

  auto* real = app.add_subcommand("real-hermite", "physicists' Hermite polynomial H_n(x)");
  real->add_option("n", o.n)->required();

  auto* deform = app.add_subcommand("deform", "deformed polynomial H^g_{m,n}");
  deform->add_option("m", o.m)->required();
  deform->add_option("n", o.n)->required();

  auto* repmat = app.add_subcommand("repmat", "level-L representation matrix M(g,L)");
  repmat->add_option("L", o.level)->required();

  auto* dual = app.add_subcommand("dual", "dual family for (g*)^-1 at level L");
  dual->add_option("L", o.level)->required();

  auto* genfun = app.add_subcommand("genfun", "generating function coefficients up to --order");
  genfun->add_option("--order", o.order, "truncation order");
  genfun->add_flag("--real", o.real, "real Hermite generating function");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(io::suite_names()));

  auto* lie = app.add_subcommand("lie-report", "structure constants and classification");
  lie->add_option("--basis", o.basis, "J, X or Z")->check(CLI::IsMember({"J", "X", "Z"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (o.use_float) o.backend = "float";

  try {
    return o.backend == "float" ? dispatch<FloatComplex>(app, o) : dispatch<ExactComplex>(app, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
