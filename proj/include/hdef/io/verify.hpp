#pragma once

// Named verification suites with JSON payloads, shared by the CLI and the
// seed manifest.

#include <optional>
#include <string>
#include <vector>

#include "hdef/hdef.hpp"
#include "hdef/io/json.hpp"

namespace hdef::io {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthonormal", "biorth", "repmat", "eigen", "intertwine",
                                              "ncqm",        "lie",    "qp",     "dualscale"};
  return names;
}

template <Scalar C>
struct SuiteParams {
  std::optional<GL2<C>> g;
  std::optional<C> alpha;
  std::optional<C> theta;
  std::optional<C> gamma;
  std::optional<unsigned> max_level;
};

struct VerifyResult {
  bool pass = false;
  Json payload;
};

namespace detail {

template <Scalar C>
C default_alpha() {
  return from_rational<C>(Rational(3, 5));
}

template <Scalar C>
GL2<C> matrix_or_alpha(const SuiteParams<C>& p) {
  if (p.g) return *p.g;
  return alpha_matrix(AlphaPoint<C>::from(p.alpha.value_or(default_alpha<C>())));
}

inline VerifyResult from_suite(const SuiteReport& r) { return {r.passed(), encode(r)}; }

template <Scalar C>
VerifyResult orthonormal(const SuiteParams<C>& p) {
  const unsigned lmax = p.max_level.value_or(6);
  SuiteReport rep;
  rep.suite = "orthonormal";
  HermiteTable<C> table(lmax);
  const auto entries = table.ordered();
  for (const auto& [mn, h] : entries) {
    bool ok = true;
    for (const auto& [kl, q] : entries) {
      C expected = mn == kl ? from_rational<C>(h->norm_squared) : C{};
      ok = ok && near(inner_product(h->scaled, q->scaled), expected);
    }
    rep.add("<H_{" + std::to_string(mn.first) + "," + std::to_string(mn.second) + "}, H_{k,l}> = m! n! delta", ok);
  }
  for (unsigned n = 0; n <= lmax; ++n) {
    bool ok = true;
    for (unsigned m = 0; m <= lmax; ++m) {
      auto v = real_inner_product(real_hermite<C>(m), real_hermite<C>(n));
      C expected = m == n ? from_rational<C>(Rational(mpz_class(1) << n) * factorial(n)) : C{};
      ok = ok && near(v.rational_part, expected) && v.sqrt_pi_power == 1;
    }
    rep.add("<H_m, H_" + std::to_string(n) + "> = sqrt(pi) 2^n n! delta", ok);
  }
  return from_suite(rep);
}

template <Scalar C>
VerifyResult biorth(const SuiteParams<C>& p) {
  auto rep = biorthogonality_check(matrix_or_alpha(p), p.max_level.value_or(4));
  return {rep.pass(), encode(rep)};
}

template <Scalar C>
VerifyResult repmat(const SuiteParams<C>& p) {
  const GL2<C> g = matrix_or_alpha(p);
  const GL2<C> gs = g.adjoint();
  SuiteReport rep;
  rep.suite = "repmat";
  for (unsigned level = 0; level <= p.max_level.value_or(4); ++level) {
    const std::string tag = "L=" + std::to_string(level) + ": ";
    const auto m = rep_matrix(g, level).entries;
    const auto ms = rep_matrix(gs, level).entries;
    rep.add(tag + "H^g_{k,L-k} = sum_r M_rk H_{r,L-r}", rep_action_check(g, level).pass);
    rep.add(tag + "M(I) = I", near(rep_matrix(GL2<C>::identity(), level).entries, Matrix<C>::identity(level + 1)));
    rep.add(tag + "M(g) M(g*) = M(g g*)", near(m * ms, rep_matrix(g * gs, level).entries));
    rep.add(tag + "M(g)^* = M(g*)", near(gaussian_adjoint(m, level), ms));
    rep.add(tag + "M(g^-1) = M(g)^-1", near(rep_matrix(g.inverse(), level).entries * m, Matrix<C>::identity(level + 1)));
    rep.add(tag + "det M(g) = det(g)^(L(L+1)/2)", determinant_law_holds(g, level));
  }
  rep.notes.push_back(kLevelConvention);
  rep.notes.push_back("M(g)^* is the adjoint for the Gaussian inner product: W^-1 M^H W, W = diag(k!(L-k)!)");
  return from_suite(rep);
}

template <Scalar C>
VerifyResult eigen(const SuiteParams<C>& p) {
  const GL2<C> g = matrix_or_alpha(p);
  SuiteReport rep;
  rep.suite = "eigen";
  for (unsigned level = 0; level <= p.max_level.value_or(4); ++level) {
    auto e = eigenvalue_structure_check(g, level);
    rep.add("L=" + std::to_string(level) + ": eigenvalues of M(g,L) = {l1^k l2^(L-k)}", e.pass, {}, e.note);
  }
  return from_suite(rep);
}

template <Scalar C>
VerifyResult intertwine(const SuiteParams<C>& p) {
  auto r = intertwine_check(matrix_or_alpha(p), p.max_level.value_or(5));
  SuiteReport rep;
  rep.suite = "intertwine";
  rep.add("E(z^m zbar^n) = H_{m,n} (" + std::to_string(r.monomials_checked) + " monomials)",
          std::none_of(r.failures.begin(), r.failures.end(), [](const std::string& f) { return f.rfind("E(", 0) == 0; }));
  rep.add("E M(g,L) = T(g,L) E (" + std::to_string(r.operator_checks) + " basis vectors)",
          std::none_of(r.failures.begin(), r.failures.end(), [](const std::string& f) { return f.rfind("E M", 0) == 0; }));
  rep.notes = r.failures;
  return from_suite(rep);
}

template <Scalar C>
VerifyResult ncqm(const SuiteParams<C>& p) {
  return from_suite(ncqm_commutator_suite(AlphaPoint<C>::from(p.alpha.value_or(default_alpha<C>()))));
}

template <Scalar C>
VerifyResult qp(const SuiteParams<C>& p) {
  return from_suite(qp_representation_suite(p.theta.value_or(from_rational<C>(Rational(3, 5))),
                                            p.gamma.value_or(from_rational<C>(Rational(16, 15)))));
}

template <Scalar C>
VerifyResult dualscale(const SuiteParams<C>& p) {
  auto r = dual_matrix_scaling_check(AlphaPoint<C>::from(p.alpha.value_or(default_alpha<C>())), p.max_level.value_or(4));
  Json kappa = Json::array();
  for (const auto& k : r.kappa) kappa.push_back(encode_scalar(k));
  return {r.pass(), Json{{"suite", "dualscale"},
                         {"status", r.pass() ? "pass" : "fail"},
                         {"delta", encode_scalar(r.delta)},
                         {"kappa", kappa},
                         {"failures", r.failures}}};
}

}  // namespace detail

/// Lie tables for one regime. With alpha (or no parameter): J^alpha, X/Y and Z/Y on
/// the operator realization. With theta alone: the abstract bilinear algebra,
/// and at theta = 1 the X/Y table continued from theta < 1.
template <Scalar C>
struct LieRun {
  std::vector<std::pair<StructureConstants<C>, Classification<C>>> tables;
  SuiteReport report;
  LieClass final_class = LieClass::unknown;
};

template <Scalar C>
LieRun<C> lie_run(const SuiteParams<C>& p) {
  LieRun<C> run;
  run.report.suite = "lie";
  auto& rep = run.report;
  const C one = from_int<C>(1);

  auto record = [&](StructureConstants<C> sc, bool classify_it) {
    const std::string name = sc.names.empty() ? "" : sc.names[0];
    rep.add(name + " table closed (residuals " + std::to_string(sc.max_residual) + ")", sc.closed);
    const bool jac = jacobi_holds(sc, is_exact_v<C> ? 0.0 : 1e-10);
    rep.add(name + " table satisfies Jacobi", jac);
    Classification<C> cls;
    if (classify_it && jac) cls = classify(sc, 1e-10);
    run.tables.emplace_back(std::move(sc), cls);
    return cls;
  };

  C theta;
  LieBasis<WeylOp<C>> j_ops;
  LieBasis<BosonBilinear<C>> j_abstract;
  const bool abstract = p.theta && !p.alpha;
  if (abstract) {
    theta = *p.theta;
    j_abstract = abstract_bilinear_generators(theta);
  } else {
    auto point = AlphaPoint<C>::from(p.alpha.value_or(detail::default_alpha<C>()));
    theta = point.theta;
    j_ops = bilinear_generators(point);
  }
  const double th = to_complex(theta).real();
  const bool boundary = negligible(theta - one, 1e-12);
  if (!(th >= 0.0 && th <= 1.0 + 1e-12)) throw std::domain_error("theta must lie in [0, 1]");
  const LieClass expected = boundary ? LieClass::heisenberg_plus_u1 : LieClass::su2_plus_u1;

  auto j_table = abstract ? structure_constants(j_abstract) : structure_constants(j_ops);
  {
    // [J1,J2] = iJ3, [J2,J3] = iJ1, [J3,J4] = i th J1, [J4,J1] = i th J3, [J3,J1] = iJ2 + i th J4, [J2,J4] = 0
    auto want = StructureConstants<C>::empty(j_table.names);
    const C i = imag_unit<C>(), z{};
    want.set(0, 1, {z, z, i, z});
    want.set(1, 2, {i, z, z, z});
    want.set(2, 3, {i * theta, z, z, z});
    want.set(3, 0, {z, z, i * theta, z});
    want.set(2, 0, {z, i, z, i * theta});
    want.set(1, 3, {z, z, z, z});
    rep.add("J brackets match the deformed su(2) relations", same_table(j_table, want));
  }
  record(std::move(j_table), !boundary);

  if (boundary) {
    auto limit = theta_limit_table(theta, default_theta_samples<C>());
    rep.add("X/Y table continued to theta = 1 (max residual " + std::to_string(limit.max_residual) + ")",
            limit.closed && limit.max_residual < 1e-10);
    run.final_class = record(std::move(limit), true).kind;
    rep.notes.push_back("theta = 1: X3 = i Y, so the X/Y table is the theta -> 1 limit of the 0 < theta < 1 table");
  } else {
    auto x = abstract ? structure_constants(basis_change(j_abstract, theta)) : structure_constants(basis_change(j_ops, theta));
    {
      const C f = one - theta * theta, z{};
      auto want = StructureConstants<C>::empty(x.names);
      want.set(0, 1, {z, z, one, z});
      want.set(1, 2, {f, z, z, z});
      want.set(2, 0, {z, f, z, z});
      rep.add("X/Y table with factor 1 - theta^2 = " + to_string(f), same_table(x, want));
    }
    record(std::move(x), true);
    auto z_table = abstract ? structure_constants(rescale(basis_change(j_abstract, theta), theta))
                            : structure_constants(rescale(basis_change(j_ops, theta), theta));
    {
      const C z{};
      auto want = StructureConstants<C>::empty(z_table.names);
      want.set(0, 1, {z, z, one, z});
      want.set(1, 2, {one, z, z, z});
      want.set(2, 0, {z, one, z, z});
      rep.add("rescaled Z table is [Z_i, Z_j] = eps_ijk Z_k", same_table(z_table, want));
    }
    run.final_class = record(std::move(z_table), true).kind;
  }
  rep.add(std::string("classification = ") + to_string(expected), run.final_class == expected, to_string(expected),
          to_string(run.final_class));
  return run;
}

template <Scalar C>
Json encode(const LieRun<C>& run) {
  Json tables = Json::array();
  for (const auto& [sc, cls] : run.tables) tables.push_back(encode(sc, cls.kind));
  Json out = encode(run.report);
  out["class"] = to_string(run.final_class);
  out["tables"] = std::move(tables);
  return out;
}

template <Scalar C>
VerifyResult run_suite(const std::string& name, const SuiteParams<C>& p) {
  if (name == "orthonormal") return detail::orthonormal(p);
  if (name == "biorth") return detail::biorth(p);
  if (name == "repmat") return detail::repmat(p);
  if (name == "eigen") return detail::eigen(p);
  if (name == "intertwine") return detail::intertwine(p);
  if (name == "ncqm") return detail::ncqm(p);
  if (name == "qp") return detail::qp(p);
  if (name == "dualscale") return detail::dualscale(p);
  if (name == "lie") {
    auto run = lie_run(p);
    return {run.report.passed(), encode(run)};
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace hdef::io
