#pragma once

// JSON encoding of polynomials, operators, matrices and reports.
// Exact coefficients are written as "num/den" strings, float ones as numbers.
// Terms follow the container order, so output is byte-stable.

#include <json.hpp>

#include <string>

#include "hdef/deformation.hpp"
#include "hdef/dictionary.hpp"
#include "hdef/lie.hpp"
#include "hdef/report.hpp"

namespace hdef::io {

using Json = nlohmann::ordered_json;

template <Scalar C>
Json encode_scalar(const C& c) {
  if constexpr (is_exact_v<C>)
    return Json{{"re", to_fraction_string(c.re)}, {"im", to_fraction_string(c.im)}};
  else
    return Json{{"re", c.real()}, {"im", c.imag()}};
}

namespace detail {
inline Rational exact_part(const Json& j, const char* key) {
  if (!j.contains(key)) return Rational(0);
  const auto& v = j.at(key);
  if (!v.is_string()) throw std::invalid_argument(std::string("exact coefficient field '") + key + "' must be a \"p/q\" string");
  return parse_rational(v.get<std::string>());
}
inline double float_part(const Json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  const auto& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  return parse_rational(v.get<std::string>()).get_d();
}
}  // namespace detail

template <Scalar C>
C decode_scalar(const Json& j) {
  if constexpr (is_exact_v<C>)
    return ExactComplex(detail::exact_part(j, "re"), detail::exact_part(j, "im"));
  else
    return FloatComplex(detail::float_part(j, "re"), detail::float_part(j, "im"));
}

template <Scalar C, class V>
Json encode(const Poly2<C, V>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t{{V::first_key, e.first}, {V::second_key, e.second}};
    const Json value = encode_scalar(c);
    for (auto& [k, v] : value.items()) t[k] = v;
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

template <class P>
P decode_poly(const Json& j) {
  using C = typename P::scalar_type;
  using V = typename P::variables;
  P p;
  for (const auto& t : j.at("terms")) p.add_term({t.at(V::first_key).template get<unsigned>(), t.at(V::second_key).template get<unsigned>()}, decode_scalar<C>(t));
  return p;
}

template <Scalar C>
Json encode(const WeylOp<C>& op) {
  Json terms = Json::array();
  for (const auto& [w, c] : op.terms()) {
    Json t{{"c1", w.c1}, {"c2", w.c2}, {"d1", w.d1}, {"d2", w.d2}};
    const Json value = encode_scalar(c);
    for (auto& [k, v] : value.items()) t[k] = v;
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

template <Scalar C>
WeylOp<C> decode_weyl(const Json& j) {
  WeylOp<C> op;
  for (const auto& t : j.at("terms"))
    op.add_term({t.at("c1").get<unsigned>(), t.at("c2").get<unsigned>(), t.at("d1").get<unsigned>(),
                 t.at("d2").get<unsigned>()},
                decode_scalar<C>(t));
  return op;
}

/// WeylOp schema plus "sqrt2_power": k when the operator is op / sqrt(2)^k.
template <Scalar C>
Json encode(const ScaledWeyl<C>& s) {
  Json j = encode(s.op);
  if (s.sqrt2_power != 0) j["sqrt2_power"] = s.sqrt2_power;
  return j;
}

template <Scalar C>
ScaledWeyl<C> decode_scaled_weyl(const Json& j) {
  return {decode_weyl<C>(j), j.value("sqrt2_power", 0u)};
}

template <Scalar C>
Json encode(const OperatorDictionary<C>& d) {
  Json j = Json::object();
  for (const auto& [name, op] : d.entries) j[name] = encode(op);
  return j;
}

template <Scalar C>
Json encode(const Matrix<C>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar C>
Matrix<C> decode_matrix(const Json& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.at(0).size();
  Matrix<C> out(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows.at(r).size() != m) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m; ++c) out(r, c) = decode_scalar<C>(rows.at(r).at(c));
  }
  return out;
}

template <Scalar C>
Json encode(const RepMatrix<C>& m) {
  return Json{{"L", m.level}, {"rows", encode(m.entries)}};
}

template <Scalar C>
RepMatrix<C> decode_rep_matrix(const Json& j) {
  RepMatrix<C> m{j.at("L").get<unsigned>(), decode_matrix<C>(j.at("rows"))};
  if (m.entries.rows() != m.level + 1 || m.entries.cols() != m.level + 1)
    throw std::invalid_argument("RepMatrix rows do not match L + 1");
  return m;
}

template <Scalar C>
Json encode(const GL2<C>& g) {
  return encode(g.matrix());
}

template <Scalar C>
Json encode(const Normalized<C>& h) {
  return Json{{"poly", encode(h.scaled)}, {"norm_squared", to_fraction_string(h.norm_squared)}};
}

template <Scalar C>
Json encode(const BiorthReport<C>& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"dual", {x.level_dual - x.index_dual, x.index_dual}},
                     {"deformed", {x.level - x.index, x.index}},
                     {"value", encode_scalar(x.value)},
                     {"expected", encode_scalar(x.expected)}});
  return Json{{"Lmax", r.max_level}, {"violations", std::move(v)}, {"status", r.pass() ? "pass" : "fail"}};
}

template <Scalar C>
Json encode(const StructureConstants<C>& sc, LieClass kind) {
  Json brackets = Json::array();
  for (const auto& b : sc.brackets) {
    Json coeffs = Json::array();
    for (const auto& c : b.coeffs) coeffs.push_back(encode_scalar(c));
    brackets.push_back(Json{{"i", b.i}, {"j", b.j}, {"coeffs", std::move(coeffs)}, {"residual_norm", b.residual_norm}});
  }
  return Json{{"basis", sc.names}, {"brackets", std::move(brackets)}, {"class", to_string(kind)}};
}

inline Json encode(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.expected.empty()) j["expected"] = c.expected;
    if (!c.actual.empty()) j["actual"] = c.actual;
    checks.push_back(std::move(j));
  }
  Json out{{"suite", r.suite}, {"status", r.passed() ? "pass" : "fail"}, {"checks", std::move(checks)}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

}  // namespace hdef::io
