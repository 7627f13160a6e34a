#pragma once

// Lie algebras of bilinear generators J_A = sum_ij A_ij b_i^+ b_j built from a
// deformed boson pair b with [b_j, b_k^+] = K_jk, K = [[1, i theta], [-i theta, 1]].
//
// Two realizations share one code path:
//   WeylOp<C>        the concrete operators in the two-boson Weyl algebra,
//   BosonBilinear<C> the coefficient matrix A, bracket [J_A, J_B] = J_{AKB - BKA}.
// The second one survives theta = 1, where the concrete operators collapse
// (the alpha-matrix is singular there).

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdef/matrix.hpp"
#include "hdef/ncqm.hpp"
#include "hdef/weyl.hpp"

namespace hdef {

template <Scalar C>
struct BosonBilinear {
  using scalar_type = C;
  std::array<C, 4> a{};  // row-major A
  C theta{};

  C operator()(int i, int j) const { return a[2 * i + j]; }

  friend BosonBilinear operator+(BosonBilinear x, const BosonBilinear& y) {
    for (int k = 0; k < 4; ++k) x.a[k] += y.a[k];
    return x;
  }
  friend BosonBilinear operator-(BosonBilinear x, const BosonBilinear& y) {
    for (int k = 0; k < 4; ++k) x.a[k] -= y.a[k];
    return x;
  }
  friend BosonBilinear operator*(BosonBilinear x, const C& s) {
    for (auto& v : x.a) v *= s;
    return x;
  }
  friend BosonBilinear operator*(const C& s, BosonBilinear x) { return x * s; }
  friend bool operator==(const BosonBilinear& x, const BosonBilinear& y) { return x.a == y.a && x.theta == y.theta; }
};

template <Scalar C>
WeylOp<C> lie_bracket(const WeylOp<C>& x, const WeylOp<C>& y) {
  return commutator(x, y);
}

template <Scalar C>
BosonBilinear<C> lie_bracket(const BosonBilinear<C>& x, const BosonBilinear<C>& y) {
  const C it = imag_unit<C>() * x.theta;
  const std::array<C, 4> k{from_int<C>(1), it, -it, from_int<C>(1)};
  auto mul = [](const std::array<C, 4>& p, const std::array<C, 4>& q) {
    return std::array<C, 4>{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
                            p[2] * q[1] + p[3] * q[3]};
  };
  const auto akb = mul(mul(x.a, k), y.a);
  const auto bka = mul(mul(y.a, k), x.a);
  BosonBilinear<C> r{{}, x.theta};
  for (int i = 0; i < 4; ++i) r.a[i] = akb[i] - bka[i];
  return r;
}

template <Scalar C>
const typename WeylOp<C>::term_map& coordinate_terms(const WeylOp<C>& op) {
  return op.terms();
}
template <Scalar C>
std::map<int, C> coordinate_terms(const BosonBilinear<C>& b) {
  std::map<int, C> m;
  for (int k = 0; k < 4; ++k)
    if (!is_zero(b.a[k])) m.emplace(k, b.a[k]);
  return m;
}

template <class E>
struct LieBasis {
  using element_type = E;
  using scalar_type = typename E::scalar_type;
  std::vector<std::string> names;
  std::vector<E> elements;

  std::size_t size() const { return elements.size(); }
  const E& operator[](const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return elements[i];
    throw std::out_of_range("no generator named " + name);
  }
};

namespace detail {
// J1 = (b1+ b2 + b2+ b1)/2, J2 = (b1+ b2 - b2+ b1)/2i, J3 = (b1+ b1 - b2+ b2)/2, J4 = (b1+ b1 + b2+ b2)/2.
template <Scalar C>
std::array<WeylOp<C>, 4> bilinears(const WeylOp<C>& c1, const WeylOp<C>& c2, const WeylOp<C>& a1,
                                   const WeylOp<C>& a2) {
  const C half = from_rational<C>(Rational(1, 2));
  const C half_over_i = -imag_unit<C>() * half;
  return {(c1 * a2 + c2 * a1) * half, (c1 * a2 - c2 * a1) * half_over_i, (c1 * a1 - c2 * a2) * half,
          (c1 * a1 + c2 * a2) * half};
}
}  // namespace detail

/// J1..J4 of the undeformed bosons.
template <Scalar C>
LieBasis<WeylOp<C>> undeformed_generators() {
  auto j = detail::bilinears(WeylOp<C>::creation(1), WeylOp<C>::creation(2), WeylOp<C>::annihilation(1),
                             WeylOp<C>::annihilation(2));
  return {{"J1", "J2", "J3", "J4"}, {j.begin(), j.end()}};
}

/// J1^alpha..J4^alpha: the bilinears of the alpha-deformed bosons.
template <Scalar C>
LieBasis<WeylOp<C>> bilinear_generators(const AlphaPoint<C>& p) {
  auto j = detail::bilinears(alpha_creation(p, 1), alpha_creation(p, 2), alpha_annihilation(p, 1),
                             alpha_annihilation(p, 2));
  return {{"J1_alpha", "J2_alpha", "J3_alpha", "J4_alpha"}, {j.begin(), j.end()}};
}

/// The same four generators as coefficient matrices over the pair with parameter theta.
template <Scalar C>
LieBasis<BosonBilinear<C>> abstract_bilinear_generators(const C& theta) {
  const C h = from_rational<C>(Rational(1, 2));
  const C ih = imag_unit<C>() * h;
  const C z{};
  return {{"J1_alpha", "J2_alpha", "J3_alpha", "J4_alpha"},
          {BosonBilinear<C>{{z, h, h, z}, theta}, BosonBilinear<C>{{z, -ih, ih, z}, theta},
           BosonBilinear<C>{{h, z, z, -h}, theta}, BosonBilinear<C>{{h, z, z, h}, theta}}};
}

/// X1 = i J1, X2 = i J3, X3 = i (J2 + theta J4), Y = theta J2 + J4.
template <class E>
LieBasis<E> basis_change(const LieBasis<E>& j, const typename E::scalar_type& theta) {
  using C = typename E::scalar_type;
  if (j.size() != 4) throw std::invalid_argument("basis_change expects J1..J4");
  const C i = imag_unit<C>();
  const auto& e = j.elements;
  return {{"X1_theta", "X2_theta", "X3_theta", "Y_theta"},
          {e[0] * i, e[2] * i, (e[1] + e[3] * theta) * i, e[1] * theta + e[3]}};
}

/// Z1 = X1/s, Z2 = X2/s, Z3 = X3/s^2, s = sqrt(1 - theta^2); gives [Z_i, Z_j] = eps_ijk Z_k.
template <class E>
LieBasis<E> rescale(const LieBasis<E>& x, const typename E::scalar_type& theta) {
  using C = typename E::scalar_type;
  if (x.size() != 4) throw std::invalid_argument("rescale expects X1, X2, X3, Y");
  const C one_minus = from_int<C>(1) - theta * theta;
  if (negligible(one_minus, 1e-12)) throw std::domain_error("rescaling singular at theta = 1");
  auto s = scalar_traits<C>::real_sqrt(one_minus);
  if (!s) {
    if (to_complex(one_minus).real() < 0) throw std::domain_error("rescaling requires |theta| < 1");
    throw ExactnessError("sqrt(1 - theta^2) is irrational for theta = " + to_string(theta));
  }
  const C inv = from_int<C>(1) / *s;
  const auto& e = x.elements;
  return {{"Z1_theta", "Z2_theta", "Z3_theta", "Y_theta"}, {e[0] * inv, e[1] * inv, e[2] * (inv * inv), e[3]}};
}

/// Rescaling with the factors Z1 = s X1, Z2 = X2, Z3 = s X3 (does not close into su(2)).
template <class E>
LieBasis<E> rescale_literal(const LieBasis<E>& x, const typename E::scalar_type& theta) {
  using C = typename E::scalar_type;
  auto s = scalar_traits<C>::real_sqrt(from_int<C>(1) - theta * theta);
  if (!s) throw ExactnessError("sqrt(1 - theta^2) is irrational for theta = " + to_string(theta));
  const auto& e = x.elements;
  return {{"Z1_theta", "Z2_theta", "Z3_theta", "Y_theta"}, {e[0] * *s, e[1], e[2] * *s, e[3]}};
}

template <Scalar C>
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<C> coeffs;
  double residual_norm = 0.0;
  bool in_span = false;
};

/// c_ij^k with [g_i, g_j] = sum_k c_ij^k g_k; brackets holds the pairs i < j.
template <Scalar C>
struct StructureConstants {
  std::vector<std::string> names;
  std::vector<BracketEntry<C>> brackets;
  std::vector<std::vector<std::vector<C>>> table;
  double max_residual = 0.0;
  bool closed = true;

  std::size_t size() const { return names.size(); }
  const C& operator()(std::size_t i, std::size_t j, std::size_t k) const { return table[i][j][k]; }

  void set(std::size_t i, std::size_t j, std::vector<C> coeffs) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      table[i][j][k] = coeffs[k];
      table[j][i][k] = -coeffs[k];
    }
  }
  static StructureConstants empty(std::vector<std::string> names) {
    StructureConstants s;
    const std::size_t n = names.size();
    s.names = std::move(names);
    s.table.assign(n, std::vector<std::vector<C>>(n, std::vector<C>(n)));
    return s;
  }
};

/// Expresses every pairwise bracket in the span of the basis by exact (or
/// pivoted float) elimination over the operator coefficient space.
template <class E>
StructureConstants<typename E::scalar_type> structure_constants(const LieBasis<E>& basis) {
  using C = typename E::scalar_type;
  using Key = typename std::decay_t<decltype(coordinate_terms(std::declval<E>()))>::key_type;
  const std::size_t n = basis.size();

  std::vector<std::vector<E>> brackets(n, std::vector<E>(n));
  std::map<Key, std::size_t> index;
  auto register_keys = [&](const E& e) {
    for (const auto& [k, c] : coordinate_terms(e)) index.try_emplace(k, 0);
  };
  for (const auto& e : basis.elements) register_keys(e);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      brackets[i][j] = lie_bracket(basis.elements[i], basis.elements[j]);
      register_keys(brackets[i][j]);
    }
  std::size_t next = 0;
  for (auto& [k, v] : index) v = next++;

  auto vectorize = [&](const E& e) {
    std::vector<C> v(index.size());
    for (const auto& [k, c] : coordinate_terms(e)) v[index.at(k)] = c;
    return v;
  };
  Matrix<C> a(index.size(), n);
  for (std::size_t k = 0; k < n; ++k) {
    auto v = vectorize(basis.elements[k]);
    for (std::size_t r = 0; r < v.size(); ++r) a(r, k) = v[r];
  }
  if (rank(a, 1e-10) != n) throw std::invalid_argument("generators are linearly dependent");

  auto sc = StructureConstants<C>::empty(basis.names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto sol = solve_in_span(a, vectorize(brackets[i][j]), 1e-12);
      sc.set(i, j, sol.coefficients);
      sc.brackets.push_back({i, j, sol.coefficients, sol.residual_norm, sol.in_span});
      sc.max_residual = std::max(sc.max_residual, sol.residual_norm);
      sc.closed = sc.closed && sol.in_span;
    }
  return sc;
}

/// Sum over cyclic (i,j,k) of c_ij^m c_mk^l vanishes for every l.
template <Scalar C>
bool jacobi_holds(const StructureConstants<C>& sc, double tol = 1e-10) {
  const std::size_t n = sc.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          C s{};
          for (std::size_t m = 0; m < n; ++m)
            s += sc(i, j, m) * sc(m, k, l) + sc(j, k, m) * sc(m, i, l) + sc(k, i, m) * sc(m, j, l);
          if (!negligible(s, tol)) return false;
        }
  return true;
}

/// Entrywise comparison of two tables over the same ordered basis.
template <Scalar C>
bool same_table(const StructureConstants<C>& a, const StructureConstants<C>& b, double tol = 1e-10) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k)
        if (!near(a(i, j, k), b(i, j, k), tol)) return false;
  return true;
}

enum class LieClass { su2_plus_u1, heisenberg_plus_u1, unknown };

inline const char* to_string(LieClass c) {
  switch (c) {
    case LieClass::su2_plus_u1: return "su2_plus_u1";
    case LieClass::heisenberg_plus_u1: return "heisenberg_plus_u1";
    default: return "unknown";
  }
}

template <Scalar C>
struct Classification {
  LieClass kind = LieClass::unknown;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  bool real_form_rotated = false;  // constants were purely imaginary, basis g -> i g
  std::vector<C> killing_minors;   // leading minors of the Killing form on the derived algebra
};

namespace detail {
template <Scalar C>
Matrix<C> null_space(Matrix<C> m, double tol) {
  const std::size_t n = m.cols();
  auto pivots = row_reduce(m, tol);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<C> basis(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = from_int<C>(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = -m(r, free[f]);
  }
  return basis;
}

template <Scalar C>
Matrix<C> hstack(const Matrix<C>& a, const Matrix<C>& b) {
  Matrix<C> r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}
}  // namespace detail

/// su2_plus_u1: 3-dim derived algebra with negative definite Killing form, 1-dim center.
/// heisenberg_plus_u1: 1-dim derived algebra inside a 2-dim center.
/// Purely imaginary tables (hermitian generators) are first rotated to the real form.
template <Scalar C>
Classification<C> classify(const StructureConstants<C>& input, double tol = 1e-10) {
  if (!jacobi_holds(input, tol)) throw std::invalid_argument("structure constants violate the Jacobi identity");
  Classification<C> out;
  StructureConstants<C> sc = input;
  const std::size_t n = sc.size();

  bool all_real = true, all_imag = true;
  for (auto& plane : sc.table)
    for (auto& row : plane)
      for (auto& c : row) {
        all_real = all_real && negligible(c - conjugate(c), tol);
        all_imag = all_imag && negligible(c + conjugate(c), tol);
      }
  if (!all_real) {
    if (!all_imag) return out;
    out.real_form_rotated = true;
    for (auto& plane : sc.table)
      for (auto& row : plane)
        for (auto& c : row) c = c * imag_unit<C>();
  }

  // derived algebra: span of the bracket vectors
  Matrix<C> brackets(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) brackets(k, i * n + j) = sc(i, j, k);
  Matrix<C> chosen(n, 0);
  for (std::size_t c = 0; c < brackets.cols(); ++c) {
    Matrix<C> col(n, 1);
    for (std::size_t r = 0; r < n; ++r) col(r, 0) = brackets(r, c);
    Matrix<C> trial = detail::hstack(chosen, col);
    if (rank(trial, tol) > chosen.cols()) chosen = std::move(trial);
  }
  out.derived_dim = chosen.cols();
  {
    // center: x with sum_i x_i c_ij^k = 0 for all j, k
    Matrix<C> ad(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) ad(j * n + k, i) = sc(i, j, k);
    Matrix<C> center = detail::null_space(ad, tol);
    out.center_dim = center.cols();

    const std::size_t combined = rank(detail::hstack(chosen, center), tol);

    // Killing form K_ab = sum c_ak^m c_bm^k
    Matrix<C> killing(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        C s{};
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t m = 0; m < n; ++m) s += sc(a, k, m) * sc(b, m, k);
        killing(a, b) = s;
      }

    if (n == 4 && out.derived_dim == 3 && out.center_dim == 1 && combined == 4) {
      Matrix<C> restricted = chosen.transpose() * killing * chosen;
      bool negative_definite = true;
      for (std::size_t m = 1; m <= 3; ++m) {
        Matrix<C> minor(m, m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) minor(i, j) = restricted(i, j);
        C d = determinant(minor);
        out.killing_minors.push_back(d);
        const double v = to_complex(d).real();
        const bool expected_negative = m % 2 == 1;
        if (negligible(d, tol) || (expected_negative ? v >= 0 : v <= 0)) negative_definite = false;
      }
      if (negative_definite) out.kind = LieClass::su2_plus_u1;
    } else if (n == 4 && out.derived_dim == 1 && out.center_dim == 2 && combined == 2) {
      out.kind = LieClass::heisenberg_plus_u1;
    }
  }
  return out;
}

/// Structure constants of the X/Y basis extended to theta_target by continuity.
/// The table is computed on the abstract bilinear algebra at sample points in
/// (0, 1), where the basis is independent, fitted by a quadratic in theta,
/// checked on the remaining samples, and evaluated at theta_target. At theta = 1
/// the X/Y elements themselves become dependent (X3 = i Y), so this is the only
/// meaning the table has there.
template <Scalar C>
StructureConstants<C> theta_limit_table(const C& theta_target, const std::vector<C>& samples) {
  if (samples.size() < 4) throw std::invalid_argument("theta_limit_table needs at least four sample points");
  std::vector<StructureConstants<C>> tables;
  double residual = 0.0;
  bool closed = true;
  for (const auto& t : samples) {
    auto sc = structure_constants(basis_change(abstract_bilinear_generators(t), t));
    residual = std::max(residual, sc.max_residual);
    closed = closed && sc.closed;
    tables.push_back(std::move(sc));
  }
  auto lagrange = [&](const C& x, auto value_at) {
    C total{};
    for (std::size_t a = 0; a < 3; ++a) {
      C w = from_int<C>(1);
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) w *= (x - samples[b]) / (samples[a] - samples[b]);
      total += w * value_at(a);
    }
    return total;
  };
  auto out = StructureConstants<C>::empty(tables[0].names);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<C> coeffs(n);
      double fit_error = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        auto at = [&](std::size_t s) { return tables[s](i, j, k); };
        coeffs[k] = lagrange(theta_target, at);
        for (std::size_t s = 3; s < samples.size(); ++s)
          fit_error = std::max(fit_error, magnitude(lagrange(samples[s], at) - tables[s](i, j, k)));
      }
      double r = std::max(residual, fit_error);
      bool ok = closed && (is_exact_v<C> ? fit_error == 0.0 : fit_error <= 1e-10);
      out.set(i, j, coeffs);
      out.brackets.push_back({i, j, coeffs, r, ok});
      out.max_residual = std::max(out.max_residual, r);
      out.closed = out.closed && ok;
    }
  return out;
}

template <Scalar C>
std::vector<C> default_theta_samples() {
  return {from_rational<C>(Rational(1, 2)), from_rational<C>(Rational(3, 5)), from_rational<C>(Rational(2, 3)),
          from_rational<C>(Rational(3, 4)), from_rational<C>(Rational(4, 5))};
}

}  // namespace hdef
