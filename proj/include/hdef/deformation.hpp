#pragma once

// GL(2, C)-deformed complex Hermite polynomials and the level representations.
//
// Index convention on the level-L subspace: position k stands for
//   f_k = s^k t^{L-k}  <->  z^k zbar^{L-k}  <->  H_{k, L-k}
// (k = power of a1^+). Column k of M(g, L) holds the coefficients of
// H^g_{k, L-k} in the basis {H_{r, L-r}}. With this ordering M(g, 1) = J g J,
// J the 2x2 exchange matrix, and M(g, L) M(h, L) = M(gh, L).
//
// The basis H_{k,L-k} is orthogonal but not normalized: <H_k, H_k> = k!(L-k)!.
// Adjoints on the level subspace are therefore taken with respect to the
// Gram matrix W = diag(k!(L-k)!) (see gaussian_adjoint).

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "hdef/hermite.hpp"
#include "hdef/inner_product.hpp"
#include "hdef/matrix.hpp"
#include "hdef/parallel.hpp"

namespace hdef {

/// Invertible 2x2 complex matrix [[g11, g12], [g21, g22]].
template <Scalar C>
class GL2 {
 public:
  GL2(C g11, C g12, C g21, C g22) : e_{std::move(g11), std::move(g12), std::move(g21), std::move(g22)} {
    if (is_singular(det())) throw std::domain_error("deformation matrix is singular (det = " + to_string(det()) + ")");
  }

  static GL2 identity() { return {from_int<C>(1), C{}, C{}, from_int<C>(1)}; }
  static GL2 diagonal(const C& a, const C& b) { return {a, C{}, C{}, b}; }

  const C& g11() const { return e_[0]; }
  const C& g12() const { return e_[1]; }
  const C& g21() const { return e_[2]; }
  const C& g22() const { return e_[3]; }
  /// 1-based entry access g(i, j).
  const C& operator()(int i, int j) const { return e_[2 * (i - 1) + (j - 1)]; }

  C det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  C trace() const { return e_[0] + e_[3]; }

  GL2 adjoint() const { return {conjugate(e_[0]), conjugate(e_[2]), conjugate(e_[1]), conjugate(e_[3])}; }
  GL2 inverse() const {
    C d = det();
    return {e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d};
  }
  friend GL2 operator*(const GL2& a, const GL2& b) {
    return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
            a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
  }
  friend bool operator==(const GL2& a, const GL2& b) { return a.e_ == b.e_; }

  bool is_lower_triangular() const { return is_zero(e_[1]); }
  bool is_upper_triangular() const { return is_zero(e_[2]); }

  Matrix<C> matrix() const {
    Matrix<C> m(2, 2);
    m(0, 0) = e_[0];
    m(0, 1) = e_[1];
    m(1, 0) = e_[2];
    m(1, 1) = e_[3];
    return m;
  }

 private:
  static bool is_singular(const C& d) {
    if constexpr (is_exact_v<C>)
      return is_zero(d);
    else
      return magnitude(d) <= 1e-12;
  }
  std::array<C, 4> e_;
};

/// Matrix of R_g restricted to homogeneous degree-L polynomials, basis f_k = s^k t^{L-k}:
///   M_rk = sum_q C(k,q) C(L-k, r-q) g11^q g21^{k-q} g12^{r-q} g22^{L-k+q-r}.
template <Scalar C>
struct RepMatrix {
  unsigned level = 0;
  Matrix<C> entries;

  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

template <Scalar C>
RepMatrix<C> rep_matrix(const GL2<C>& g, unsigned level) {
  const unsigned n = level;
  Matrix<C> m(n + 1, n + 1);
  for (unsigned r = 0; r <= n; ++r)
    for (unsigned k = 0; k <= n; ++k) {
      C sum{};
      unsigned q_lo = r + k > n ? r + k - n : 0;
      for (unsigned q = q_lo; q <= std::min(r, k); ++q) {
        C term = from_rational<C>(binomial(k, q) * binomial(n - k, r - q));
        term *= power(g.g11(), q) * power(g.g21(), k - q) * power(g.g12(), r - q) * power(g.g22(), n - k + q - r);
        sum += term;
      }
      m(r, k) = sum;
    }
  return {level, std::move(m)};
}

/// W_k = <H_{k,L-k}, H_{k,L-k}> = k! (L-k)!.
inline std::vector<Rational> level_weights(unsigned level) {
  std::vector<Rational> w;
  for (unsigned k = 0; k <= level; ++k) w.push_back(factorial(k) * factorial(level - k));
  return w;
}

/// Adjoint of the level operator whose matrix in {H_{k,L-k}} is m:
/// W^{-1} m^H W. This is the matrix of T(g,L)^* and equals M(g^*, L).
template <Scalar C>
Matrix<C> gaussian_adjoint(const Matrix<C>& m, unsigned level) {
  auto w = level_weights(level);
  Matrix<C> adj(m.cols(), m.rows());
  for (std::size_t r = 0; r < adj.rows(); ++r)
    for (std::size_t k = 0; k < adj.cols(); ++k) adj(r, k) = conjugate(m(k, r)) * from_rational<C>(w[k] / w[r]);
  return adj;
}

/// a_i^{g+} = g_{1i} a1^+ + g_{2i} a2^+.
template <Scalar C>
WeylOp<C> deformed_creation(const C& g1i, const C& g2i) {
  return WeylOp<C>::creation(1) * g1i + WeylOp<C>::creation(2) * g2i;
}
template <Scalar C>
WeylOp<C> deformed_creation(const GL2<C>& g, int mode) {
  return mode == 1 ? deformed_creation(g.g11(), g.g21()) : deformed_creation(g.g12(), g.g22());
}
/// a_i^g = conj(g_{1i}) a1 + conj(g_{2i}) a2, the adjoint of a_i^{g+}.
template <Scalar C>
WeylOp<C> deformed_annihilation(const GL2<C>& g, int mode) {
  return dagger(deformed_creation(g, mode));
}

/// H^g_{k,l} = (a_1^{g+})^k (a_2^{g+})^l 1, normalized by sqrt(k! l!).
template <Scalar C>
Normalized<C> deformed_hermite(const GL2<C>& g, unsigned k, unsigned l) {
  const WeylOp<C> first = deformed_creation(g, 1);
  const WeylOp<C> second = deformed_creation(g, 2);
  BiPoly<C> p = BiPoly<C>::constant(from_int<C>(1));
  for (unsigned j = 0; j < l; ++j) p = hdef::apply(second, p);
  for (unsigned j = 0; j < k; ++j) p = hdef::apply(first, p);
  return {std::move(p), factorial(k) * factorial(l)};
}

/// F_g(u, ubar) = exp(v z + w zbar - v w), v = g11 u + g12 ubar, w = g21 u + g22 ubar.
template <Scalar C>
SeriesTruncation<BiPoly<C>> deformed_generating_series(const GL2<C>& g, unsigned order) {
  SeriesTruncation<BiPoly<C>> arg(order);
  arg.add(1, 0, z_poly<C>() * g.g11() + zbar_poly<C>() * g.g21());
  arg.add(0, 1, z_poly<C>() * g.g12() + zbar_poly<C>() * g.g22());
  arg.add(2, 0, BiPoly<C>::constant(-(g.g11() * g.g21())));
  arg.add(1, 1, BiPoly<C>::constant(-(g.g11() * g.g22() + g.g12() * g.g21())));
  arg.add(0, 2, BiPoly<C>::constant(-(g.g12() * g.g22())));
  return series_exp(arg);
}

/// Coordinates of p in {H_{r,L-r}}, or nullopt if p is not in the level-L span.
template <Scalar C>
std::optional<std::vector<C>> level_coordinates(const BiPoly<C>& p, unsigned level) {
  std::vector<C> coords;
  BiPoly<C> rest = p;
  auto w = level_weights(level);
  for (unsigned r = 0; r <= level; ++r) {
    const BiPoly<C> h = complex_hermite_sum<C>(r, level - r).scaled;
    C c = inner_product(h, p) / from_rational<C>(w[r]);
    rest -= h * c;
    coords.push_back(std::move(c));
  }
  if (!near(rest, BiPoly<C>{})) return std::nullopt;
  return coords;
}

/// T(g, L) applied to a level-L polynomial: H_{r,L-r} -> H^g_{r,L-r}.
template <Scalar C>
BiPoly<C> apply_level_operator(const GL2<C>& g, const BiPoly<C>& p, unsigned level) {
  auto coords = level_coordinates(p, level);
  if (!coords) throw std::invalid_argument("polynomial is not in the level-" + std::to_string(level) + " subspace");
  BiPoly<C> out;
  for (unsigned r = 0; r <= level; ++r)
    if (!is_zero((*coords)[r])) out += deformed_hermite(g, r, level - r).scaled * (*coords)[r];
  return out;
}

template <Scalar C>
struct MatrixMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  C expected{};
  C actual{};
};

template <Scalar C>
struct RepActionReport {
  bool pass = false;
  std::string convention;
  Matrix<C> closed_form;
  Matrix<C> recovered;
  bool level_invariant = true;
  std::optional<MatrixMismatch<C>> first_mismatch;
};

inline const char* kLevelConvention =
    "column k of M(g,L) = coefficients of H^g_{k,L-k} in basis H_{r,L-r} (k = a1^+ power, f_k = s^k t^(L-k))";

/// Expands each H^g_{k,L-k} in the level basis through inner products and
/// compares the coefficient matrix with the closed form M(g, L).
template <Scalar C>
RepActionReport<C> rep_action_check(const GL2<C>& g, unsigned level) {
  RepActionReport<C> rep;
  rep.convention = kLevelConvention;
  rep.closed_form = rep_matrix(g, level).entries;
  rep.recovered = Matrix<C>(level + 1, level + 1);
  for (unsigned k = 0; k <= level; ++k) {
    auto coords = level_coordinates(deformed_hermite(g, k, level - k).scaled, level);
    if (!coords) {
      rep.level_invariant = false;
      continue;
    }
    for (unsigned r = 0; r <= level; ++r) rep.recovered(r, k) = (*coords)[r];
  }
  if (auto d = first_difference(rep.closed_form, rep.recovered))
    rep.first_mismatch = MatrixMismatch<C>{d->first, d->second, rep.closed_form(d->first, d->second),
                                           rep.recovered(d->first, d->second)};
  rep.pass = rep.level_invariant && !rep.first_mismatch;
  return rep;
}

template <Scalar C>
struct DualFamily {
  GL2<C> dual_matrix;                 // (g^*)^{-1}
  std::vector<Normalized<C>> family;  // H^{(g*)^{-1}}_{k,L-k}, k = 0..L
  Matrix<C> matrix_route;             // [T(g,L)^*]^{-1} in the basis H_{r,L-r}
  bool routes_agree = false;
};

/// Basis dual to {h^g_{k,L-k}}: the family deformed by (g^*)^{-1}, cross-checked
/// against [T(g,L)^*]^{-1} applied to the undeformed basis.
template <Scalar C>
DualFamily<C> dual_family(const GL2<C>& g, unsigned level) {
  GL2<C> dual = g.adjoint().inverse();
  Matrix<C> route = inverse(gaussian_adjoint(rep_matrix(g, level).entries, level));
  DualFamily<C> out{dual, {}, route, true};
  for (unsigned k = 0; k <= level; ++k) {
    out.family.push_back(deformed_hermite(dual, k, level - k));
    BiPoly<C> via_matrix;
    for (unsigned r = 0; r <= level; ++r) via_matrix += complex_hermite_sum<C>(r, level - r).scaled * route(r, k);
    out.routes_agree = out.routes_agree && near(via_matrix, out.family.back().scaled);
  }
  return out;
}

template <Scalar C>
struct BiorthViolation {
  unsigned level_dual = 0, index_dual = 0;  // h~_{L-n, n}
  unsigned level = 0, index = 0;            // h^g_{M-k, k}
  C value{};
  C expected{};
};

template <Scalar C>
struct BiorthReport {
  unsigned max_level = 0;
  std::size_t pairs_checked = 0;
  std::vector<BiorthViolation<C>> violations;
  bool pass() const { return violations.empty(); }
};

/// <H~_{L-n,n}, H^g_{M-k,k}> = (L-n)! n! delta_LM delta_nk for all L, M <= Lmax.
template <Scalar C>
BiorthReport<C> biorthogonality_check(const GL2<C>& g, unsigned max_level) {
  const GL2<C> dual = g.adjoint().inverse();
  std::vector<std::pair<unsigned, unsigned>> index;  // (L, n)
  for (unsigned level = 0; level <= max_level; ++level)
    for (unsigned n = 0; n <= level; ++n) index.emplace_back(level, n);

  auto deformed = parallel_map(index.size(), [&](std::size_t i) {
    return deformed_hermite(g, index[i].first - index[i].second, index[i].second).scaled;
  });
  auto duals = parallel_map(index.size(), [&](std::size_t i) {
    return deformed_hermite(dual, index[i].first - index[i].second, index[i].second).scaled;
  });

  auto rows = parallel_map(index.size(), [&](std::size_t a) {
    std::vector<BiorthViolation<C>> bad;
    for (std::size_t b = 0; b < index.size(); ++b) {
      C value = inner_product(duals[a], deformed[b]);
      C expected{};
      if (a == b)
        expected = from_rational<C>(factorial(index[a].first - index[a].second) * factorial(index[a].second));
      if (!near(value, expected))
        bad.push_back({index[a].first, index[a].second, index[b].first, index[b].second, value, expected});
    }
    return bad;
  });

  BiorthReport<C> rep;
  rep.max_level = max_level;
  rep.pairs_checked = index.size() * index.size();
  for (auto& r : rows) rep.violations.insert(rep.violations.end(), r.begin(), r.end());
  return rep;
}

/// E = exp(-d_z d_zbar), a finite sum on polynomials.
template <Scalar C>
BiPoly<C> intertwining_operator(const BiPoly<C>& p) {
  BiPoly<C> out = p;
  BiPoly<C> term = p;
  for (unsigned j = 1; !term.is_zero(); ++j) {
    term = term.diff(vars::z).diff(vars::zbar) * from_rational<C>(Rational(-1, j));
    out += term;
  }
  return out;
}

template <Scalar C>
struct IntertwineReport {
  unsigned max_level = 0;
  std::size_t monomials_checked = 0;
  std::size_t operator_checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// E(z^m zbar^n) = H_{m,n} for m + n <= Lmax, and E M(g,L) = T(g,L) E on every
/// level-L monomial, L <= Lmax.
template <Scalar C>
IntertwineReport<C> intertwine_check(const GL2<C>& g, unsigned max_level) {
  IntertwineReport<C> rep;
  rep.max_level = max_level;
  for (unsigned level = 0; level <= max_level; ++level) {
    for (unsigned m = 0; m <= level; ++m) {
      ++rep.monomials_checked;
      BiPoly<C> e = intertwining_operator(BiPoly<C>::monomial(m, level - m));
      if (!near(e, complex_hermite_sum<C>(m, level - m).scaled))
        rep.failures.push_back("E(z^" + std::to_string(m) + " zbar^" + std::to_string(level - m) + ") != H");
    }
  }
  auto per_level = parallel_map(max_level + 1, [&](std::size_t level) {
    std::vector<std::string> bad;
    const auto m = rep_matrix(g, static_cast<unsigned>(level)).entries;
    for (unsigned k = 0; k <= level; ++k) {
      BiPoly<C> image;  // M(g,L) acting on the monomial z^k zbar^{L-k}
      for (unsigned r = 0; r <= level; ++r) image.add_term({r, static_cast<unsigned>(level) - r}, m(r, k));
      BiPoly<C> lhs = intertwining_operator(image);
      BiPoly<C> rhs = apply_level_operator(g, intertwining_operator(BiPoly<C>::monomial(k, level - k)),
                                           static_cast<unsigned>(level));
      if (!near(lhs, rhs))
        bad.push_back("E M(g," + std::to_string(level) + ") != T(g," + std::to_string(level) + ") E on f_" +
                      std::to_string(k));
    }
    return bad;
  });
  for (auto& b : per_level) rep.failures.insert(rep.failures.end(), b.begin(), b.end());
  for (unsigned level = 0; level <= max_level; ++level) rep.operator_checks += level + 1;
  return rep;
}

template <Scalar C>
struct EigenReport {
  bool pass = false;
  bool exact = false;
  unsigned level = 0;
  std::vector<FloatComplex> expected;  // lambda1^k lambda2^{L-k}
  std::vector<FloatComplex> computed;
  std::string note;
};

namespace detail {
template <class T, class Eq>
bool same_multiset(std::vector<T> a, std::vector<T> b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const T& y) { return eq(x, y); });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}
}  // namespace detail

/// Eigenvalues of M(g, L) against {lambda1^k lambda2^{L-k}}, lambda_i the
/// eigenvalues of g. Triangular g is checked exactly (M(g, L) is then
/// triangular); otherwise eigenvalues are computed in double precision and
/// matched within 1e-9 (relative), which requires distinct lambda_i.
template <Scalar C>
EigenReport<C> eigenvalue_structure_check(const GL2<C>& g, unsigned level, double tol = 1e-9) {
  EigenReport<C> rep;
  rep.level = level;
  const auto m = rep_matrix(g, level).entries;

  if (g.is_upper_triangular() || g.is_lower_triangular()) {
    rep.exact = true;
    std::vector<C> expected, computed;
    for (unsigned k = 0; k <= level; ++k) {
      expected.push_back(power(g.g11(), k) * power(g.g22(), level - k));
      computed.push_back(m(k, k));
    }
    bool triangular = m.is_lower_triangular() || m.is_upper_triangular();
    rep.pass = triangular && detail::same_multiset(expected, computed, [](const C& a, const C& b) { return near(a, b); });
    for (auto& x : expected) rep.expected.push_back(to_complex(x));
    for (auto& x : computed) rep.computed.push_back(to_complex(x));
    rep.note = triangular ? "triangular g: exact diagonal of triangular M(g,L)" : "M(g,L) unexpectedly not triangular";
    return rep;
  }

  const FloatComplex tr = to_complex(g.trace()), det = to_complex(g.det());
  const FloatComplex disc = std::sqrt(tr * tr - 4.0 * det);
  const FloatComplex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
  if (std::abs(l1 - l2) <= tol * std::max(1.0, std::abs(l1)))
    throw std::domain_error("eigenvalue check unsupported: g has a repeated eigenvalue");

  Eigen::MatrixXcd dense(level + 1, level + 1);
  for (unsigned r = 0; r <= level; ++r)
    for (unsigned c = 0; c <= level; ++c) dense(r, c) = to_complex(m(r, c));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(dense, false);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) rep.computed.push_back(solver.eigenvalues()[i]);
  for (unsigned k = 0; k <= level; ++k)
    rep.expected.push_back(std::pow(l1, static_cast<int>(k)) * std::pow(l2, static_cast<int>(level - k)));
  rep.pass = detail::same_multiset(rep.expected, rep.computed, [&](const FloatComplex& a, const FloatComplex& b) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
  });
  rep.note = "generic g: double-precision eigenvalues, tolerance 1e-9";
  return rep;
}

/// det M(g, L) == det(g)^{L(L+1)/2}.
template <Scalar C>
bool determinant_law_holds(const GL2<C>& g, unsigned level) {
  return near(determinant(rep_matrix(g, level).entries), power(g.det(), level * (level + 1) / 2));
}

}  // namespace hdef
