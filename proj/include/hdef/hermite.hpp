#pragma once

// Real and complex Hermite polynomials.
//
// Complex Hermite polynomials are built three independent ways:
//   complex_hermite_sum        explicit finite sum
//   complex_hermite_rodrigues  e^{|z|^2} derivatives of e^{-|z|^2}
//   complex_hermite_operator   creation operators applied to the vacuum
// All routes return the integer-coefficient H_{m,n}; the normalized
// h_{m,n} = H_{m,n} / sqrt(m! n!) is represented by Normalized{H, m! n!}.

#include <map>
#include <utility>

#include "hdef/series.hpp"
#include "hdef/weyl.hpp"

namespace hdef {

/// scaled / sqrt(norm_squared), with the square root kept symbolic.
template <Scalar C>
struct Normalized {
  BiPoly<C> scaled;
  Rational norm_squared{1};

  friend bool operator==(const Normalized&, const Normalized&) = default;
};

/// H_{m,n} = sum_j (-1)^j m! n! / (j! (m-j)! (n-j)!) z^{m-j} zbar^{n-j}.
template <Scalar C>
Normalized<C> complex_hermite_sum(unsigned m, unsigned n) {
  BiPoly<C> h;
  const Rational mn = factorial(m) * factorial(n);
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    Rational c = mn / (factorial(j) * factorial(m - j) * factorial(n - j));
    if (j % 2 == 1) c = -c;
    h.add_term({m - j, n - j}, from_rational<C>(c));
  }
  return {std::move(h), factorial(m) * factorial(n)};
}

/// (-1)^{m+n} e^{z zbar} d_z^m d_zbar^n e^{-z zbar}, with P e^{-z zbar} tracked
/// through d_z: P -> P_z - zbar P and d_zbar: P -> P_zbar - z P.
/// That expression equals H_{m,n}(zbar, z), so the variables are exchanged
/// at the end to return H_{m,n}(z, zbar).
template <Scalar C>
Normalized<C> complex_hermite_rodrigues(unsigned m, unsigned n) {
  BiPoly<C> p = BiPoly<C>::constant(from_int<C>(1));
  for (unsigned k = 0; k < m; ++k) p = p.diff(vars::z) - p.shifted(0, 1);
  for (unsigned k = 0; k < n; ++k) p = p.diff(vars::zbar) - p.shifted(1, 0);
  if ((m + n) % 2 == 1) p *= from_int<C>(-1);
  return {p.swapped(), factorial(m) * factorial(n)};
}

/// (a1^+)^m (a2^+)^n applied to the constant 1.
template <Scalar C>
Normalized<C> complex_hermite_operator(unsigned m, unsigned n) {
  WeylOp<C> word = WeylOp<C>::word({m, n, 0, 0});
  return {hdef::apply(word, BiPoly<C>::constant(from_int<C>(1))), factorial(m) * factorial(n)};
}

/// Physicists' Hermite polynomial in x1 via H_{n+1} = 2x H_n - 2n H_{n-1}.
template <Scalar C>
RealPoly<C> real_hermite(unsigned n) {
  RealPoly<C> prev = RealPoly<C>::constant(from_int<C>(1));
  if (n == 0) return prev;
  RealPoly<C> cur = RealPoly<C>::monomial(1, 0, from_int<C>(2));
  for (unsigned k = 1; k < n; ++k) {
    RealPoly<C> next = cur.shifted(1, 0) * from_int<C>(2) - prev * from_int<C>(2 * static_cast<long>(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// H_n(x2): the same polynomial in the second real variable.
template <Scalar C>
RealPoly<C> real_hermite_second(unsigned n) {
  return real_hermite<C>(n).swapped();
}

/// All H_{m,n} with m + n <= max_level, keyed (m, n).
template <Scalar C>
class HermiteTable {
 public:
  explicit HermiteTable(unsigned max_level) : max_level_(max_level) {
    for (unsigned level = 0; level <= max_level; ++level)
      for (unsigned m = 0; m <= level; ++m) entries_.emplace(std::pair{m, level - m}, complex_hermite_sum<C>(m, level - m));
  }

  unsigned max_level() const { return max_level_; }
  const Normalized<C>& at(unsigned m, unsigned n) const { return entries_.at({m, n}); }
  const BiPoly<C>& scaled(unsigned m, unsigned n) const { return at(m, n).scaled; }

  /// Entries ordered by (m + n, m).
  std::vector<std::pair<std::pair<unsigned, unsigned>, const Normalized<C>*>> ordered() const {
    std::vector<std::pair<std::pair<unsigned, unsigned>, const Normalized<C>*>> out;
    for (unsigned level = 0; level <= max_level_; ++level)
      for (unsigned m = 0; m <= level; ++m) out.push_back({{m, level - m}, &entries_.at({m, level - m})});
    return out;
  }

 private:
  unsigned max_level_;
  std::map<std::pair<unsigned, unsigned>, Normalized<C>> entries_;
};

/// exp(u z + ubar zbar - u ubar) to total order N; k! l! [u^k ubar^l] = H_{k,l}.
template <Scalar C>
SeriesTruncation<BiPoly<C>> generating_series_complex(unsigned order) {
  SeriesTruncation<BiPoly<C>> arg(order);
  arg.add(1, 0, z_poly<C>());
  arg.add(0, 1, zbar_poly<C>());
  arg.add(1, 1, BiPoly<C>::constant(from_int<C>(-1)));
  return series_exp(arg);
}

/// exp(2 u x1 - u^2 + 2 ubar x2 - ubar^2) to total order N;
/// k! l! [u^k ubar^l] = H_k(x1) H_l(x2).
template <Scalar C>
SeriesTruncation<RealPoly<C>> generating_series_real(unsigned order) {
  SeriesTruncation<RealPoly<C>> arg(order);
  arg.add(1, 0, RealPoly<C>::monomial(1, 0, from_int<C>(2)));
  arg.add(2, 0, RealPoly<C>::constant(from_int<C>(-1)));
  arg.add(0, 1, RealPoly<C>::monomial(0, 1, from_int<C>(2)));
  arg.add(0, 2, RealPoly<C>::constant(from_int<C>(-1)));
  return series_exp(arg);
}

}  // namespace hdef
