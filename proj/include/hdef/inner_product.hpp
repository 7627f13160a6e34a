#pragma once

// Exact Gaussian-measure inner products.
//
// Complex plane: <p, q> = int conj(p) q dnu,  dnu = e^{-|z|^2} dx dy / pi.
// From int z^m zbar^n dnu = n! [m == n] the monomial rule is
//   <z^a zbar^b, z^c zbar^d> = (b + c)! [b + c == a + d].
//
// Real line: int p q e^{-x^2} dx is returned as (rational) * sqrt(pi), using
//   int x^{2k} e^{-x^2} dx = sqrt(pi) (2k-1)!! / 2^k, odd moments zero.

#include <stdexcept>

#include "hdef/poly.hpp"

namespace hdef {

template <Scalar C>
C inner_product(const BiPoly<C>& p, const BiPoly<C>& q) {
  C sum{};
  for (const auto& [ep, cp] : p.terms()) {
    C cbar = conjugate(cp);
    for (const auto& [eq, cq] : q.terms()) {
      unsigned zbar_power = ep.first + eq.second;  // conj(z^a zbar^b) = zbar^a z^b
      unsigned z_power = ep.second + eq.first;
      if (z_power != zbar_power) continue;
      sum += cbar * cq * from_rational<C>(factorial(z_power));
    }
  }
  return sum;
}

/// rational_part * sqrt(pi)^sqrt_pi_power.
template <Scalar C>
struct SqrtPiMultiple {
  C rational_part{};
  int sqrt_pi_power = 1;

  double value() const { return to_complex(rational_part).real() * std::pow(std::sqrt(M_PI), sqrt_pi_power); }
  friend bool operator==(const SqrtPiMultiple& a, const SqrtPiMultiple& b) {
    if (is_zero(a.rational_part) && is_zero(b.rational_part)) return true;
    return a.rational_part == b.rational_part && a.sqrt_pi_power == b.sqrt_pi_power;
  }
};

namespace detail {
/// (2k-1)!! / 2^k for moment order 2k.
inline Rational even_gaussian_moment(unsigned two_k) {
  Rational m(1);
  for (unsigned j = 1; j < two_k; j += 2) m *= Rational(j);
  return m / Rational(mpz_class(1) << (two_k / 2));
}

template <Scalar C>
int univariate_variable(const RealPoly<C>& p) {
  bool uses_first = false, uses_second = false;
  for (const auto& [e, c] : p.terms()) {
    uses_first |= e.first > 0;
    uses_second |= e.second > 0;
  }
  if (uses_first && uses_second) return -1;
  return uses_second ? 2 : (uses_first ? 1 : 0);
}
}  // namespace detail

/// int p(x) q(x) e^{-x^2} dx for univariate p, q in the same variable.
template <Scalar C>
SqrtPiMultiple<C> real_inner_product(const RealPoly<C>& p, const RealPoly<C>& q) {
  int vp = detail::univariate_variable(p);
  int vq = detail::univariate_variable(q);
  if (vp < 0 || vq < 0 || (vp > 0 && vq > 0 && vp != vq))
    throw std::invalid_argument("real_inner_product: polynomials must be univariate in the same variable");

  C sum{};
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      unsigned deg = ep.total() + eq.total();
      if (deg % 2 != 0) continue;
      sum += cp * cq * from_rational<C>(detail::even_gaussian_moment(deg));
    }
  return {sum, 1};
}

}  // namespace hdef
