#pragma once

// Formal power series in (u, ubar) truncated at total order N, with polynomial
// coefficients. Used to expand generating functions exactly.

#include <map>
#include <stdexcept>
#include <vector>

#include "hdef/poly.hpp"

namespace hdef {

template <class P>
class SeriesTruncation {
 public:
  using poly_type = P;
  using scalar_type = typename P::scalar_type;

  explicit SeriesTruncation(unsigned order) : order_(order) {}

  unsigned order() const { return order_; }
  const std::map<Exponent2, P>& coefficients() const { return coeffs_; }

  /// Coefficient of u^k ubar^l (zero polynomial when absent or beyond the order).
  P coefficient(unsigned k, unsigned l) const {
    auto it = coeffs_.find({k, l});
    return it == coeffs_.end() ? P{} : it->second;
  }

  void add(unsigned k, unsigned l, const P& p) {
    if (k + l > order_ || p.is_zero()) return;
    auto& slot = coeffs_[{k, l}];
    slot += p;
    if (slot.is_zero()) coeffs_.erase({k, l});
  }

  SeriesTruncation& operator+=(const SeriesTruncation& o) {
    check_order(o);
    for (const auto& [e, p] : o.coeffs_) add(e.first, e.second, p);
    return *this;
  }
  SeriesTruncation& operator*=(const scalar_type& s) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend SeriesTruncation operator+(SeriesTruncation a, const SeriesTruncation& b) { return a += b; }

  friend SeriesTruncation operator*(const SeriesTruncation& a, const SeriesTruncation& b) {
    a.check_order(b);
    SeriesTruncation r(a.order_);
    for (const auto& [ea, pa] : a.coeffs_)
      for (const auto& [eb, pb] : b.coeffs_)
        if (ea.total() + eb.total() <= a.order_) r.add(ea.first + eb.first, ea.second + eb.second, pa * pb);
    return r;
  }

  friend bool operator==(const SeriesTruncation& a, const SeriesTruncation& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Same series cut to a lower order.
  SeriesTruncation truncated(unsigned order) const {
    SeriesTruncation r(std::min(order, order_));
    for (const auto& [e, p] : coeffs_) r.add(e.first, e.second, p);
    return r;
  }

 private:
  void check_order(const SeriesTruncation& o) const {
    if (o.order_ != order_) throw std::invalid_argument("series truncation orders differ");
  }

  unsigned order_;
  std::map<Exponent2, P> coeffs_;
};

/// exp(S) for a series without constant term: sum_{n <= N} S^n / n!.
template <class P>
SeriesTruncation<P> series_exp(const SeriesTruncation<P>& s) {
  using C = typename P::scalar_type;
  if (!s.coefficient(0, 0).is_zero()) throw std::invalid_argument("series_exp needs a vanishing constant term");
  SeriesTruncation<P> result(s.order());
  result.add(0, 0, P::constant(from_int<C>(1)));
  SeriesTruncation<P> term = result;
  for (unsigned n = 1; n <= s.order(); ++n) {
    term = term * s;
    term *= from_rational<C>(Rational(1, n));
    result += term;
  }
  return result;
}

/// F(a u + b ubar, c u + d ubar); linear forms keep the total order.
template <class P>
SeriesTruncation<P> substitute_linear(const SeriesTruncation<P>& f, const typename P::scalar_type& a,
                                      const typename P::scalar_type& b, const typename P::scalar_type& c,
                                      const typename P::scalar_type& d) {
  using C = typename P::scalar_type;
  const unsigned n = f.order();
  SeriesTruncation<P> v(n), w(n);
  v.add(1, 0, P::constant(a));
  v.add(0, 1, P::constant(b));
  w.add(1, 0, P::constant(c));
  w.add(0, 1, P::constant(d));

  std::vector<SeriesTruncation<P>> v_pow{SeriesTruncation<P>(n)}, w_pow{SeriesTruncation<P>(n)};
  v_pow[0].add(0, 0, P::constant(from_int<C>(1)));
  w_pow[0].add(0, 0, P::constant(from_int<C>(1)));
  for (unsigned k = 1; k <= n; ++k) {
    v_pow.push_back(v_pow.back() * v);
    w_pow.push_back(w_pow.back() * w);
  }

  SeriesTruncation<P> out(n);
  for (const auto& [e, p] : f.coefficients()) {
    SeriesTruncation<P> mono = v_pow[e.first] * w_pow[e.second];
    for (const auto& [em, pm] : mono.coefficients()) out.add(em.first, em.second, p * pm);
  }
  return out;
}

/// k! l! times the u^k ubar^l coefficient: the polynomial a generating
/// function of the form sum P_{k,l} u^k ubar^l / (k! l!) attaches to (k, l).
template <class P>
P scaled_coefficient(const SeriesTruncation<P>& s, unsigned k, unsigned l) {
  using C = typename P::scalar_type;
  return s.coefficient(k, l) * from_rational<C>(factorial(k) * factorial(l));
}

}  // namespace hdef
