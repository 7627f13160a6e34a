#pragma once

// Two-boson Weyl algebra in normal order.
//
// A WeylOp is a finite sum of words (a1^+)^c1 (a2^+)^c2 (a1)^d1 (a2)^d2 with
// [a_i, a_j^+] = delta_ij and all other pairs commuting. Products are
// normal-ordered eagerly, so two operators are equal iff their term maps are.
//
// apply() realizes the algebra on polynomials in (z, zbar):
//   a1 = d/dz,  a1^+ = z - d/dzbar,  a2 = d/dzbar,  a2^+ = zbar - d/dz.

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <sstream>
#include <string>

#include "hdef/poly.hpp"

namespace hdef {

struct WeylWord {
  unsigned c1 = 0;  // a1^+ power
  unsigned c2 = 0;  // a2^+ power
  unsigned d1 = 0;  // a1 power
  unsigned d2 = 0;  // a2 power

  unsigned degree() const { return c1 + c2 + d1 + d2; }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend std::strong_ordering operator<=>(const WeylWord& a, const WeylWord& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::tie(a.c1, a.c2, a.d1, a.d2) <=> std::tie(b.c1, b.c2, b.d1, b.d2);
  }
};

template <Scalar C>
class WeylOp {
 public:
  using scalar_type = C;
  using term_map = std::map<WeylWord, C>;

  WeylOp() = default;

  static WeylOp identity() { return scalar(from_int<C>(1)); }
  static WeylOp scalar(const C& c) { return word({}, c); }
  static WeylOp word(const WeylWord& w, const C& c = from_int<C>(1)) {
    WeylOp op;
    op.add_term(w, c);
    return op;
  }
  /// a_i^+ for mode i in {1, 2}.
  static WeylOp creation(int mode) {
    check_mode(mode);
    return word(mode == 1 ? WeylWord{1, 0, 0, 0} : WeylWord{0, 1, 0, 0});
  }
  /// a_i for mode i in {1, 2}.
  static WeylOp annihilation(int mode) {
    check_mode(mode);
    return word(mode == 1 ? WeylWord{0, 0, 1, 0} : WeylWord{0, 0, 0, 1});
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const WeylWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C{} : it->second;
  }

  /// If the operator is a multiple of the identity, that multiple.
  std::optional<C> as_scalar() const {
    if (terms_.empty()) return C{};
    if (terms_.size() == 1 && terms_.begin()->first == WeylWord{}) return terms_.begin()->second;
    return std::nullopt;
  }

  void add_term(const WeylWord& w, const C& c) {
    if (hdef::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (hdef::is_zero(it->second)) terms_.erase(it);
    }
  }

  WeylOp& operator+=(const WeylOp& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  WeylOp& operator-=(const WeylOp& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  WeylOp& operator*=(const C& s) {
    term_map scaled;
    for (const auto& [w, c] : terms_) {
      C v = c * s;
      if (!hdef::is_zero(v)) scaled.emplace(w, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator-(WeylOp a) { return a *= from_int<C>(-1); }
  friend WeylOp operator*(WeylOp a, const C& s) { return a *= s; }
  friend WeylOp operator*(const C& s, WeylOp a) { return a *= s; }
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.terms_ == b.terms_; }

  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    WeylOp r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) multiply_words(wa, wb, ca * cb, r);
    return r;
  }
  WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }

  std::string pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      auto emit = [&](const char* name, unsigned p) {
        if (p == 0) return;
        os << " " << name;
        if (p > 1) os << "^" << p;
      };
      emit("a1+", w.c1);
      emit("a2+", w.c2);
      emit("a1", w.d1);
      emit("a2", w.d2);
    }
    return os.str();
  }

 private:
  static void check_mode(int mode) {
    if (mode != 1 && mode != 2) throw std::invalid_argument("boson mode must be 1 or 2");
  }

  // Modes commute, so a normal-ordered word factorizes as
  // [(a1^+)^c1 a1^d1] [(a2^+)^c2 a2^d2] and each mode is reordered separately with
  //   a^d (a^+)^e = sum_k C(d,k) C(e,k) k! (a^+)^{e-k} a^{d-k}.
  static void multiply_words(const WeylWord& x, const WeylWord& y, const C& coeff, WeylOp& out) {
    unsigned k1_max = std::min(x.d1, y.c1);
    unsigned k2_max = std::min(x.d2, y.c2);
    for (unsigned k1 = 0; k1 <= k1_max; ++k1) {
      Rational w1 = binomial(x.d1, k1) * binomial(y.c1, k1) * factorial(k1);
      for (unsigned k2 = 0; k2 <= k2_max; ++k2) {
        Rational w2 = binomial(x.d2, k2) * binomial(y.c2, k2) * factorial(k2);
        WeylWord w{x.c1 + y.c1 - k1, x.c2 + y.c2 - k2, x.d1 + y.d1 - k1, x.d2 + y.d2 - k2};
        out.add_term(w, coeff * from_rational<C>(w1 * w2));
      }
    }
  }

  term_map terms_;
};

template <Scalar C>
WeylOp<C> weyl_mul(const WeylOp<C>& a, const WeylOp<C>& b) {
  return a * b;
}

template <Scalar C>
WeylOp<C> commutator(const WeylOp<C>& a, const WeylOp<C>& b) {
  return a * b - b * a;
}

/// Formal adjoint: (a^+)^c a^d -> (a^+)^d a^c with conjugated coefficient.
template <Scalar C>
WeylOp<C> dagger(const WeylOp<C>& a) {
  WeylOp<C> r;
  for (const auto& [w, c] : a.terms()) r.add_term({w.d1, w.d2, w.c1, w.c2}, conjugate(c));
  return r;
}

template <Scalar C>
bool near(const WeylOp<C>& a, const WeylOp<C>& b, double tol = kFloatTolerance) {
  if constexpr (is_exact_v<C>) {
    return a == b;
  } else {
    double scale = 1.0;
    for (const auto& [w, c] : b.terms()) scale = std::max(scale, magnitude(c));
    const WeylOp<C> diff = a - b;
    for (const auto& [w, c] : diff.terms())
      if (magnitude(c) > tol * scale) return false;
    return true;
  }
}

namespace detail {
template <Scalar C>
BiPoly<C> raise1(const BiPoly<C>& p) {  // (z - d/dzbar) p
  return p.shifted(1, 0) - p.diff(vars::zbar);
}
template <Scalar C>
BiPoly<C> raise2(const BiPoly<C>& p) {  // (zbar - d/dz) p
  return p.shifted(0, 1) - p.diff(vars::z);
}
}  // namespace detail

/// Image of p under the operator in the (z, zbar) realization.
template <Scalar C>
BiPoly<C> apply(const WeylOp<C>& op, const BiPoly<C>& p) {
  BiPoly<C> result;
  for (const auto& [w, c] : op.terms()) {
    BiPoly<C> q = p.diff(vars::z, w.d1).diff(vars::zbar, w.d2);
    for (unsigned k = 0; k < w.c2 && !q.is_zero(); ++k) q = detail::raise2(q);
    for (unsigned k = 0; k < w.c1 && !q.is_zero(); ++k) q = detail::raise1(q);
    result += q * c;
  }
  return result;
}

/// Operator power by repeated multiplication.
template <Scalar C>
WeylOp<C> power(const WeylOp<C>& a, unsigned n) {
  WeylOp<C> r = WeylOp<C>::identity();
  for (unsigned k = 0; k < n; ++k) r = r * a;
  return r;
}

}  // namespace hdef
