#pragma once

// Sparse polynomials in two indeterminates.
//
// BiPoly<C>   polynomials in the conjugate pair (z, zbar)
// RealPoly<C> polynomials in two real variables (x1, x2)
//
// Terms live in an ordered map keyed by the exponent pair; zero coefficients
// are never stored, so structural equality is mathematical equality.
// Iteration order is canonical: by total degree, then by first-variable degree.

#include <compare>
#include <map>
#include <sstream>
#include <string>

#include "hdef/scalar.hpp"

namespace hdef {

struct Exponent2 {
  unsigned first = 0;
  unsigned second = 0;

  unsigned total() const { return first + second; }

  friend bool operator==(const Exponent2&, const Exponent2&) = default;
  friend std::strong_ordering operator<=>(const Exponent2& a, const Exponent2& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.first <=> b.first;
  }
};

enum class Var { first, second };

struct ConjugateVariables {
  static constexpr const char* first_key = "z";
  static constexpr const char* second_key = "zbar";
  static constexpr const char* first_pretty = "z";
  static constexpr const char* second_pretty = "z~";
};

struct RealVariables {
  static constexpr const char* first_key = "x1";
  static constexpr const char* second_key = "x2";
  static constexpr const char* first_pretty = "x1";
  static constexpr const char* second_pretty = "x2";
};

template <Scalar C, class Vars>
class Poly2 {
 public:
  using scalar_type = C;
  using variables = Vars;
  using term_map = std::map<Exponent2, C>;

  Poly2() = default;

  static Poly2 constant(const C& c) { return monomial(0, 0, c); }
  static Poly2 monomial(unsigned a, unsigned b, const C& c = from_int<C>(1)) {
    Poly2 p;
    p.add_term({a, b}, c);
    return p;
  }

  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(unsigned a, unsigned b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? C{} : it->second;
  }

  /// Highest total degree, -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.total()); }

  bool is_homogeneous(unsigned degree) const {
    for (const auto& [e, c] : terms_)
      if (e.total() != degree) return false;
    return true;
  }

  void add_term(const Exponent2& e, const C& c) {
    if (is_zero_coefficient(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coefficient(it->second)) terms_.erase(it);
    }
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly2& operator*=(const C& s) {
    if (is_zero_coefficient(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(Poly2 a) { return a *= from_int<C>(-1); }
  friend Poly2 operator*(Poly2 a, const C& s) { return a *= s; }
  friend Poly2 operator*(const C& s, Poly2 a) { return a *= s; }

  friend Poly2 operator*(const Poly2& p, const Poly2& q) {
    Poly2 r;
    for (const auto& [e1, c1] : p.terms_)
      for (const auto& [e2, c2] : q.terms_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Multiplication by first^a second^b.
  Poly2 shifted(unsigned a, unsigned b) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent2{e.first + a, e.second + b}, c);
    return r;
  }

  /// Formal partial derivative of the given order.
  Poly2 diff(Var v, unsigned order = 1) const {
    if (order == 0) return *this;
    Poly2 r;
    for (const auto& [e, c] : terms_) {
      unsigned d = v == Var::first ? e.first : e.second;
      if (d < order) continue;
      // falling factorial d (d-1) ... (d-order+1)
      Rational f(1);
      for (unsigned k = 0; k < order; ++k) f *= Rational(d - k);
      Exponent2 ne = e;
      (v == Var::first ? ne.first : ne.second) -= order;
      r.add_term(ne, c * from_rational<C>(f));
    }
    return r;
  }

  /// Exchanges the roles of the two variables; coefficients untouched.
  Poly2 swapped() const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent2{e.second, e.first}, c);
    return r;
  }

  template <class F>
  Poly2 map_coefficients(F&& f) const {
    Poly2 r;
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Numerical evaluation at (first, second).
  FloatComplex evaluate(FloatComplex x, FloatComplex y) const {
    FloatComplex sum{};
    for (const auto& [e, c] : terms_)
      sum += to_complex(c) * std::pow(x, static_cast<int>(e.first)) * std::pow(y, static_cast<int>(e.second));
    return sum;
  }

  /// Human-readable form, e.g. "z^2 z~ - 2 z".
  std::string pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coeff = to_string(c);
      bool negative = !coeff.empty() && coeff.front() == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
      if (negative) coeff.erase(0, 1);
      if (coeff.find_first_of("+-", 1) != std::string::npos) coeff = "(" + coeff + ")";
      if (first_term)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first_term = false;
      bool unit = coeff == "1";
      if (!unit || e.total() == 0) os << coeff;
      auto emit = [&](const char* name, unsigned power, bool need_space) {
        if (power == 0) return;
        if (need_space) os << " ";
        os << name;
        if (power > 1) os << "^" << power;
      };
      emit(Vars::first_pretty, e.first, !unit);
      emit(Vars::second_pretty, e.second, !unit || e.first > 0);
    }
    return os.str();
  }

 private:
  static bool is_zero_coefficient(const C& c) { return hdef::is_zero(c); }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = is_zero_coefficient(it->second) ? terms_.erase(it) : std::next(it);
  }

  term_map terms_;
};

template <Scalar C>
using BiPoly = Poly2<C, ConjugateVariables>;
template <Scalar C>
using RealPoly = Poly2<C, RealVariables>;

namespace vars {
inline constexpr Var z = Var::first;
inline constexpr Var zbar = Var::second;
inline constexpr Var x1 = Var::first;
inline constexpr Var x2 = Var::second;
}  // namespace vars

template <Scalar C>
BiPoly<C> z_poly() {
  return BiPoly<C>::monomial(1, 0);
}
template <Scalar C>
BiPoly<C> zbar_poly() {
  return BiPoly<C>::monomial(0, 1);
}

/// Complex conjugate of p(z, zbar): conjugated coefficients, exchanged variables.
template <Scalar C>
BiPoly<C> conj(const BiPoly<C>& p) {
  return p.swapped().map_coefficients([](const C& c) { return conjugate(c); });
}

/// Product p*q (free-function spelling used by the operation tables).
template <Scalar C, class Vars>
Poly2<C, Vars> poly_mul(const Poly2<C, Vars>& p, const Poly2<C, Vars>& q) {
  return p * q;
}

template <Scalar C, class Vars>
Poly2<C, Vars> poly_diff(const Poly2<C, Vars>& p, Var v, unsigned order = 1) {
  return p.diff(v, order);
}

/// Max |coefficient difference| <= tol * max(1, max |coefficient|); exact mode is equality.
template <Scalar C, class Vars>
bool near(const Poly2<C, Vars>& a, const Poly2<C, Vars>& b, double tol = kFloatTolerance) {
  if constexpr (is_exact_v<C>) {
    return a == b;
  } else {
    double scale = 1.0;
    for (const auto& [e, c] : b.terms()) scale = std::max(scale, magnitude(c));
    Poly2<C, Vars> d = a - b;
    for (const auto& [e, c] : d.terms())
      if (magnitude(c) > tol * scale) return false;
    return true;
  }
}

}  // namespace hdef
