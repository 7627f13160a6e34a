#pragma once

// Coefficient fields used throughout the library.
//
// Every polynomial and operator type is templated on its coefficient field.
// Two fields are provided:
//   ExactComplex   Gaussian rationals (re + i*im, both arbitrary precision)
//   FloatComplex   std::complex<double>
// The exact field makes every identity check a literal equality test; the
// float field exists for irrational parameter points and numerical oracles.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hdef {

using Rational = mpq_class;

/// Raised when an exact-mode computation would need an irrational value.
class ExactnessError : public std::domain_error {
 public:
  explicit ExactnessError(const std::string& what)
      : std::domain_error(what + " (use the float backend for irrational parameters)") {}
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

/// Exact square root of a nonnegative rational, if it is rational.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

/// "p/q" (or "p") with canonical sign and reduced terms.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw std::invalid_argument("not a rational of the form p/q: '" + std::string(text) + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational of the form p/q: '" + std::string(text) + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

/// Always "num/den", the serialized form.
inline std::string to_fraction_string(Rational r) {
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Gaussian rational re + i*im.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  // mpq_class(p, q) does not reduce, so every entry point canonicalizes.
  ExactComplex(Rational r) : re(std::move(r)) { re.canonicalize(); }  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& c) {
    if (sgn(c.im) == 0) return os << c.re.get_str();
    if (sgn(c.re) == 0) return os << c.im.get_str() << "i";
    os << "(" << c.re.get_str() << (sgn(c.im) > 0 ? "+" : "") << c.im.get_str() << "i)";
    return os;
  }
};

using FloatComplex = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<ExactComplex> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static ExactComplex from_rational(const Rational& re, const Rational& im = Rational(0)) {
    return {re, im};
  }
  static ExactComplex conj(const ExactComplex& c) { return {c.re, -c.im}; }
  static bool is_zero(const ExactComplex& c) { return c.is_zero(); }
  static bool near(const ExactComplex& a, const ExactComplex& b, double /*tol*/) { return a == b; }
  static double abs(const ExactComplex& c) { return std::abs(to_complex(c)); }
  static FloatComplex to_complex(const ExactComplex& c) { return {c.re.get_d(), c.im.get_d()}; }
  /// Square root of a real nonnegative value; nullopt if irrational.
  static std::optional<ExactComplex> real_sqrt(const ExactComplex& c) {
    if (!c.is_real()) return std::nullopt;
    auto r = rational_sqrt(c.re);
    if (!r) return std::nullopt;
    return ExactComplex(*r);
  }
};

template <>
struct scalar_traits<FloatComplex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static FloatComplex from_rational(const Rational& re, const Rational& im = Rational(0)) {
    return {re.get_d(), im.get_d()};
  }
  static FloatComplex conj(const FloatComplex& c) { return std::conj(c); }
  static bool is_zero(const FloatComplex& c) { return c == FloatComplex{}; }
  static bool near(const FloatComplex& a, const FloatComplex& b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
  }
  static double abs(const FloatComplex& c) { return std::abs(c); }
  static FloatComplex to_complex(const FloatComplex& c) { return c; }
  static std::optional<FloatComplex> real_sqrt(const FloatComplex& c) {
    if (c.real() < 0) return std::nullopt;
    return FloatComplex(std::sqrt(c.real()), 0.0);
  }
};

template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { scalar_traits<T>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
};

template <Scalar C>
inline constexpr bool is_exact_v = scalar_traits<C>::exact;

/// Default tolerance for float-backend identity checks.
inline constexpr double kFloatTolerance = 1e-9;

template <Scalar C>
C from_rational(const Rational& re, const Rational& im = Rational(0)) {
  return scalar_traits<C>::from_rational(re, im);
}
template <Scalar C>
C from_int(long v) {
  return scalar_traits<C>::from_rational(Rational(v));
}
template <Scalar C>
C imag_unit() {
  return scalar_traits<C>::from_rational(Rational(0), Rational(1));
}
template <Scalar C>
C conjugate(const C& c) {
  return scalar_traits<C>::conj(c);
}
template <Scalar C>
bool is_zero(const C& c) {
  return scalar_traits<C>::is_zero(c);
}
template <Scalar C>
bool near(const C& a, const C& b, double tol = kFloatTolerance) {
  return scalar_traits<C>::near(a, b, tol);
}
template <Scalar C>
double magnitude(const C& c) {
  return scalar_traits<C>::abs(c);
}
template <Scalar C>
FloatComplex to_complex(const C& c) {
  return scalar_traits<C>::to_complex(c);
}
template <Scalar C>
C power(C base, unsigned e) {
  C result = from_int<C>(1);
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

/// Exact-mode zero test, float-mode |c| <= tol.
template <Scalar C>
bool negligible(const C& c, double tol = kFloatTolerance) {
  if constexpr (is_exact_v<C>)
    return is_zero(c);
  else
    return magnitude(c) <= tol;
}

/// Parses "p/q", "p/q i", "a/b+c/d i", "-i", "2i" into a Gaussian rational.
inline ExactComplex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_imag = [&](std::string part) -> Rational {
    part.pop_back();  // trailing 'i'
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return parse_rational(part);
  };

  if (s.back() != 'i') return ExactComplex(parse_rational(s));

  // Split at the last sign that is not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), parse_imag(s)};
  return {parse_rational(s.substr(0, split)), parse_imag(s.substr(split))};
}

inline std::string to_string(const ExactComplex& c) {
  std::string out;
  if (sgn(c.im) == 0) return c.re.get_str();
  std::string im = c.im.get_str();
  if (c.im == 1) im = "";
  if (c.im == -1) im = "-";
  if (sgn(c.re) == 0) return im + "i";
  return c.re.get_str() + (sgn(c.im) > 0 ? "+" : "") + im + "i";
}

inline std::string to_string(const FloatComplex& c) {
  char buf[96];
  if (c.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  else
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

}  // namespace hdef
