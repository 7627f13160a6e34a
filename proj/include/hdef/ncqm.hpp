#pragma once

// Noncommutative quantum mechanics: the hermitian alpha-family of deformation
// matrices and the (Q, P) representation built from canonical (q, p).

#include <string>

#include "hdef/deformation.hpp"
#include "hdef/report.hpp"

namespace hdef {

/// alpha real, 0 < |alpha| < 1; beta = i sqrt(1 - alpha^2); theta = 2 alpha sqrt(1 - alpha^2).
template <Scalar C>
struct AlphaPoint {
  C alpha;
  C root;  // sqrt(1 - alpha^2)
  C beta;
  C theta;

  static AlphaPoint from(const C& alpha) {
    if (!negligible(alpha - conjugate(alpha), 0.0))
      throw std::domain_error("alpha must be real");
    const double a = to_complex(alpha).real();
    if (!(std::abs(a) > 0.0 && std::abs(a) < 1.0)) throw std::domain_error("alpha must satisfy 0 < |alpha| < 1");
    auto root = scalar_traits<C>::real_sqrt(from_int<C>(1) - alpha * alpha);
    if (!root) throw ExactnessError("sqrt(1 - alpha^2) is irrational for alpha = " + to_string(alpha));
    return {alpha, *root, imag_unit<C>() * *root, from_int<C>(2) * alpha * *root};
  }
};

/// [[alpha, beta], [conj(beta), alpha]].
template <Scalar C>
GL2<C> alpha_matrix(const AlphaPoint<C>& p) {
  return {p.alpha, p.beta, conjugate(p.beta), p.alpha};
}

/// [[alpha, -beta], [-conj(beta), alpha]]; g' g = det(g) I.
template <Scalar C>
GL2<C> alpha_partner_matrix(const AlphaPoint<C>& p) {
  return {p.alpha, -p.beta, -conjugate(p.beta), p.alpha};
}

/// a_i^{alpha+} from the matrix entries directly (no invertibility needed).
template <Scalar C>
WeylOp<C> alpha_creation(const AlphaPoint<C>& p, int mode) {
  return mode == 1 ? deformed_creation(p.alpha, conjugate(p.beta)) : deformed_creation(p.beta, p.alpha);
}
template <Scalar C>
WeylOp<C> alpha_annihilation(const AlphaPoint<C>& p, int mode) {
  return dagger(alpha_creation(p, mode));
}

namespace detail {
template <Scalar C>
void expect_scalar(SuiteReport& rep, std::string name, const WeylOp<C>& result, const C& expected) {
  bool ok = near(result, WeylOp<C>::scalar(expected));
  rep.add(std::move(name), ok, to_string(expected), result.pretty());
}
}  // namespace detail

/// [a_i^a, a_i^{a+}] = 1, [a_i^a, a_j^a] = 0, [a_1^a, a_2^{a+}] = i theta, plus
/// the creation-pair relation, the vacuum and theta consistency.
template <Scalar C>
SuiteReport ncqm_commutator_suite(const AlphaPoint<C>& p) {
  SuiteReport rep;
  rep.suite = "ncqm";
  const auto a1 = alpha_annihilation(p, 1), a2 = alpha_annihilation(p, 2);
  const auto c1 = alpha_creation(p, 1), c2 = alpha_creation(p, 2);
  const C one = from_int<C>(1);
  const C i_theta = imag_unit<C>() * p.theta;

  detail::expect_scalar(rep, "[a1^a, a1^a+] = 1", commutator(a1, c1), one);
  detail::expect_scalar(rep, "[a2^a, a2^a+] = 1", commutator(a2, c2), one);
  detail::expect_scalar(rep, "[a1^a, a2^a] = 0", commutator(a1, a2), C{});
  detail::expect_scalar(rep, "[a1^a, a2^a+] = i theta", commutator(a1, c2), i_theta);
  detail::expect_scalar(rep, "[a2^a, a1^a+] = -i theta", commutator(a2, c1), -i_theta);
  detail::expect_scalar(rep, "[a1^a+, a2^a+] = 0", commutator(c1, c2), C{});

  const auto vacuum = BiPoly<C>::constant(one);
  rep.add("a1^a 1 = 0", hdef::apply(a1, vacuum).is_zero(), "0", hdef::apply(a1, vacuum).pretty());
  rep.add("a2^a 1 = 0", hdef::apply(a2, vacuum).is_zero(), "0", hdef::apply(a2, vacuum).pretty());

  const auto extracted = commutator(a1, c2).as_scalar();
  const bool consistent = extracted && near(*extracted / imag_unit<C>(), p.theta);
  rep.add("theta = [a1^a, a2^a+] / i", consistent, to_string(p.theta),
          extracted ? to_string(*extracted / imag_unit<C>()) : "not a scalar");
  return rep;
}

/// WeylOp divided by sqrt(2)^sqrt2_power, the sqrt(2) kept symbolic.
template <Scalar C>
struct ScaledWeyl {
  WeylOp<C> op;
  unsigned sqrt2_power = 0;

  ScaledWeyl normalized() const {
    ScaledWeyl r = *this;
    while (r.sqrt2_power >= 2) {
      r.op *= from_rational<C>(Rational(1, 2));
      r.sqrt2_power -= 2;
    }
    if constexpr (!is_exact_v<C>) {
      if (r.sqrt2_power == 1) {
        r.op *= FloatComplex(1.0 / std::sqrt(2.0), 0.0);
        r.sqrt2_power = 0;
      }
    }
    return r;
  }
  /// Plain operator; fails in exact mode while an odd sqrt(2) remains.
  WeylOp<C> value() const {
    ScaledWeyl r = normalized();
    if (r.sqrt2_power != 0) throw ExactnessError("operator carries an irrational factor 1/sqrt(2)");
    return r.op;
  }

  friend ScaledWeyl operator+(const ScaledWeyl& a, const ScaledWeyl& b) {
    if (a.sqrt2_power != b.sqrt2_power) return {a.value() + b.value(), 0};
    return {a.op + b.op, a.sqrt2_power};
  }
  friend ScaledWeyl operator-(const ScaledWeyl& a, const ScaledWeyl& b) { return a + b * from_int<C>(-1); }
  friend ScaledWeyl operator*(const ScaledWeyl& a, const C& s) { return {a.op * s, a.sqrt2_power}; }
  friend ScaledWeyl operator*(const C& s, const ScaledWeyl& a) { return a * s; }
};

template <Scalar C>
ScaledWeyl<C> commutator(const ScaledWeyl<C>& a, const ScaledWeyl<C>& b) {
  return ScaledWeyl<C>{commutator(a.op, b.op), a.sqrt2_power + b.sqrt2_power}.normalized();
}

/// q_i = (a_i + a_i^+)/sqrt2
template <Scalar C>
ScaledWeyl<C> position_operator(int mode) {
  return {WeylOp<C>::annihilation(mode) + WeylOp<C>::creation(mode), 1};
}
/// p_i = (a_i - a_i^+)/(i sqrt2)
template <Scalar C>
ScaledWeyl<C> momentum_operator(int mode) {
  return {(WeylOp<C>::annihilation(mode) - WeylOp<C>::creation(mode)) * -imag_unit<C>(), 1};
}

enum class SignBranch { upper, lower };  // c = (1 +- sqrt(kappa))/2, d = (1 -+ sqrt(kappa))/theta

inline const char* to_string(SignBranch b) { return b == SignBranch::upper ? "upper" : "lower"; }

template <Scalar C>
struct QPParameters {
  C theta;
  C gamma;
  C kappa;       // 1 - gamma theta
  C sqrt_kappa;
  C c;
  C d;
  SignBranch branch = SignBranch::upper;

  static QPParameters from(const C& theta, const C& gamma, SignBranch branch) {
    if (negligible(theta, 0.0)) throw std::domain_error("theta must be nonzero");
    if (negligible(gamma * theta - from_int<C>(1), 0.0)) throw std::domain_error("gamma must differ from 1/theta");
    QPParameters q;
    q.theta = theta;
    q.gamma = gamma;
    q.branch = branch;
    q.kappa = from_int<C>(1) - gamma * theta;
    auto root = scalar_traits<C>::real_sqrt(q.kappa);
    if (!root) {
      if (to_complex(q.kappa).real() < 0) throw std::domain_error("kappa = 1 - gamma theta must be nonnegative");
      throw ExactnessError("sqrt(kappa) is irrational for kappa = " + to_string(q.kappa));
    }
    q.sqrt_kappa = *root;
    const C s = branch == SignBranch::upper ? q.sqrt_kappa : -q.sqrt_kappa;
    q.c = (from_int<C>(1) + s) / from_int<C>(2);
    q.d = (from_int<C>(1) - s) / theta;
    return q;
  }
};

/// Q1 = q1 - theta/2 p2, Q2 = q2 + theta/2 p1, P1 = c p1 + d q2, P2 = c p2 - d q1.
template <Scalar C>
struct QPOperators {
  ScaledWeyl<C> Q1, Q2, P1, P2;
};

template <Scalar C>
QPOperators<C> qp_operators(const QPParameters<C>& q) {
  const C half_theta = q.theta / from_int<C>(2);
  const auto q1 = position_operator<C>(1), q2 = position_operator<C>(2);
  const auto p1 = momentum_operator<C>(1), p2 = momentum_operator<C>(2);
  return {q1 - p2 * half_theta, q2 + p1 * half_theta, p1 * q.c + q2 * q.d, p2 * q.c - q1 * q.d};
}

/// A_i = (Q_i + i P_i)/sqrt2 (and the daggered combination), as plain operators.
template <Scalar C>
std::array<WeylOp<C>, 4> modified_bosons(const QPOperators<C>& ops) {
  const C i = imag_unit<C>();
  auto make = [&](const ScaledWeyl<C>& Q, const ScaledWeyl<C>& P, const C& sign) {
    ScaledWeyl<C> s = Q + P * (i * sign);
    s.sqrt2_power += 1;
    return s.value();
  };
  return {make(ops.Q1, ops.P1, from_int<C>(1)), make(ops.Q2, ops.P2, from_int<C>(1)),
          make(ops.Q1, ops.P1, from_int<C>(-1)), make(ops.Q2, ops.P2, from_int<C>(-1))};
}

namespace detail {
template <Scalar C>
void expect_scalar(SuiteReport& rep, std::string name, const ScaledWeyl<C>& result, const C& expected) {
  expect_scalar(rep, std::move(name), result.value(), expected);
}
}  // namespace detail

/// [Q_i, P_j] = i delta_ij, [Q1, Q2] = i theta, [P1, P2] = i gamma on both sign
/// branches; with theta == gamma also the modified boson relations.
template <Scalar C>
SuiteReport qp_representation_suite(const C& theta, const C& gamma) {
  SuiteReport rep;
  rep.suite = "qp";
  const C i = imag_unit<C>();
  for (SignBranch branch : {SignBranch::upper, SignBranch::lower}) {
    const auto params = QPParameters<C>::from(theta, gamma, branch);
    const auto ops = qp_operators(params);
    const std::string tag = std::string("[") + to_string(branch) + "] ";
    detail::expect_scalar(rep, tag + "[Q1, P1] = i", commutator(ops.Q1, ops.P1), i);
    detail::expect_scalar(rep, tag + "[Q2, P2] = i", commutator(ops.Q2, ops.P2), i);
    detail::expect_scalar(rep, tag + "[Q1, P2] = 0", commutator(ops.Q1, ops.P2), C{});
    detail::expect_scalar(rep, tag + "[Q2, P1] = 0", commutator(ops.Q2, ops.P1), C{});
    detail::expect_scalar(rep, tag + "[Q1, Q2] = i theta", commutator(ops.Q1, ops.Q2), i * theta);
    detail::expect_scalar(rep, tag + "[P1, P2] = i gamma", commutator(ops.P1, ops.P2), i * gamma);

    if (near(theta, gamma)) {
      const auto [A1, A2, A1d, A2d] = modified_bosons(ops);
      detail::expect_scalar(rep, tag + "[A1, A1+] = 1", commutator(A1, A1d), from_int<C>(1));
      detail::expect_scalar(rep, tag + "[A2, A2+] = 1", commutator(A2, A2d), from_int<C>(1));
      detail::expect_scalar(rep, tag + "[A1, A2] = 0", commutator(A1, A2), C{});
      detail::expect_scalar(rep, tag + "[A1+, A2+] = 0", commutator(A1d, A2d), C{});
      detail::expect_scalar(rep, tag + "[A1, A2+] = i theta", commutator(A1, A2d), i * theta);
    }
  }
  if (!near(theta, gamma)) rep.notes.push_back("theta != gamma: modified boson relations not applicable");
  return rep;
}

/// T(g', L) T(g, L) = det(g)^L I for the alpha-matrix g and its partner g',
/// and <h^{g'}_k, h^g_j> = det(g)^L delta_kj on each level.
template <Scalar C>
struct DualScalingReport {
  C delta{};
  std::vector<C> kappa;  // kappa_L = delta^L
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

template <Scalar C>
DualScalingReport<C> dual_matrix_scaling_check(const AlphaPoint<C>& p, unsigned max_level) {
  DualScalingReport<C> rep;
  const GL2<C> g = alpha_matrix(p), partner = alpha_partner_matrix(p);
  rep.delta = g.det();
  if (!near((partner * g).matrix(), GL2<C>::diagonal(rep.delta, rep.delta).matrix()))
    rep.failures.push_back("g' g != det(g) I");

  for (unsigned level = 0; level <= max_level; ++level) {
    const C kappa = power(rep.delta, level);
    rep.kappa.push_back(kappa);
    const Matrix<C> product = rep_matrix(partner, level).entries * rep_matrix(g, level).entries;
    if (!near(product, kappa * Matrix<C>::identity(level + 1)))
      rep.failures.push_back("M(g'," + std::to_string(level) + ") M(g," + std::to_string(level) + ") != Delta^L I");
    auto w = level_weights(level);
    for (unsigned k = 0; k <= level; ++k)
      for (unsigned j = 0; j <= level; ++j) {
        C v = inner_product(deformed_hermite(partner, k, level - k).scaled, deformed_hermite(g, j, level - j).scaled);
        C expected = k == j ? kappa * from_rational<C>(w[k]) : C{};
        if (!near(v, expected))
          rep.failures.push_back("<H^{g'}, H^g> level " + std::to_string(level) + " (" + std::to_string(k) + "," +
                                 std::to_string(j) + ")");
      }
  }
  return rep;
}

}  // namespace hdef
