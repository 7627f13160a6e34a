// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hdef/hdef.hpp"
#include "oracles.hpp"

using namespace hdef;
using Q = ExactComplex;
using F = FloatComplex;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail = {}) {
  std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.empty() ? "" : " : ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Q rat(long p, long q = 1) { return Q(Rational(p, q)); }

void triple_construction() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int count = 0;
  for (unsigned total = 0; total <= 10; ++total)
    for (unsigned m = 0; m <= total; ++m) {
      const unsigned n = total - m;
      auto s = complex_hermite_sum<Q>(m, n), r = complex_hermite_rodrigues<Q>(m, n), o = complex_hermite_operator<Q>(m, n);
      ok = ok && s.scaled == r.scaled && s.scaled == o.scaled && oracle::same(oracle::from_lib(s.scaled), oracle::hermite_recurrence(m, n));
      ++count;
    }
  const double t = seconds_since(t0);
  report(1, "triple construction, m+n <= 10", ok && t < 5.0, std::to_string(count) + " polynomials in " + secs(t));
}

void orthonormality() {
  HermiteTable<Q> table(8);
  auto entries = table.ordered();
  bool ok = true;
  for (const auto& [mn, h] : entries)
    for (const auto& [kl, q] : entries) {
      Q want = mn == kl ? Q(oracle::fact(mn.first) * oracle::fact(mn.second)) : Q{};
      ok = ok && inner_product(h->scaled, q->scaled) == want;
    }
  report(2, "orthogonality <H_mn, H_kl> = m! n! delta, levels <= 8", ok, std::to_string(entries.size() * entries.size()) + " pairs");
}

void real_orthogonality() {
  bool ok = true;
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n) {
      auto v = real_inner_product(real_hermite<Q>(m), real_hermite<Q>(n));
      Q want = m == n ? Q(Rational(mpz_class(1) << n) * oracle::fact(n)) : Q{};
      ok = ok && v.rational_part == want && (m != n || v.sqrt_pi_power == 1);
      auto coeffs = oracle::real_hermite_coeffs(m);
      for (unsigned k = 0; k < coeffs.size(); ++k) ok = ok && real_hermite<Q>(m).coefficient(k, 0) == Q(coeffs[k]);
    }
  report(3, "real orthogonality = sqrt(pi) 2^n n! delta, m,n <= 8", ok);
}

void generating_functions() {
  bool ok = true;
  auto cs = generating_series_complex<Q>(8);
  auto rs = generating_series_real<Q>(8);
  const GL2<Q> g(rat(2), Q(Rational(1), Rational(1)), rat(-1, 3), Q(Rational(0), Rational(1, 2)));
  auto ds = deformed_generating_series(g, 8);
  auto ref = oracle::deformed_genfun(oracle::entries(g), 8);
  for (unsigned k = 0; k <= 8; ++k)
    for (unsigned l = 0; k + l <= 8; ++l) {
      ok = ok && scaled_coefficient(cs, k, l) == complex_hermite_sum<Q>(k, l).scaled;
      ok = ok && oracle::same(oracle::from_lib(scaled_coefficient(cs, k, l)), oracle::complex_genfun_coefficient(k, l));
      ok = ok && scaled_coefficient(ds, k, l) == deformed_hermite(g, k, l).scaled;
      ok = ok && oracle::same(oracle::from_lib(scaled_coefficient(ds, k, l)), oracle::coefficient(ref, k, l));
      ok = ok && scaled_coefficient(rs, k, l) == real_hermite<Q>(k) * real_hermite_second<Q>(l);
    }
  report(4, "generating functions (complex, deformed, real product), k+l <= 8", ok);
}

void representation_matrices() {
  std::mt19937 rng(20261019);
  bool ok = true;
  int trials = 0;
  for (int t = 0; t < 4; ++t) {
    auto g = oracle::random_gl2(rng), h = oracle::random_gl2(rng);
    for (unsigned level = 0; level <= 5; ++level) {
      auto mg = rep_matrix(g, level).entries, mh = rep_matrix(h, level).entries;
      auto id = Matrix<Q>::identity(level + 1);
      ok = ok && rep_matrix(GL2<Q>::identity(), level).entries == id;
      ok = ok && mg * mh == rep_matrix(g * h, level).entries;
      ok = ok && gaussian_adjoint(mg, level) == rep_matrix(g.adjoint(), level).entries;
      ok = ok && rep_matrix(g.inverse(), level).entries == inverse(mg);
      ok = ok && mg == oracle::rep_matrix_bruteforce(oracle::entries(g), level);
      ++trials;
    }
  }
  report(5, "M(I)=I, M(g)M(h)=M(gh), M(g)^*=M(g*), M(g^-1)=M(g)^-1, L <= 5", ok,
         std::to_string(trials) + " (g,h,L) cases; adjoint w.r.t. the Gaussian level inner product");
}

void biorthogonality() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::size_t pairs = 0;
  for (auto a : {rat(3, 5), rat(5, 13)}) {
    auto r = biorthogonality_check(alpha_matrix(AlphaPoint<Q>::from(a)), 4);
    ok = ok && r.pass();
    pairs += r.pairs_checked;
  }
  const double t = seconds_since(t0);
  report(6, "biorthogonality, alpha in {3/5, 5/13}, L,M <= 4", ok && t < 10.0, std::to_string(pairs) + " pairs in " + secs(t));
}

void eigenvalues() {
  bool ok = true;
  const std::vector<GL2<Q>> exact{GL2<Q>::diagonal(rat(2), rat(-1, 3)), GL2<Q>(rat(3), Q{}, Q(Rational(1), Rational(2)), Q(Rational(0), Rational(1))),
                                  GL2<Q>(rat(1, 2), rat(7), Q{}, rat(5, 4))};
  for (const auto& g : exact)
    for (unsigned level = 0; level <= 4; ++level) {
      auto e = eigenvalue_structure_check(g, level);
      ok = ok && e.pass && e.exact;
    }
  const GL2<F> generic(F(0.3, 1.1), F(-2.0, 0.4), F(0.7, -0.2), F(1.5, 0.9));
  bool fl = true;
  for (unsigned level = 0; level <= 4; ++level) fl = fl && eigenvalue_structure_check(generic, level).pass;
  report(7, "eigenvalues of M(g,L) = {l1^k l2^(L-k)}: exact triangular, float generic (1e-9)", ok && fl);
}

void intertwining() {
  bool ok = true;
  for (unsigned total = 0; total <= 8; ++total)
    for (unsigned m = 0; m <= total; ++m)
      ok = ok && intertwining_operator(BiPoly<Q>::monomial(m, total - m)) == complex_hermite_sum<Q>(m, total - m).scaled;
  auto r = intertwine_check(alpha_matrix(AlphaPoint<Q>::from(rat(3, 5))), 5);
  report(8, "E(z^m zbar^n) = H_mn for m+n <= 8; E M(g,L) = T(g,L) E for L <= 5", ok && r.pass(),
         std::to_string(r.operator_checks) + " level vectors");
}

void ncqm() {
  bool ok = true;
  for (auto a : {rat(3, 5), rat(5, 13), rat(8, 17)}) ok = ok && ncqm_commutator_suite(AlphaPoint<Q>::from(a)).passed();
  auto p = AlphaPoint<Q>::from(rat(3, 5));
  auto c = commutator(alpha_annihilation(p, 1), alpha_creation(p, 2));
  auto v = c.as_scalar();
  ok = ok && v && *v == Q(Rational(0), Rational(24, 25));
  report(9, "NCQM commutators at alpha in {3/5, 5/13, 8/17}; [a1, a2^dag] = 24i/25 at 3/5", ok);
}

void qp() {
  auto r = qp_representation_suite(rat(3, 5), rat(16, 15));
  report(10, "Q/P representation at (theta, gamma) = (3/5, 16/15), both branches", r.passed(), std::to_string(r.checks.size()) + " checks");
}

void lie_suite() {
  auto p = AlphaPoint<Q>::from(rat(3, 5));
  auto j = bilinear_generators(p);
  auto jt = structure_constants(j);
  auto xt = structure_constants(basis_change(j, p.theta));
  auto zt = structure_constants(rescale(basis_change(j, p.theta), p.theta));
  const Q i = imag_unit<Q>(), z{}, one = rat(1), th = p.theta, f = one - th * th;
  bool ok = f == rat(49, 625);

  auto want_j = StructureConstants<Q>::empty(jt.names);
  want_j.set(0, 1, {z, z, i, z});
  want_j.set(1, 2, {i, z, z, z});
  want_j.set(2, 3, {i * th, z, z, z});
  want_j.set(3, 0, {z, z, i * th, z});
  want_j.set(2, 0, {z, i, z, i * th});
  want_j.set(1, 3, {z, z, z, z});
  auto want_x = StructureConstants<Q>::empty(xt.names);
  want_x.set(0, 1, {z, z, one, z});
  want_x.set(1, 2, {f, z, z, z});
  want_x.set(2, 0, {z, f, z, z});
  auto want_z = StructureConstants<Q>::empty(zt.names);
  want_z.set(0, 1, {z, z, one, z});
  want_z.set(1, 2, {one, z, z, z});
  want_z.set(2, 0, {z, one, z, z});
  ok = ok && same_table(jt, want_j, 0.0) && same_table(xt, want_x, 0.0) && same_table(zt, want_z, 0.0);
  ok = ok && jt.closed && xt.closed && zt.closed;
  ok = ok && jacobi_holds(jt, 0.0) && jacobi_holds(xt, 0.0) && jacobi_holds(zt, 0.0);
  ok = ok && classify(zt).kind == LieClass::su2_plus_u1 && classify(xt).kind == LieClass::su2_plus_u1;

  auto limit = theta_limit_table(F(1.0, 0.0), default_theta_samples<F>());
  const bool boundary = limit.closed && limit.max_residual < 1e-10 && jacobi_holds(limit, 1e-10) &&
                        classify(limit).kind == LieClass::heisenberg_plus_u1;
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta=1 residual %.1e", limit.max_residual);
  report(11, "Lie tables at alpha=3/5 exact (su2+u1); theta=1 limit is h+u1", ok && boundary, buf);
}

void dual_scaling() {
  auto r = dual_matrix_scaling_check(AlphaPoint<Q>::from(rat(3, 5)), 4);
  bool ok = r.pass() && r.delta == rat(-7, 25);
  for (unsigned level = 0; level < r.kappa.size(); ++level) ok = ok && r.kappa[level] == power(rat(-7, 25), level);
  report(12, "T(g',L) T(g,L) = Delta^L I, Delta = -7/25, L <= 4", ok);
}

void quadrature() {
  double worst = 0.0;
  std::size_t pairs = 0;
  for (unsigned d1 = 0; d1 <= 6; ++d1)
    for (unsigned a = 0; a <= d1; ++a)
      for (unsigned d2 = 0; d2 <= 6; ++d2)
        for (unsigned c = 0; c <= d2; ++c) {
          const unsigned b = d1 - a, d = d2 - c;
          const F exact = to_complex(inner_product(BiPoly<Q>::monomial(a, b), BiPoly<Q>::monomial(c, d)));
          const F numeric = oracle::gaussian_moment_quadrature(a, b, c, d);
          const double err = std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
          worst = std::max(worst, err);
          ++pairs;
        }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu pairs, worst relative error %.1e", pairs, worst);
  report(13, "moment rule vs 2D quadrature, monomial degrees <= 6, relative 1e-8", worst < 1e-8, buf);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{triple_construction, orthonormality,  real_orthogonality, generating_functions,
                                                    representation_matrices, biorthogonality, eigenvalues, intertwining,
                                                    ncqm, qp, lie_suite, dual_scaling, quadrature};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
