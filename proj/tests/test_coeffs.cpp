#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dft_oracle.hpp"
#include "stieltjes/coeffs.hpp"

using namespace stieltjes;

namespace {

const PrecisionContext kCtx;

HighReal bit(int e) {
  HighReal x(1, 256);
  mpfr_mul_2si(x.raw(), x.raw(), e, MPFR_RNDN);
  return x;
}

HighReal crel(const HighComplex& got, const HighComplex& want) {
  return abs(got - want) / abs(want);
}

SaddlePoint artificial(double re, double im, mpfr_prec_t p = 256) {
  SaddlePoint sp;
  sp.t0 = HighComplex(HighReal::from_double(re, p), HighReal::from_double(im, p));
  return sp;
}

}  // namespace

TEST_CASE("alpha_0 equals (1 + t0) / (2 t0^2)") {
  SaddleSpec spec{100, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  PhaseSeries ps = phase_taylor(sp, spec, 2);
  HighComplex expect = (sp.t0 + HighReal(1, 256)) / (sp.t0 * sp.t0 * 2);
  CHECK(crel(ps.alpha[0], expect) < bit(-250));
}

TEST_CASE("alpha_1 at the test point t0 = 1 is -1/6") {
  // psi'''(1) = 1 + (-1)^3 2!/1 = -1, so alpha_1 = -1/6
  SaddleSpec spec{100, 1};
  PhaseSeries ps = phase_taylor(artificial(1, 0), spec, 2);
  HighComplex expect(HighReal(-1, 256) / 6, HighReal(0, 256));
  CHECK(abs(ps.alpha[1] - expect) < bit(-250));
}

TEST_CASE("phase_taylor validates input") {
  SaddleSpec spec{100, 1};
  CHECK_THROWS_AS((void)phase_taylor(artificial(1, 0), spec, 1), Error);
  CHECK_THROWS_AS((void)phase_taylor(artificial(0, 0), spec, 4), Error);
  CHECK_THROWS_AS((void)phase_taylor(artificial(-1, 0), spec, 4), Error);
}

TEST_CASE("beta_0 satisfies the product identity") {
  SaddlePoint sp = solve_saddle(SaddleSpec{100, 1}, kCtx);
  AmplitudeSeries as = amp_taylor(sp, 100, 4);
  // beta_0 * t0 * e^{t0} / (1 - t0/100) = 1
  HighComplex lhs =
      as.beta[0] * sp.t0 * exp(sp.t0) / (HighComplex(1, 256) - sp.t0 / HighReal(100, 256));
  CHECK(abs(lhs - HighComplex(1, 256)) < bit(-248));
}

TEST_CASE("beta_1 at t0 = 1 with the linear factor negligible") {
  // f -> e^{-t}/t as n -> inf, so f'(1) = -2/e
  AmplitudeSeries as = amp_taylor(artificial(1, 0), 1000000000000000L, 2);
  HighReal expect = HighReal(-2, 256) / exp(HighReal(1, 256));
  CHECK(abs(as.beta[1].real() - expect) < HighReal::from_string("1e-13", 256));
  CHECK(abs(as.beta[1].imag()) < HighReal::from_string("1e-13", 256));
}

TEST_CASE("series coefficients match direct numeric Taylor data") {
  // independent oracle: trapezoid-rule contour coefficients of psi and f at
  // doubled precision
  PrecisionContext ctx512;
  ctx512.working_bits = 512;
  SaddleSpec spec{100, 1};
  SaddlePoint sp = solve_saddle(spec, ctx512);
  mpfr_prec_t p = 512;
  long n = spec.n;

  HighReal coef = HighReal::pi(p) * 2 / n;  // 2 pi k / n with k = 1
  auto psi = [&](const HighComplex& t) {
    return HighComplex(HighReal(0, p), -coef) * exp(t) - log(t);
  };
  HighComplex psi0 = psi(sp.t0);
  HighReal rho = abs(sp.t0) / 8;
  auto num_psi = testing::circle_taylor(
      [&](const HighComplex& t) { return psi(t) - psi0; }, sp.t0, rho, 256, 15);

  // expansion of psi - psi(t0) starts at the quadratic term
  CHECK(abs(num_psi[0]) < bit(-440));
  CHECK(abs(num_psi[1]) < bit(-440));

  PhaseSeries ps = phase_taylor(sp, spec, 13);
  for (int r = 0; r <= 12; ++r) CHECK(crel(num_psi[r + 2], ps.alpha[r]) < bit(-440));

  auto f = [&](const HighComplex& t) {
    return exp(-t) * inverse(t) * (HighComplex(1, p) - t / HighReal(n, p));
  };
  auto num_f = testing::circle_taylor(f, sp.t0, rho, 256, 12);
  AmplitudeSeries as = amp_taylor(sp, n, 12);
  for (int r = 0; r <= 12; ++r) CHECK(crel(num_f[r], as.beta[r]) < bit(-440));
}

TEST_CASE("bell table base cases and low-order values") {
  SaddleSpec spec{100, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  PhaseSeries ps = phase_taylor(sp, spec, 8);
  BellTable t = bell_table(ps, 8);

  CHECK(abs(t.at(0, 0) - HighComplex(1, 256)).is_zero());
  for (int k = 1; k <= 8; ++k) CHECK(abs(t.at(k, 0)).is_zero());

  const auto& a = ps.alpha;
  CHECK(crel(t.at(4, 1), a[4]) < bit(-250));
  // the recursion gives alpha_2^2 + 2 alpha_1 alpha_3 (a published footnote
  // prints alpha_3^2 + 2 alpha_1 alpha_3, inconsistent in weight)
  CHECK(crel(t.at(4, 2), a[2] * a[2] + a[1] * a[3] * 2) < bit(-250));
  CHECK(crel(t.at(4, 3), a[1] * a[1] * a[2] * 3) < bit(-250));
  CHECK(crel(t.at(4, 4), pow_ui(a[1], 4)) < bit(-250));
}

TEST_CASE("bell weight homogeneity") {
  // with alpha_r = x^r every monomial of B_{kj} has total weight k
  mpfr_prec_t p = 256;
  auto series_with = [&](double x) {
    PhaseSeries ps;
    ps.t0 = HighComplex(HighReal(1, p), HighReal(0, p));
    for (int r = 0; r <= 8; ++r)
      ps.alpha.push_back(HighComplex(pow_ui(HighReal::from_double(x, p), r), HighReal(p)));
    return ps;
  };
  BellTable tx = bell_table(series_with(1.37), 8);
  BellTable t1 = bell_table(series_with(1.0), 8);
  HighReal x = HighReal::from_double(1.37, p);
  for (int k = 1; k <= 8; ++k)
    for (int j = 1; j <= k; ++j) {
      HighComplex want = t1.at(k, j) * pow_ui(x, k);
      CHECK(crel(tx.at(k, j), want) < bit(-240));
    }
}

TEST_CASE("bell table order mismatch error") {
  SaddleSpec spec{100, 1};
  PhaseSeries ps = phase_taylor(solve_saddle(spec, kCtx), spec, 3);
  CHECK_THROWS_AS((void)bell_table(ps, 10), Error);
}

TEST_CASE("wojdylo c_hat_0 is exactly one") {
  SaddleSpec spec{25, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  auto ch = wojdylo(phase_taylor(sp, spec, 4), amp_taylor(sp, 25, 4), 2);
  CHECK(ch[0].real() == HighReal(1, 256));
  CHECK(ch[0].imag().is_zero());
}

TEST_CASE("wojdylo agrees with the direct closed forms") {
  for (long n : {25L, 75L, 100L, 137L, 1000L}) {
    for (long k : {1L, 2L}) {
      SaddleSpec spec{n, k};
      SaddlePoint sp = solve_saddle(spec, kCtx);
      auto ch = wojdylo(phase_taylor(sp, spec, 4), amp_taylor(sp, n, 4), 2);
      auto [c2, c4] = chat_direct(sp, spec);
      // working_bits - 2*guard_bits = 224 certified bits
      CHECK(crel(ch[1], c2) < bit(-224));
      CHECK(crel(ch[2], c4) < bit(-224));
    }
  }
}

TEST_CASE("conjugating t0 conjugates the direct coefficients") {
  SaddleSpec spec{100, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  SaddlePoint cj;
  cj.t0 = conj(sp.t0);
  auto [c2, c4] = chat_direct(sp, spec);
  auto [c2c, c4c] = chat_direct(cj, spec);
  CHECK(crel(c2c, conj(c2)) < bit(-248));
  CHECK(crel(c4c, conj(c4)) < bit(-248));
}

TEST_CASE("fold: s = 1 relation and inverse identity") {
  SaddleSpec spec{100, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  auto ch = wojdylo(phase_taylor(sp, spec, 12), amp_taylor(sp, 100, 12), 6);
  CoefficientSet cs = fold_and_split(ch, sp.t0);

  // c'_2 = c_hat_2 - 2 t0
  CHECK(abs(cs.c_prime[1] - (ch[1] - sp.t0 * 2)) < bit(-248));
  CHECK(cs.C[0] == HighReal(1, 256));
  CHECK(cs.D[0].is_zero());

  // inverse of the fold reconstructs c_hat
  for (size_t s = 1; s < ch.size(); ++s) {
    HighComplex back = cs.c_prime[s] + sp.t0 * ch[s - 1] * 2 / HighReal(2 * s - 1, 256);
    CHECK(crel(back, ch[s]) < bit(-244));
  }
}

TEST_CASE("fold requires unit leading coefficient") {
  HighComplex two(2, 256);
  CHECK_THROWS_AS((void)fold_and_split({two}, HighComplex(1, 256)), Error);
}

TEST_CASE("coefficient table spot values") {
  // published 10-dp values
  SaddleSpec spec{100, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  CoefficientSet cs = fold_and_split(wojdylo(phase_taylor(sp, spec, 12),
                                             amp_taylor(sp, 100, 12), 6),
                                     sp.t0);
  HighReal tol = HighReal::from_string("5.001e-11", 256);
  CHECK(abs(cs.C[1] - HighReal::from_string("-0.3158578918", 256)) < tol);
  CHECK(abs(cs.D[1] - HighReal::from_string("0.1626819326", 256)) < tol);
  CHECK(abs(cs.C[6] - HighReal::from_string("-0.3783700609", 256)) < tol);

  // the coefficients carry an n-dependence
  SaddleSpec spec2{1000, 1};
  SaddlePoint sp2 = solve_saddle(spec2, kCtx);
  CoefficientSet cs2 = fold_and_split(wojdylo(phase_taylor(sp2, spec2, 12),
                                              amp_taylor(sp2, 1000, 12), 6),
                                      sp2.t0);
  CHECK(abs(cs2.C[1] - cs.C[1]) > HighReal::from_string("0.01", 256));
}

TEST_CASE("closed-form constants: polynomial constant terms") {
  ClosedFormConstants k2 = theorem2_constants(artificial(1e-40, 0));
  CHECK(abs(k2.p2 - HighComplex(2, 256)) < HighReal::from_string("1e-37", 256));
  CHECK(abs(k2.p4 - HighComplex(4, 256)) < HighReal::from_string("1e-37", 256));
}

TEST_CASE("closed-form constants depend only on t0") {
  SaddlePoint a = solve_saddle(SaddleSpec{100, 1}, kCtx);
  SaddlePoint b;
  b.t0 = a.t0;
  b.residual = HighReal(1, 256);  // metadata differs; output must not
  ClosedFormConstants ka = theorem2_constants(a);
  ClosedFormConstants kb = theorem2_constants(b);
  CHECK(ka.c1 == kb.c1);
  CHECK(ka.d1 == kb.d1);
  CHECK(ka.c2 == kb.c2);
  CHECK(ka.d2 == kb.d2);
}

TEST_CASE("closed-form constants match the n -> inf limit of the fold") {
  // c1 + i d1 = lim (c'_2)/2 after removing the known 1/n term
  const long n = 1000000;
  SaddleSpec spec{n, 1};
  SaddlePoint sp = solve_saddle(spec, kCtx);
  CoefficientSet cs =
      fold_and_split(wojdylo(phase_taylor(sp, spec, 2), amp_taylor(sp, n, 2), 1), sp.t0);
  ClosedFormConstants k2 = theorem2_constants(sp);

  HighComplex one_plus = sp.t0 + HighReal(1, 256);
  HighComplex over_n = (sp.t0 * 3 + HighReal(4, 256)) * sp.t0 * sp.t0 /
                       (one_plus * one_plus * HighReal(n, 256));
  // the remainder is O(1/n^2) with an O(100) coefficient
  HighComplex limit = (cs.c_prime[1] - over_n) / 2;
  CHECK(abs(limit - HighComplex(k2.c1, k2.d1)) < HighReal::from_string("1e-9", 256));
}
