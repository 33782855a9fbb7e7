#include "stieltjes/coeffs.hpp"

#include <string>

namespace stieltjes {

namespace {

void require_nondegenerate(const HighComplex& t0) {
  HighComplex one_plus = t0 + HighReal(1, t0.prec());
  if (t0.is_zero() || one_plus.is_zero())
    throw Error(Errc::degenerate_saddle, "t0 = 0 or 1 + t0 = 0");
}

}  // namespace

PhaseSeries phase_taylor(const SaddlePoint& saddle, const SaddleSpec& spec, int order) {
  if (order < 2) throw Error(Errc::invalid_input, "phase_taylor: order must be >= 2");
  require_nondegenerate(saddle.t0);
  mpfr_prec_t p = saddle.t0.prec();

  PhaseSeries ps;
  ps.t0 = saddle.t0;
  ps.n = spec.n;
  ps.k = spec.k;
  ps.alpha.reserve(order + 1);

  HighComplex invt = inverse(saddle.t0);
  HighComplex invpow = invt * invt;  // invt^m, starts at m = 2
  HighReal fact(2, p);               // m!, starts at 2!
  int sign = 1;                      // (-1)^m = (-1)^r for m = r + 2
  for (int r = 0; r <= order; ++r) {
    long m = r + 2;
    // alpha_r = (1/t0)/m! + (-1)^m invt^m / m
    HighComplex term = invt / fact + (sign > 0 ? invpow / m : -(invpow / m));
    ps.alpha.push_back(term);
    invpow = invpow * invt;
    fact *= (m + 1);
    sign = -sign;
  }
  return ps;
}

AmplitudeSeries amp_taylor(const SaddlePoint& saddle, long n, int order) {
  if (order < 0) throw Error(Errc::invalid_input, "amp_taylor: order must be >= 0");
  if (n < 1) throw Error(Errc::invalid_input, "amp_taylor: n must be positive");
  require_nondegenerate(saddle.t0);
  mpfr_prec_t p = saddle.t0.prec();
  const HighComplex& t0 = saddle.t0;

  // e^{-t0-d} * 1/(t0+d): coefficients of d^j
  HighComplex emt = exp(-t0);
  HighComplex invt = inverse(t0);
  std::vector<HighComplex> E(order + 1), G(order + 1);
  HighReal fact(1, p);
  HighComplex gpow = invt;
  int sign = 1;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) fact *= j;
    E[j] = sign > 0 ? HighComplex(1, p) / fact : -(HighComplex(1, p) / fact);
    G[j] = sign > 0 ? gpow : -gpow;
    gpow = gpow * invt;
    sign = -sign;
  }

  std::vector<HighComplex> P(order + 1, HighComplex(p));
  for (int j = 0; j <= order; ++j) {
    HighComplex acc(p);
    for (int i = 0; i <= j; ++i) acc += E[i] * G[j - i];
    P[j] = emt * acc;
  }

  // linear factor (1 - t0/n) - d/n
  HighComplex L0 = HighComplex(1, p) - t0 / HighReal(n, p);
  HighReal L1 = HighReal(-1, p) / n;

  AmplitudeSeries as;
  as.t0 = t0;
  as.n = n;
  as.beta.reserve(order + 1);
  for (int r = 0; r <= order; ++r) {
    HighComplex b = P[r] * L0;
    if (r >= 1) b += P[r - 1] * L1;
    as.beta.push_back(b);
  }
  return as;
}

size_t BellTable::idx(int k, int j) const {
  if (k < 0 || k > K_ || j < 0 || j > k)
    throw Error(Errc::invalid_input, "BellTable: index (" + std::to_string(k) + "," +
                                         std::to_string(j) + ") out of range");
  return static_cast<size_t>(k) * (k + 1) / 2 + j;
}

BellTable::BellTable(int K, mpfr_prec_t prec)
    : K_(K), e_(static_cast<size_t>(K + 1) * (K + 2) / 2, HighComplex(prec)) {}

BellTable bell_table(const PhaseSeries& phase, int K) {
  if (K < 0) throw Error(Errc::invalid_input, "bell_table: K must be >= 0");
  if (static_cast<int>(phase.alpha.size()) < K + 1)
    throw Error(Errc::order_mismatch,
                "bell_table: need alpha_1..alpha_" + std::to_string(K) + ", have order " +
                    std::to_string(phase.alpha.size()) + " series");
  mpfr_prec_t p = phase.t0.prec();
  BellTable t(K, p);
  t.at(0, 0) = HighComplex(1, p);
  for (int k = 1; k <= K; ++k) t.at(k, 0) = HighComplex(p);
  for (int j = 1; j <= K; ++j) {
    for (int k = j; k <= K; ++k) {
      HighComplex acc(p);
      for (int r = 1; r <= k - j + 1; ++r) acc += phase.alpha[r] * t.at(k - r, j - 1);
      t.at(k, j) = acc;
    }
  }
  return t;
}

std::vector<HighComplex> wojdylo(const PhaseSeries& phase, const AmplitudeSeries& amp,
                                 int s_max) {
  if (s_max < 0) throw Error(Errc::invalid_input, "wojdylo: s_max must be >= 0");
  int K = 2 * s_max;
  if (static_cast<int>(phase.alpha.size()) < K + 1 ||
      static_cast<int>(amp.beta.size()) < K + 1)
    throw Error(Errc::order_mismatch, "wojdylo: series orders must reach 2*s_max");
  mpfr_prec_t p = phase.t0.prec();
  const HighComplex& a0 = phase.alpha[0];
  if (a0.is_zero()) throw Error(Errc::degenerate_saddle, "wojdylo: alpha_0 = 0");
  if (amp.beta[0].is_zero()) throw Error(Errc::degenerate_saddle, "wojdylo: beta_0 = 0");

  BellTable bell = bell_table(phase, K);
  HighComplex inv_a0 = inverse(a0);
  std::vector<HighComplex> inv_a0_pow(K + 1, HighComplex(p));
  inv_a0_pow[0] = HighComplex(1, p);
  for (int j = 1; j <= K; ++j) inv_a0_pow[j] = inv_a0_pow[j - 1] * inv_a0;
  HighComplex inv_b0 = inverse(amp.beta[0]);

  std::vector<HighComplex> out;
  out.reserve(s_max + 1);
  for (int s = 0; s <= s_max; ++s) {
    // (s + 1/2)_j, ascending
    int kk = 2 * s;
    std::vector<HighReal> poch(kk + 1, HighReal(1, p));
    HighReal base = HighReal(2 * s + 1, p) / 2;
    for (int j = 1; j <= kk; ++j) poch[j] = poch[j - 1] * (base + (j - 1));

    HighComplex sum(p);
    HighReal jfact(1, p);
    std::vector<HighComplex> inner(kk + 1, HighComplex(p));
    for (int k = 0; k <= kk; ++k) {
      HighComplex acc(p);
      jfact = HighReal(1, p);
      int jsign = 1;
      for (int j = 0; j <= k; ++j) {
        if (j > 0) jfact *= j;
        HighComplex w = inv_a0_pow[j] * (poch[j] / jfact);
        HighComplex contrib = w * bell.at(k, j);
        acc += jsign > 0 ? contrib : -contrib;
        jsign = -jsign;
      }
      sum += amp.beta[kk - k] * inv_b0 * acc;
    }
    out.push_back(inv_a0_pow[s] * sum);
  }
  // c_hat_0 is identically 1; pin it exactly
  out[0] = HighComplex(1, p);
  return out;
}

std::pair<HighComplex, HighComplex> chat_direct(const SaddlePoint& saddle,
                                                const SaddleSpec& spec) {
  require_nondegenerate(saddle.t0);
  mpfr_prec_t p = saddle.t0.prec();
  const HighComplex& t0 = saddle.t0;
  const long n = spec.n;

  auto frac = [p](long num, long den) { return HighReal(num, p) / den; };

  // Psi_m = psi^{(m)}(t0) / psi''(t0), m = 3..6
  HighComplex psi2 = (t0 + HighReal(1, p)) / (t0 * t0);
  HighComplex invt = inverse(t0);
  std::vector<HighComplex> Psi(7, HighComplex(p));
  HighComplex invpow = invt * invt * invt;
  HighReal fact(2, p);  // (m-1)!, starts at m = 3
  int sign = -1;        // (-1)^m at m = 3
  for (int m = 3; m <= 6; ++m) {
    HighComplex dm = invt + (sign > 0 ? invpow * fact : -(invpow * fact));
    Psi[m] = dm / psi2;
    invpow = invpow * invt;
    fact *= m;
    sign = -sign;
  }

  // F_m = f^{(m)}(t0) / f(t0), m = 1..4, from the Leibniz closed form
  HighComplex invg = t0 * HighReal(n, p) / (HighComplex(HighReal(n, p), HighReal(p)) - t0);
  std::vector<HighComplex> F(5, HighComplex(p));
  for (int m = 1; m <= 4; ++m) {
    HighComplex acc(p);
    HighReal binom(1, p);
    HighReal jf(1, p);
    HighComplex tp = invt * invt;  // t0^{-(j+1)} at j = 1
    for (int j = 1; j <= m; ++j) {
      binom = binom * (m - j + 1) / j;
      jf *= j;
      acc += tp * (binom * jf);
      tp = tp * invt;
    }
    HighComplex inner = HighComplex(1, p) + invg * acc;
    F[m] = (m % 2 == 0) ? inner : -inner;
  }

  HighComplex half_inv_psi2 = inverse(psi2 * 2);
  HighComplex c2 = half_inv_psi2 *
                   (F[2] * 2 - Psi[3] * F[1] * 2 + Psi[3] * Psi[3] * frac(5, 6) -
                    Psi[4] * frac(1, 2));

  HighComplex P3sq = Psi[3] * Psi[3];
  HighComplex c4_brace =
      F[4] * frac(2, 3) - Psi[3] * F[3] * frac(20, 9) +
      (P3sq * frac(7, 3) - Psi[4]) * F[2] * frac(5, 3) -
      (P3sq * Psi[3] - Psi[3] * Psi[4] + Psi[5] * frac(6, 35)) * F[1] * frac(35, 9) +
      (P3sq * P3sq * frac(11, 24) -
       (P3sq - Psi[4] * frac(1, 6)) * Psi[4] * frac(3, 4) +
       Psi[3] * Psi[5] * frac(1, 5) - Psi[6] * frac(1, 35)) *
          frac(35, 9);
  HighComplex c4 = half_inv_psi2 * half_inv_psi2 * c4_brace;
  return {c2, c4};
}

CoefficientSet fold_and_split(const std::vector<HighComplex>& c_hat, const HighComplex& t0) {
  if (c_hat.empty())
    throw Error(Errc::invalid_input, "fold_and_split: empty coefficient sequence");
  mpfr_prec_t p = t0.prec();
  if (!(c_hat[0].real() == HighReal(1, p)) || !c_hat[0].imag().is_zero())
    throw Error(Errc::invalid_input, "fold_and_split: c_hat_0 must be exactly 1");

  CoefficientSet cs;
  cs.c_hat = c_hat;
  cs.c_prime.reserve(c_hat.size());
  cs.c_prime.push_back(HighComplex(1, p));
  for (size_t s = 1; s < c_hat.size(); ++s)
    cs.c_prime.push_back(c_hat[s] - t0 * c_hat[s - 1] * 2 / HighReal(2 * s - 1, p));
  for (const auto& cp : cs.c_prime) {
    cs.C.push_back(cp.real());
    cs.D.push_back(cp.imag());
  }
  cs.D[0] = HighReal(0, p);
  return cs;
}

ClosedFormConstants theorem2_constants(const SaddlePoint& saddle) {
  require_nondegenerate(saddle.t0);
  mpfr_prec_t p = saddle.t0.prec();
  const HighComplex& t = saddle.t0;

  auto poly = [&](const std::vector<long>& coeff) {
    HighComplex acc(coeff.back(), p);
    for (auto it = coeff.rbegin() + 1; it != coeff.rend(); ++it)
      acc = acc * t + HighReal(*it, p);
    return acc;
  };
  HighComplex p2 = poly({2, -18, -20, -3, 2});
  HighComplex p4 = poly({4, -72, -332, -8028, -19644, -20280, -9911, -1884, 4});

  HighComplex one_plus = t + HighReal(1, p);
  HighComplex op3 = pow_ui(one_plus, 3);
  HighComplex cd1 = p2 / (op3 * 24);
  HighComplex cd2 = p4 / (op3 * op3 * 1152) +
                    (t * 3 + HighReal(4, p)) * t * t / (one_plus * one_plus * 2);

  ClosedFormConstants out;
  out.c1 = cd1.real();
  out.d1 = cd1.imag();
  out.c2 = cd2.real();
  out.d2 = cd2.imag();
  out.p2 = std::move(p2);
  out.p4 = std::move(p4);
  return out;
}

}  // namespace stieltjes
