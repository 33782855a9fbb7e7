#include "stieltjes/expansion.hpp"

#include <algorithm>

namespace stieltjes {

namespace {

HighReal reduced_phase(const Frame& fr, long n, const HighReal* shift) {
  // n*a at full precision first, then one exact reduction mod 2pi
  mpfr_prec_t p = fr.a.prec();
  HighReal phi = fr.a * n + fr.b;
  if (shift != nullptr) phi -= *shift;
  return remainder(phi, HighReal::pi(p) * 2);
}

LogScaled assemble(const Frame& fr, long n, const HighReal& bracket, int digit_count) {
  if (bracket.is_zero()) return LogScaled::zero();
  mpfr_prec_t p = fr.A.prec();
  HighReal ln_mag = log(fr.B) + fr.A * n - log(HighReal(n, p)) / 2 + log(abs(bracket));
  return to_log_scaled(bracket.sign(), ln_mag, digit_count);
}

GammaEstimate single_saddle_estimate(const SaddleChain& chain, long n, int s_max,
                                     const HighReal* shift, int digit_count) {
  ChainValue cv = eval_chain(chain, n, s_max, shift, digit_count);
  GammaEstimate est;
  est.value = cv.value;
  est.per_k.emplace_back(1, cv.value);
  est.terms = std::move(cv.terms);
  est.cos_factor = std::move(cv.cos_factor);
  est.truncation_flag = cv.truncation_flag;
  return est;
}

}  // namespace

SaddleChain build_chain(long n, long k, int s_max, const PrecisionContext& ctx) {
  SaddleSpec spec{n, k};
  SaddleChain chain{solve_saddle(spec, ctx), Frame{}, CoefficientSet{}};
  chain.fr = frame(chain.saddle);
  int order = std::max(2, 2 * s_max);
  PhaseSeries phase = phase_taylor(chain.saddle, spec, order);
  AmplitudeSeries amp = amp_taylor(chain.saddle, n, order);
  chain.coeffs = fold_and_split(wojdylo(phase, amp, s_max), chain.saddle.t0);
  return chain;
}

ChainValue eval_chain(const SaddleChain& chain, long n, int s_max,
                      const HighReal* phase_shift, int digit_count) {
  if (s_max < 0 || s_max >= static_cast<int>(chain.coeffs.C.size()))
    throw Error(Errc::order_mismatch, "eval_chain: s_max exceeds available coefficients");
  mpfr_prec_t p = chain.fr.A.prec();

  HighReal phi = reduced_phase(chain.fr, n, phase_shift);
  HighReal sin_phi(p), cos_phi(p);
  sin_cos(sin_phi, cos_phi, phi);

  HighReal cos_sum(0, p), sin_sum(0, p);
  ChainValue cv;
  cv.terms.reserve(s_max + 1);
  HighReal weight(1, p);  // (1/2)_s n^{-s}
  HighReal prev_mag(p);
  for (int s = 0; s <= s_max; ++s) {
    if (s > 0) weight = weight * (2 * s - 1) / (2 * n);  // *(s - 1/2)/n
    HighReal ct = chain.coeffs.C[s] * weight;
    HighReal st = chain.coeffs.D[s] * weight;
    cos_sum += ct;
    if (s > 0) sin_sum += st;
    HighReal mag = hypot(chain.coeffs.C[s], chain.coeffs.D[s]) * weight;
    if (s > 0 && mag >= prev_mag) cv.truncation_flag = true;
    prev_mag = mag;
    cv.terms.push_back(TermPair{std::move(ct), std::move(st)});
  }

  HighReal bracket = cos_phi * cos_sum - sin_phi * sin_sum;
  cv.value = assemble(chain.fr, n, bracket, digit_count);
  cv.cos_factor = std::move(cos_phi);
  return cv;
}

GammaEstimate eval_theorem1(const ExpansionRequest& req) {
  SaddleChain chain = build_chain(req.n, 1, req.s_max, req.ctx);
  return single_saddle_estimate(chain, req.n, req.s_max, nullptr, req.digit_count);
}

LogScaled eval_Jk(long n, long k, int s_max, const PrecisionContext& ctx, int digit_count) {
  SaddleChain chain = build_chain(n, k, s_max, ctx);
  return eval_chain(chain, n, s_max, nullptr, digit_count).value;
}

GammaEstimate eval_multi(const ExpansionRequest& req) {
  if (req.k_max < 1) throw Error(Errc::invalid_input, "eval_multi: k_max must be >= 1");
  GammaEstimate est = eval_theorem1(req);
  if (req.k_max == 1) return est;

  std::vector<LogScaled> contributions{est.value};
  for (long k = 2; k <= req.k_max; ++k) {
    LogScaled jk = eval_Jk(req.n, k, req.s_max, req.ctx, req.digit_count);
    est.per_k.emplace_back(k, jk);
    contributions.push_back(std::move(jk));
  }
  est.value = log_sum(contributions, req.digit_count);
  return est;
}

GammaEstimate eval_theorem2(long n, const PrecisionContext& ctx, int digit_count) {
  if (n < 1) throw Error(Errc::invalid_input, "eval_theorem2: n must be >= 1");
  mpfr_prec_t p = ctx.working_bits;
  SaddleChain chain;
  chain.saddle = solve_saddle(SaddleSpec{n, 1}, ctx);
  chain.fr = frame(chain.saddle);
  ClosedFormConstants k2 = theorem2_constants(chain.saddle);

  HighReal phi = reduced_phase(chain.fr, n, nullptr);
  HighReal sin_phi(p), cos_phi(p);
  sin_cos(sin_phi, cos_phi, phi);

  HighReal nn(n, p);
  HighReal cos_sum = HighReal(1, p) + k2.c1 / nn + k2.c2 / (nn * nn);
  HighReal sin_sum = k2.d1 / nn + k2.d2 / (nn * nn);
  HighReal bracket = cos_phi * cos_sum - sin_phi * sin_sum;

  GammaEstimate est;
  est.value = assemble(chain.fr, n, bracket, digit_count);
  est.per_k.emplace_back(1, est.value);
  est.terms.push_back(TermPair{HighReal(1, p), HighReal(0, p)});
  est.terms.push_back(TermPair{k2.c1 / nn, k2.d1 / nn});
  est.terms.push_back(TermPair{k2.c2 / (nn * nn), k2.d2 / (nn * nn)});
  est.cos_factor = cos_phi;
  est.sign_suspect = abs(cos_phi) < hypot(k2.c1, k2.d1) / nn * 10;
  return est;
}

GammaEstimate eval_leading(long n, const PrecisionContext& ctx, int digit_count) {
  if (n < 1) throw Error(Errc::invalid_input, "eval_leading: n must be >= 1");
  ExpansionRequest req;
  req.n = n;
  req.s_max = 0;
  req.ctx = ctx;
  req.digit_count = digit_count;
  GammaEstimate est = eval_theorem1(req);
  // the cosine factor alone fixes the sign here; flag it when the dropped
  // first correction could plausibly overturn it
  ClosedFormConstants k2 = theorem2_constants(solve_saddle(SaddleSpec{n, 1}, ctx));
  est.sign_suspect =
      abs(est.cos_factor) < hypot(k2.c1, k2.d1) / HighReal(n, ctx.working_bits) * 10;
  return est;
}

std::pair<GammaEstimate, GammaEstimate> eval_hurwitz(long n, const std::string& alpha,
                                                     int s_max, const PrecisionContext& ctx,
                                                     int digit_count, bool use_closed_form) {
  mpfr_prec_t p = ctx.working_bits;
  HighReal a = HighReal::from_string(alpha, p);
  if (!(a.sign() > 0)) throw Error(Errc::invalid_input, "eval_hurwitz: alpha must be > 0");
  bool unit_alpha = a == HighReal(1, p);

  GammaEstimate c_est;
  if (use_closed_form && !unit_alpha) {
    // closed form with shifted trig argument
    SaddleChain chain;
    chain.saddle = solve_saddle(SaddleSpec{n, 1}, ctx);
    chain.fr = frame(chain.saddle);
    ClosedFormConstants k2 = theorem2_constants(chain.saddle);
    HighReal shift = HighReal::pi(p) * 2 * a;
    HighReal phi = remainder(chain.fr.a * n + chain.fr.b - shift, HighReal::pi(p) * 2);
    HighReal sin_phi(p), cos_phi(p);
    sin_cos(sin_phi, cos_phi, phi);
    HighReal nn(n, p);
    HighReal bracket = cos_phi * (HighReal(1, p) + k2.c1 / nn + k2.c2 / (nn * nn)) -
                       sin_phi * (k2.d1 / nn + k2.d2 / (nn * nn));
    c_est.value = assemble(chain.fr, n, bracket, digit_count);
    c_est.per_k.emplace_back(1, c_est.value);
    c_est.cos_factor = cos_phi;
  } else if (use_closed_form) {
    c_est = eval_theorem2(n, ctx, digit_count);
  } else {
    SaddleChain chain = build_chain(n, 1, s_max, ctx);
    if (unit_alpha) {
      // e^{-2 pi i k alpha} = 1 exactly: same computation as the classical case
      c_est = single_saddle_estimate(chain, n, s_max, nullptr, digit_count);
    } else {
      HighReal shift = HighReal::pi(p) * 2 * a;
      c_est = single_saddle_estimate(chain, n, s_max, &shift, digit_count);
    }
  }

  // gamma_n(alpha) = C_n(alpha) + (log alpha)^n / alpha, zero at alpha = 1
  GammaEstimate g_est = c_est;
  if (!unit_alpha) {
    HighReal la = log(a);
    int corr_sign = la.sign() < 0 && (n % 2 == 1) ? -1 : 1;
    HighReal corr_ln = log(abs(la)) * n - la;  // ln(|log alpha|^n / alpha)
    LogScaled corr = to_log_scaled(corr_sign, corr_ln, digit_count);
    g_est.value = log_sum({c_est.value, corr}, digit_count);
    g_est.per_k.clear();
    g_est.per_k.emplace_back(1, g_est.value);
  }
  return {std::move(c_est), std::move(g_est)};
}

BoundsReport bounds(long n, const PrecisionContext& ctx, int digit_count) {
  if (n < 1) throw Error(Errc::invalid_input, "bounds: n must be >= 1");
  mpfr_prec_t p = ctx.working_bits;
  HighReal nn(n, p);
  HighReal pi = HighReal::pi(p);
  HighReal ln_pref = log(HighReal(n % 2 == 0 ? 4 : 2, p));  // ln(3 + (-1)^n)
  HighReal ln_berndt = ln_pref + lngamma(nn) - log(pi) * n;

  // lambda_n = (2/n)^n pi^{-1/2} Gamma(n + 1/2)
  HighReal ln_lambda =
      (log(HighReal(2, p)) - log(nn)) * n - log(pi) / 2 + lngamma(nn + HighReal(1, p) / 2);

  BoundsReport rep;
  rep.berndt = to_log_scaled(1, ln_berndt, digit_count);
  rep.zhang_williams = to_log_scaled(1, ln_berndt + ln_lambda, digit_count);
  rep.lambda_n = exp(ln_lambda);
  if (n >= 10) {
    HighReal ln_matsuoka = log(log(nn)) * n - HighReal::ln10(p) * 4;
    rep.matsuoka = to_log_scaled(1, ln_matsuoka, digit_count);
  }
  return rep;
}

long default_k_max(long n) {
  if (n >= 75) return 1;
  if (n >= 30) return 2;
  return 3;
}

namespace {

GammaEstimate dispatch(const ExpansionRequest& req) {
  if (req.hurwitz_alpha) {
    bool closed = req.mode == Mode::theorem2;
    int s_max = req.mode == Mode::leading ? 0 : req.s_max;
    return eval_hurwitz(req.n, *req.hurwitz_alpha, s_max, req.ctx, req.digit_count, closed)
        .second;
  }
  switch (req.mode) {
    case Mode::leading:
      return eval_leading(req.n, req.ctx, req.digit_count);
    case Mode::theorem2:
      return eval_theorem2(req.n, req.ctx, req.digit_count);
    case Mode::theorem1:
    default:
      return eval_multi(req);
  }
}

}  // namespace

CertifiedEstimate evaluate_certified(const ExpansionRequest& req) {
  req.ctx.validate();
  constexpr long kMaxBits = 16384;
  long bits = std::max<long>(req.ctx.working_bits, 64);
  HighReal best_rel(64);
  mpfr_set_inf(best_rel.raw(), 1);

  while (bits <= kMaxBits) {
    ExpansionRequest lo = req;
    lo.ctx.working_bits = bits;
    ExpansionRequest hi = req;
    hi.ctx.working_bits = 2 * bits;
    GammaEstimate v1 = dispatch(lo);
    GammaEstimate v2 = dispatch(hi);
    HighReal rel = rel_diff(v1.value, v2.value);
    if (rel < best_rel) best_rel = rel;
    bool sign_ok = v1.value.sign == v2.value.sign;
    HighReal target = HighReal(1, 64) / 2;
    for (int i = 0; i < req.digit_count; ++i) target /= 10;
    if (sign_ok && rel <= target) {
      CertifiedEstimate out{std::move(v2), 2 * bits, 0};
      if (rel.is_zero()) {
        out.achieved_digits = static_cast<int>((bits - req.ctx.guard_bits) * 0.301);
      } else {
        out.achieved_digits = static_cast<int>(-log(rel).to_double() / 2.302585092994046);
      }
      return out;
    }
    bits *= 2;
  }
  throw Error(Errc::precision_insufficient,
              "double-and-compare failed to certify " + std::to_string(req.digit_count) +
                  " digits up to " + std::to_string(kMaxBits) +
                  " bits; best agreement " + best_rel.str(3));
}

}  // namespace stieltjes
