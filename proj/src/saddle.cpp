#include "stieltjes/saddle.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace stieltjes {

HighReal at_prec(const HighReal& x, mpfr_prec_t prec) {
  HighReal r(prec);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HighComplex at_prec(const HighComplex& z, mpfr_prec_t prec) {
  return HighComplex(at_prec(z.real(), prec), at_prec(z.imag(), prec));
}

namespace {

HighReal saddle_target_im(long n, long k, mpfr_prec_t p) {
  // n / (2 pi k)
  return HighReal(n, p) / (HighReal::pi(p) * (2 * k));
}

HighReal ulp_scale(mpfr_prec_t p, long bits_down) {
  HighReal t(1, p);
  mpfr_mul_2si(t.raw(), t.raw(), -bits_down, MPFR_RNDN);
  return t;
}

// Double-precision warm start for W0 along the positive imaginary axis,
// walked up by parameter continuation so the branch never jumps.
std::complex<double> warm_start(double target_im) {
  std::complex<double> w(0.0, 0.05);
  w = w * (1.0 - w);  // W0(z) ~ z - z^2 for small z
  double x = 0.05;
  while (true) {
    x = std::min(2.0 * x, target_im);
    std::complex<double> c(0.0, x);
    for (int i = 0; i < 40; ++i) {
      std::complex<double> e = std::exp(w);
      std::complex<double> step = (w * e - c) / ((1.0 + w) * e);
      w -= step;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(w))) break;
    }
    if (x >= target_im) break;
  }
  return w;
}

// Newton for t e^t = i*c_im; returns true on convergence to the requested
// relative residual.
bool newton(HighComplex& t, const HighReal& c_im, const HighReal& tol, int max_iter) {
  mpfr_prec_t p = c_im.prec();
  HighComplex c(HighReal(p), c_im);
  HighReal abs_c = c_im;  // c_im > 0
  int polish = 0;
  for (int it = 0; it < max_iter; ++it) {
    HighComplex e = exp(t);
    HighComplex g = t * e - c;
    HighReal res = abs(g) / abs_c;
    if (res <= tol) {
      if (++polish > 1) return true;  // one extra step past tolerance
    }
    HighComplex step = g / ((t + HighReal(1, p)) * e);
    // clamp wild steps so the iteration cannot leave the basin explosively
    HighReal smax = abs(t) / 2 + 1;
    HighReal slen = abs(step);
    if (slen > smax) step = step * (smax / slen);
    t = t - step;
  }
  return false;
}

}  // namespace

HighComplex initial_guess(const SaddleSpec& spec, const PrecisionContext& ctx) {
  ctx.validate();
  if (spec.n < 1 || spec.k < 1)
    throw Error(Errc::invalid_input, "initial_guess: n and k must be positive");
  mpfr_prec_t p = ctx.working_bits;
  HighReal re = log(saddle_target_im(spec.n, spec.k, p));
  if (spec.n >= 3) re -= log(log(HighReal(spec.n, p)));
  return HighComplex(re, HighReal::pi(p) / 2);
}

SaddlePoint solve_saddle(const SaddleSpec& spec, const PrecisionContext& ctx) {
  ctx.validate();
  if (spec.n < 1 || spec.k < 1)
    throw Error(Errc::invalid_input, "solve_saddle: n and k must be positive");
  mpfr_prec_t p = ctx.working_bits;
  HighReal c_im = saddle_target_im(spec.n, spec.k, p);
  HighReal tol = ulp_scale(p, ctx.working_bits - ctx.guard_bits);

  HighComplex t = initial_guess(spec, ctx);
  bool ok = newton(t, c_im, tol, 200);
  if (!ok || !(t.imag().sign() > 0) || !(t.imag() < HighReal::pi(p))) {
    // fall back to a continuation-tracked start; the asymptotic guess is
    // unreliable for small n/(2 pi k)
    std::complex<double> w = warm_start(c_im.to_double());
    t = HighComplex(HighReal::from_double(w.real(), p), HighReal::from_double(w.imag(), p));
    ok = newton(t, c_im, tol, 200);
  }
  if (!ok) {
    HighComplex e = exp(t);
    HighReal res = abs(t * e - HighComplex(HighReal(p), c_im)) / c_im;
    throw Error(Errc::solver_failure,
                "solve_saddle: no convergence for n=" + std::to_string(spec.n) +
                    " k=" + std::to_string(spec.k) + "; last iterate " + t.str(12) +
                    " residual " + res.str(4));
  }
  if (!(t.imag().sign() > 0) || !(t.imag() < HighReal::pi(p)))
    throw Error(Errc::wrong_branch,
                "solve_saddle: converged to a saddle with Im outside (0, pi): " + t.str(12));

  // certify the residual at doubled precision
  mpfr_prec_t p2 = 2 * p;
  HighComplex t2 = at_prec(t, p2);
  HighReal c2 = saddle_target_im(spec.n, spec.k, p2);
  HighReal residual = abs(t2 * exp(t2) - HighComplex(HighReal(p2), c2)) / c2;

  SaddlePoint sp;
  sp.t0 = std::move(t);
  sp.residual = std::move(residual);
  sp.degraded_guess = spec.n < 3;
  return sp;
}

Frame frame(const SaddlePoint& saddle) {
  const HighReal& u = saddle.u();
  const HighReal& v = saddle.v();
  mpfr_prec_t p = saddle.t0.prec();
  HighComplex one_plus(u + 1, v);
  if (abs(one_plus).is_zero() || saddle.t0.is_zero())
    throw Error(Errc::degenerate_saddle, "frame: t0 = 0 or 1 + t0 = 0");

  HighReal r2 = u * u + v * v;
  HighReal pi = HighReal::pi(p);
  Frame f;
  f.A = log(r2) / 2 - u / r2;
  // arg(t0) rather than arctan(v/u): identical for u > 0 and the continuous
  // extension when u <= 0
  f.a = atan2(v, u) + v / r2;
  f.B = sqrt(pi * 8) * abs(saddle.t0) / sqrt(abs(one_plus));
  // b is the phase of t0/sqrt(1+t0) rewritten through the saddle identity
  // arg(t0) = pi/2 - v; the square root halves the angle of 1 + t0
  f.b = pi / 2 - v - atan2(v, u + 1) / 2;
  return f;
}

}  // namespace stieltjes
