#pragma once

#include "stieltjes/numerics.hpp"

namespace stieltjes {

/// Index pair selecting one oscillatory contribution: n is the constant's
/// index, k the summand whose saddle is wanted.
struct SaddleSpec {
  long n = 0;
  long k = 1;
};

/// Principal solution t0 = u + iv of t e^t = n i / (2 pi k), with v in (0, pi).
/// residual = |t0 e^{t0} - c| / |c| evaluated at twice the working precision.
struct SaddlePoint {
  HighComplex t0;
  HighReal residual;
  bool degraded_guess = false;

  const HighReal& u() const { return t0.real(); }
  const HighReal& v() const { return t0.imag(); }
};

/// Real parameters of the leading oscillation B e^{nA} n^{-1/2} cos(na + b).
struct Frame {
  HighReal A, a, B, b;
};

/// Asymptotic starting point log(n/(2 pi k)) - log log n + (pi/2) i.
/// For n < 3 the log log term is dropped (degraded guess).
HighComplex initial_guess(const SaddleSpec& spec, const PrecisionContext& ctx);

SaddlePoint solve_saddle(const SaddleSpec& spec, const PrecisionContext& ctx);

Frame frame(const SaddlePoint& saddle);

/// Exact-value copies at a different working precision.
HighReal at_prec(const HighReal& x, mpfr_prec_t prec);
HighComplex at_prec(const HighComplex& z, mpfr_prec_t prec);

}  // namespace stieltjes
