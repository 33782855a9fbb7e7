#pragma once

#include <vector>

#include "stieltjes/numerics.hpp"

namespace stieltjes::testing {

/// Taylor coefficients of an analytic h about t0 by the trapezoid rule on a
/// circle of radius rho: c_r ~ (1/N) sum_m h(t0 + rho e^{i th_m}) e^{-i r th_m} rho^{-r}.
/// Independent of any series machinery; evaluates h directly.
template <typename F>
std::vector<HighComplex> circle_taylor(F&& h, const HighComplex& t0, const HighReal& rho,
                                       int N, int max_r) {
  mpfr_prec_t p = t0.prec();
  HighReal two_pi = HighReal::pi(p) * 2;
  std::vector<HighComplex> samples;
  samples.reserve(N);
  for (int m = 0; m < N; ++m) {
    HighReal theta = two_pi * m / N;
    HighReal s(p), c(p);
    sin_cos(s, c, theta);
    samples.push_back(h(t0 + HighComplex(rho * c, rho * s)));
  }
  std::vector<HighComplex> out;
  out.reserve(max_r + 1);
  for (int r = 0; r <= max_r; ++r) {
    HighComplex acc(p);
    for (int m = 0; m < N; ++m) {
      HighReal theta = two_pi * ((static_cast<long>(m) * r) % N) / N;
      HighReal s(p), c(p);
      sin_cos(s, c, theta);
      acc += samples[m] * HighComplex(c, -s);
    }
    out.push_back(acc / pow_ui(rho, r) / N);
  }
  return out;
}

}  // namespace stieltjes::testing
