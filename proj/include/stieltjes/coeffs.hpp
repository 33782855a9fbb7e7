#pragma once

#include <utility>
#include <vector>

#include "stieltjes/saddle.hpp"

namespace stieltjes {

/// Taylor coefficients alpha_r of the phase about the saddle:
/// psi(t) - psi(t0) = sum_r alpha_r (t - t0)^{r+2}.
struct PhaseSeries {
  std::vector<HighComplex> alpha;  // index r = 0..order
  HighComplex t0;
  long n = 0;
  long k = 1;
};

/// Taylor coefficients beta_r of the amplitude f(t) = e^{-t}/t (1 - t/n)
/// about the saddle: f(t) = sum_r beta_r (t - t0)^r.
struct AmplitudeSeries {
  std::vector<HighComplex> beta;  // index r = 0..order
  HighComplex t0;
  long n = 0;
};

/// Partial ordinary Bell polynomial values in the alpha_r, lower triangle
/// 0 <= j <= k <= K.
class BellTable {
 public:
  BellTable(int K, mpfr_prec_t prec);
  int order() const { return K_; }
  const HighComplex& at(int k, int j) const { return e_[idx(k, j)]; }
  HighComplex& at(int k, int j) { return e_[idx(k, j)]; }

 private:
  size_t idx(int k, int j) const;
  int K_;
  std::vector<HighComplex> e_;
};

/// Normalised even coefficients c_hat (index s <-> subscript 2s), the folded
/// c_prime, and their real/imaginary splits C_s, D_s.
struct CoefficientSet {
  std::vector<HighComplex> c_hat;
  std::vector<HighComplex> c_prime;
  std::vector<HighReal> C, D;
};

/// n-independent constants of the two-term closed-form approximation,
/// together with the polynomial values they are built from.
struct ClosedFormConstants {
  HighReal c1, d1, c2, d2;
  HighComplex p2, p4;
};

/// alpha_r from the closed form psi^{(m)}(t0) = 1/t0 + (-1)^m (m-1)!/t0^m
/// (saddle condition substituted exactly, so no linear term remains).
PhaseSeries phase_taylor(const SaddlePoint& saddle, const SaddleSpec& spec, int order);

/// beta_r by truncated-series product of exp(-t0-d), 1/(t0+d) and (1-(t0+d)/n).
AmplitudeSeries amp_taylor(const SaddlePoint& saddle, long n, int order);

/// Lower-triangular table from the convolution recursion
/// B_{kj} = sum_{r=1}^{k-j+1} alpha_r B_{k-r,j-1}, B_{k0} = delta_{k0}.
BellTable bell_table(const PhaseSeries& phase, int K);

/// c_hat_{2s} for s = 0..s_max via the Bell-polynomial inversion formula.
std::vector<HighComplex> wojdylo(const PhaseSeries& phase, const AmplitudeSeries& amp, int s_max);

/// Independent closed-form route to c_hat_2 and c_hat_4 (derivative ratios
/// assembled directly, no series machinery).
std::pair<HighComplex, HighComplex> chat_direct(const SaddlePoint& saddle, const SaddleSpec& spec);

/// c_prime_{2s} = c_hat_{2s} - (2 t0/(2s-1)) c_hat_{2s-2} and the split
/// c_prime_{2s} = C_s + i D_s.
CoefficientSet fold_and_split(const std::vector<HighComplex>& c_hat, const HighComplex& t0);

/// Evaluates the degree-4 and degree-8 polynomials of the closed-form
/// approximation and the constants c1, d1, c2, d2 derived from them.
ClosedFormConstants theorem2_constants(const SaddlePoint& saddle);

}  // namespace stieltjes
