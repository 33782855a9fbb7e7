#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/coeffs.hpp"

namespace stieltjes {

enum class Mode { leading, theorem1, theorem2 };

struct ExpansionRequest {
  long n = 0;
  int s_max = 6;
  long k_max = 1;
  Mode mode = Mode::theorem1;
  std::optional<std::string> hurwitz_alpha;  // decimal literal, parsed at working precision
  PrecisionContext ctx;
  int digit_count = 12;
};

/// One series term pair: C_s (1/2)_s n^{-s} and D_s (1/2)_s n^{-s}.
struct TermPair {
  HighReal cos_term, sin_term;
};

struct GammaEstimate {
  LogScaled value;
  std::vector<std::pair<long, LogScaled>> per_k;  // (k, -Im J_k)
  std::vector<TermPair> terms;                    // k = 1 series terms, s = 0..s_max
  HighReal cos_factor;                            // cos(na + b) of the k = 1 saddle
  bool truncation_flag = false;                   // term magnitudes stopped decreasing
  bool sign_suspect = false;                      // cosine factor too small to trust the
                                                  // sign of the cosine-only value
};

struct BoundsReport {
  LogScaled berndt;
  LogScaled zhang_williams;
  LogScaled matsuoka;  // zero/absent for n < 10
  HighReal lambda_n;
};

/// Everything derived from one (n, k) saddle; shared by the evaluators and
/// by table reproduction so per-s partial sums reuse one coefficient set.
struct SaddleChain {
  SaddlePoint saddle;
  Frame fr;
  CoefficientSet coeffs;
};
SaddleChain build_chain(long n, long k, int s_max, const PrecisionContext& ctx);

/// Theorem-1-form contribution of one saddle chain: the bracket
/// cos(phi) sum_s C_s (1/2)_s n^{-s} - sin(phi) sum_{s>=1} D_s (1/2)_s n^{-s}
/// with phi = n a + b - shift reduced mod 2pi, assembled into a log-scaled
/// value B e^{nA} n^{-1/2} * bracket.
struct ChainValue {
  LogScaled value;
  HighReal cos_factor;
  std::vector<TermPair> terms;
  bool truncation_flag = false;
};
ChainValue eval_chain(const SaddleChain& chain, long n, int s_max,
                      const HighReal* phase_shift, int digit_count);

GammaEstimate eval_theorem1(const ExpansionRequest& req);
LogScaled eval_Jk(long n, long k, int s_max, const PrecisionContext& ctx, int digit_count);
GammaEstimate eval_multi(const ExpansionRequest& req);
GammaEstimate eval_theorem2(long n, const PrecisionContext& ctx, int digit_count = 12);
GammaEstimate eval_leading(long n, const PrecisionContext& ctx, int digit_count = 12);

/// Generalized constants: returns (C_n(alpha), gamma_n(alpha)).
/// When use_closed_form is true the two-term closed form replaces the series.
std::pair<GammaEstimate, GammaEstimate> eval_hurwitz(long n, const std::string& alpha,
                                                     int s_max, const PrecisionContext& ctx,
                                                     int digit_count = 12,
                                                     bool use_closed_form = false);

BoundsReport bounds(long n, const PrecisionContext& ctx, int digit_count = 12);

/// k-truncation default: 1 for n >= 75, 2 for 30 <= n < 75, 3 below.
long default_k_max(long n);

/// Double-and-compare certification: evaluates the request at the context
/// precision and at twice that, raising precision until the two runs agree
/// on digit_count digits. Throws precision_insufficient past 16384 bits.
struct CertifiedEstimate {
  GammaEstimate est;
  long bits_used = 0;
  int achieved_digits = 0;
};
CertifiedEstimate evaluate_certified(const ExpansionRequest& req);

}  // namespace stieltjes
