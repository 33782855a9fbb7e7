#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "stieltjes/numerics.hpp"

namespace stieltjes {

/// Euler-Maclaurin evaluation parameters: m summation cutoff, R Bernoulli
/// correction terms.
struct EMConfig {
  long m = 20000;
  int R = 14;
  PrecisionContext ctx;

  void validate() const {
    if (m < 10 || R < 1 || R > 30)
      throw Error(Errc::invalid_input, "EMConfig requires m >= 10 and 1 <= R <= 30");
  }
};

/// Exact rationals B_2, B_4, ..., B_{2R} from the defining recursion
/// sum_{j=0}^{k} C(k+1, j) B_j = 0.
std::vector<mpq_class> bernoulli_numbers(int R);

/// Coefficients of P_r(L) where d^r/dy^r [L^n / y] = P_r(L) / y^{r+1}, L = log y.
/// P_0 = L^n and P_{r+1} = P_r' - (r+1) P_r; all coefficients stay integral.
class LogPowerPolynomial {
 public:
  explicit LogPowerPolynomial(long n);
  void step();                 // advance r -> r+1
  int r() const { return r_; }
  const std::vector<mpz_class>& coefficients() const { return coeff_; }
  HighReal eval(const HighReal& L) const;

 private:
  std::vector<mpz_class> coeff_;  // index = power of L
  int r_ = 0;
};

/// gamma_n(alpha) by Euler-Maclaurin summation of sum_j log^n(j+alpha)/(j+alpha)
/// minus the divergent part; alpha = "1" gives the classical constants.
LogScaled em_gamma(long n, const std::string& alpha, const EMConfig& cfg,
                   int digit_count = 40);

/// Runs (m, R) and (2m, R+2) and requires agreement on target_digits digits.
struct EMCertified {
  LogScaled value;
  int achieved_digits = 0;
  HighReal delta;  // relative disagreement of the two runs
};
EMCertified em_gamma_certified(long n, const std::string& alpha, const EMConfig& cfg,
                               int target_digits, int digit_count = 40);

/// A stored reference value: literature transcription or derived/oracle record.
struct ReferenceRecord {
  long n = 0;
  std::string alpha = "1";
  int sign = 0;
  std::string digits;
  long exponent10 = 0;
  std::string source;

  LogScaled value_at(mpfr_prec_t prec) const {
    return log_scaled_from_digits(sign, digits, exponent10, prec);
  }
};

/// Read-only fixture store backed by the plain-text record file
/// `n alpha sign digits exponent10 source`.
class ReferenceStore {
 public:
  static ReferenceStore load(const std::string& path);
  static std::string default_path();

  const std::vector<ReferenceRecord>& records() const { return records_; }
  /// Highest-digit-count record for (n, alpha), any source.
  const ReferenceRecord* best(long n, const std::string& alpha = "1") const;
  /// Literature record (source paper_*) for (n, alpha = 1).
  const ReferenceRecord* paper(long n) const;

 private:
  std::vector<ReferenceRecord> records_;
};

/// Fixture-or-oracle reference for classical gamma_n: the literature record
/// when one exists, an on-the-fly certified Euler-Maclaurin record for
/// n <= 30, and a no-reference error otherwise.
ReferenceRecord reference(long n, const ReferenceStore& store, const PrecisionContext& ctx);

}  // namespace stieltjes
