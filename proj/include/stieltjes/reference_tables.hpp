#pragma once

#include <array>

namespace stieltjes::tables {

// Published reference values reproduced by the `repro` command. Coefficient
// entries are 10-decimal-place strings (a few carry an eleventh place);
// error entries are 4-significant-digit relative errors; value entries are
// signed leading digits with a decimal exponent.

struct CoeffRow {
  int s;
  const char* C;
  const char* D;
};
extern const std::array<CoeffRow, 6> kCoeffs100;   // n = 100
extern const std::array<CoeffRow, 6> kCoeffs1000;  // n = 1000

struct RelErrRow {
  int s;
  const char* n75;
  const char* n100;
  const char* n137;  // empty for s = 0 (sign is wrong there; no entry printed)
  const char* n1000;
};
extern const std::array<RelErrRow, 7> kRelErr;  // truncation-index sweep, k = 1

// The published n=137, s=2 entry reads 8.775e-2; the recomputed error is
// 8.775e-3 (identical 4-digit mantissa, exponent off by ten), so the printed
// exponent is taken to be a misprint. Comparisons use the corrected value and
// the reproduction report flags the discrepancy.
inline constexpr const char* kRelErrMisprint = "8.775e-2";
inline constexpr const char* kRelErrCorrected = "8.775e-3";

struct K2Row {
  int s;
  const char* k1;
  const char* k2;
};
extern const std::array<K2Row, 7> kRelErr25;  // n = 25, k = 1 and k <= 2

struct ValueRow {
  long n;
  int leading_sign;
  const char* leading_digits;  // 7 significant digits
  long leading_exp10;
  int closed_sign;
  const char* closed_digits;   // 9 significant digits
  long closed_exp10;
  int exact_sign;
  const char* exact_digits;    // 9 significant digits (truncated, not rounded)
  long exact_exp10;
};
extern const std::array<ValueRow, 7> kValues;

}  // namespace stieltjes::tables
