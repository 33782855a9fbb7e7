#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "stieltjes/common.hpp"

namespace stieltjes {

/// Precision settings shared by every operation of an evaluation.
/// working_bits is the binary precision of all scalar arithmetic; guard_bits
/// is the slack between that precision and the accuracy we certify.
struct PrecisionContext {
  long working_bits = 256;
  long guard_bits = 16;

  void validate() const {
    if (working_bits < 64 || guard_bits < 16)
      throw Error(Errc::invalid_input,
                  "PrecisionContext requires working_bits >= 64 and guard_bits >= 16");
  }
};

/// Arbitrary-precision real scalar (MPFR, round-to-nearest throughout).
/// Values are immutable in spirit: operations return fresh values, and the
/// in-place operators are provided only for inner loops.
class HighReal {
 public:
  HighReal() : HighReal(MPFR_PREC_MIN) {}
  explicit HighReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  HighReal(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
  HighReal(const HighReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  HighReal(HighReal&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  HighReal& operator=(const HighReal& o);
  HighReal& operator=(HighReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~HighReal() { mpfr_clear(v_); }

  static HighReal from_double(double x, mpfr_prec_t prec);
  static HighReal from_string(const std::string& s, mpfr_prec_t prec);
  static HighReal pi(mpfr_prec_t prec);
  static HighReal ln10(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Scientific-notation decimal rendering with `digits` significant digits.
  std::string str(int digits = 20) const;

  HighReal operator-() const;
  HighReal& operator+=(const HighReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HighReal& operator-=(const HighReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HighReal& operator*=(const HighReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HighReal& operator/=(const HighReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HighReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  HighReal& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

  friend HighReal operator+(const HighReal& a, const HighReal& b);
  friend HighReal operator-(const HighReal& a, const HighReal& b);
  friend HighReal operator*(const HighReal& a, const HighReal& b);
  friend HighReal operator/(const HighReal& a, const HighReal& b);
  friend HighReal operator+(const HighReal& a, long b);
  friend HighReal operator-(const HighReal& a, long b);
  friend HighReal operator-(long a, const HighReal& b);
  friend HighReal operator*(const HighReal& a, long b);
  friend HighReal operator/(const HighReal& a, long b);
  friend HighReal operator/(long a, const HighReal& b);

  friend bool operator<(const HighReal& a, const HighReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const HighReal& a, const HighReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const HighReal& a, const HighReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const HighReal& a, const HighReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const HighReal& a, const HighReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const HighReal& a, const HighReal& b) { return !mpfr_equal_p(a.v_, b.v_); }

  friend HighReal abs(const HighReal& x);
  friend HighReal sqrt(const HighReal& x);
  friend HighReal exp(const HighReal& x);
  friend HighReal expm1(const HighReal& x);
  friend HighReal log(const HighReal& x);
  friend HighReal log1p(const HighReal& x);
  friend HighReal sin(const HighReal& x);
  friend HighReal cos(const HighReal& x);
  friend HighReal tan(const HighReal& x);
  friend HighReal atan(const HighReal& x);
  friend HighReal atan2(const HighReal& y, const HighReal& x);
  friend HighReal hypot(const HighReal& x, const HighReal& y);
  friend HighReal floor(const HighReal& x);
  friend HighReal pow_ui(const HighReal& x, unsigned long k);
  friend HighReal lngamma(const HighReal& x);
  /// Exact remainder of x modulo m, in [-m/2, m/2].
  friend HighReal remainder(const HighReal& x, const HighReal& m);
  friend void sin_cos(HighReal& s, HighReal& c, const HighReal& x);

 private:
  mpfr_t v_;
};

/// Complex scalar built from two HighReal parts; principal branches only.
class HighComplex {
 public:
  HighComplex() = default;
  explicit HighComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  HighComplex(HighReal re, HighReal im) : re_(std::move(re)), im_(std::move(im)) {}
  HighComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

  const HighReal& real() const { return re_; }
  const HighReal& imag() const { return im_; }
  HighReal& real() { return re_; }
  HighReal& imag() { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string str(int digits = 20) const;

  HighComplex operator-() const { return HighComplex(-re_, -im_); }
  friend HighComplex operator+(const HighComplex& a, const HighComplex& b);
  friend HighComplex operator-(const HighComplex& a, const HighComplex& b);
  friend HighComplex operator*(const HighComplex& a, const HighComplex& b);
  friend HighComplex operator/(const HighComplex& a, const HighComplex& b);
  friend HighComplex operator+(const HighComplex& a, const HighReal& b);
  friend HighComplex operator-(const HighComplex& a, const HighReal& b);
  friend HighComplex operator*(const HighComplex& a, const HighReal& b);
  friend HighComplex operator/(const HighComplex& a, const HighReal& b);
  friend HighComplex operator*(const HighComplex& a, long b);
  friend HighComplex operator/(const HighComplex& a, long b);
  HighComplex& operator+=(const HighComplex& o) { *this = *this + o; return *this; }
  HighComplex& operator-=(const HighComplex& o) { *this = *this - o; return *this; }

  friend HighComplex conj(const HighComplex& z) { return HighComplex(z.re_, -z.im_); }
  friend HighReal abs(const HighComplex& z) { return hypot(z.re_, z.im_); }
  friend HighReal arg(const HighComplex& z) { return atan2(z.im_, z.re_); }
  friend HighComplex exp(const HighComplex& z);
  friend HighComplex log(const HighComplex& z);
  friend HighComplex sqrt(const HighComplex& z);
  friend HighComplex inverse(const HighComplex& z);
  friend HighComplex pow_ui(const HighComplex& z, unsigned long k);

 private:
  HighReal re_, im_;
};

/// Sign/ln-magnitude/leading-digits representation for values whose decimal
/// exponent can be far outside any fixed floating-point range.
struct LogScaled {
  int sign = 0;                 // -1, 0, +1; 0 iff the value is exactly zero
  HighReal ln_mag;              // natural log of |value|; unused when sign == 0
  std::string digits;           // leading decimal digits, round-to-nearest
  long exponent10 = 0;          // value = sign * 0.digits... * 10^(exponent10+1)

  static LogScaled zero() { return LogScaled{}; }
};

/// Build a LogScaled from a sign and the natural log of the magnitude.
LogScaled to_log_scaled(int sign, const HighReal& ln_mag, int digit_count);

/// As to_log_scaled but digits are truncated toward zero instead of rounded;
/// matches the ellipsis convention of printed reference values.
LogScaled to_log_scaled_truncated(int sign, const HighReal& ln_mag, int digit_count);

/// True iff signs, decimal exponents and the first k digits (after rounding
/// both values to k digits) all agree.
bool compare_digits(const LogScaled& a, const LogScaled& b, int k);

/// |a/b - 1| evaluated in ln-space (sign-aware; exact across any magnitude).
HighReal rel_diff(const LogScaled& a, const LogScaled& b);

/// Signed sum of log-scaled terms, carried out at the scale of the largest.
LogScaled log_sum(const std::vector<LogScaled>& terms, int digit_count);

/// LogScaled from an ordinary finite value.
LogScaled log_scaled_of(const HighReal& x, int digit_count);

/// Parse "digits" (no decimal point) + exponent10 into a LogScaled at `prec`.
LogScaled log_scaled_from_digits(int sign, const std::string& digits, long exponent10,
                                 mpfr_prec_t prec);

}  // namespace stieltjes
