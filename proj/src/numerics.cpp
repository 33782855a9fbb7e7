#include "stieltjes/numerics.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <memory>

namespace stieltjes {

namespace {

mpfr_prec_t join(const HighReal& a, const HighReal& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

HighReal& HighReal::operator=(const HighReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

HighReal HighReal::from_double(double x, mpfr_prec_t prec) {
  HighReal r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

HighReal HighReal::from_string(const std::string& s, mpfr_prec_t prec) {
  HighReal r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(Errc::invalid_input, "unparsable decimal literal: " + s);
  return r;
}

HighReal HighReal::pi(mpfr_prec_t prec) {
  HighReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

HighReal HighReal::ln10(mpfr_prec_t prec) {
  HighReal r(prec);
  mpfr_set_ui(r.v_, 10, MPFR_RNDN);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string HighReal::str(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

HighReal HighReal::operator-() const {
  HighReal r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define STQ_BINOP(op, fn)                                        \
  HighReal operator op(const HighReal& a, const HighReal& b) {   \
    HighReal r(join(a, b));                                      \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
    return r;                                                    \
  }
STQ_BINOP(+, mpfr_add)
STQ_BINOP(-, mpfr_sub)
STQ_BINOP(*, mpfr_mul)
STQ_BINOP(/, mpfr_div)
#undef STQ_BINOP

HighReal operator+(const HighReal& a, long b) {
  HighReal r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HighReal operator-(const HighReal& a, long b) {
  HighReal r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HighReal operator-(long a, const HighReal& b) {
  HighReal r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
HighReal operator*(const HighReal& a, long b) {
  HighReal r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HighReal operator/(const HighReal& a, long b) {
  HighReal r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
HighReal operator/(long a, const HighReal& b) {
  HighReal r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

#define STQ_UNFN(name, fn)                 \
  HighReal name(const HighReal& x) {       \
    HighReal r(x.prec());                  \
    fn(r.v_, x.v_, MPFR_RNDN);             \
    return r;                              \
  }
STQ_UNFN(abs, mpfr_abs)
STQ_UNFN(sqrt, mpfr_sqrt)
STQ_UNFN(exp, mpfr_exp)
STQ_UNFN(expm1, mpfr_expm1)
STQ_UNFN(log, mpfr_log)
STQ_UNFN(log1p, mpfr_log1p)
STQ_UNFN(sin, mpfr_sin)
STQ_UNFN(cos, mpfr_cos)
STQ_UNFN(tan, mpfr_tan)
STQ_UNFN(atan, mpfr_atan)
#undef STQ_UNFN

HighReal atan2(const HighReal& y, const HighReal& x) {
  HighReal r(join(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
HighReal hypot(const HighReal& x, const HighReal& y) {
  HighReal r(join(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
HighReal floor(const HighReal& x) {
  HighReal r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}
HighReal pow_ui(const HighReal& x, unsigned long k) {
  HighReal r(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}
HighReal lngamma(const HighReal& x) {
  HighReal r(x.prec());
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
HighReal remainder(const HighReal& x, const HighReal& m) {
  HighReal r(join(x, m));
  mpfr_remainder(r.raw(), x.raw(), m.raw(), MPFR_RNDN);
  return r;
}
void sin_cos(HighReal& s, HighReal& c, const HighReal& x) {
  HighReal ss(x.prec()), cc(x.prec());
  mpfr_sin_cos(ss.raw(), cc.raw(), x.raw(), MPFR_RNDN);
  s = std::move(ss);
  c = std::move(cc);
}

std::string HighComplex::str(int digits) const {
  return "(" + re_.str(digits) + ", " + im_.str(digits) + ")";
}

HighComplex operator+(const HighComplex& a, const HighComplex& b) {
  return HighComplex(a.re_ + b.re_, a.im_ + b.im_);
}
HighComplex operator-(const HighComplex& a, const HighComplex& b) {
  return HighComplex(a.re_ - b.re_, a.im_ - b.im_);
}
HighComplex operator*(const HighComplex& a, const HighComplex& b) {
  return HighComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
HighComplex operator/(const HighComplex& a, const HighComplex& b) {
  HighReal den = b.re_ * b.re_ + b.im_ * b.im_;
  return HighComplex((a.re_ * b.re_ + a.im_ * b.im_) / den,
                     (a.im_ * b.re_ - a.re_ * b.im_) / den);
}
HighComplex operator+(const HighComplex& a, const HighReal& b) {
  return HighComplex(a.re_ + b, a.im_);
}
HighComplex operator-(const HighComplex& a, const HighReal& b) {
  return HighComplex(a.re_ - b, a.im_);
}
HighComplex operator*(const HighComplex& a, const HighReal& b) {
  return HighComplex(a.re_ * b, a.im_ * b);
}
HighComplex operator/(const HighComplex& a, const HighReal& b) {
  return HighComplex(a.re_ / b, a.im_ / b);
}
HighComplex operator*(const HighComplex& a, long b) {
  return HighComplex(a.re_ * b, a.im_ * b);
}
HighComplex operator/(const HighComplex& a, long b) {
  return HighComplex(a.re_ / b, a.im_ / b);
}

HighComplex exp(const HighComplex& z) {
  HighReal m = exp(z.re_);
  HighReal s(z.im_.prec()), c(z.im_.prec());
  sin_cos(s, c, z.im_);
  return HighComplex(m * c, m * s);
}

HighComplex log(const HighComplex& z) {
  return HighComplex(log(abs(z)), arg(z));
}

HighComplex sqrt(const HighComplex& z) {
  // principal branch via polar form
  HighReal m = sqrt(abs(z));
  HighReal half_arg = arg(z) / 2;
  HighReal s(half_arg.prec()), c(half_arg.prec());
  sin_cos(s, c, half_arg);
  return HighComplex(m * c, m * s);
}

HighComplex inverse(const HighComplex& z) {
  HighReal den = z.re_ * z.re_ + z.im_ * z.im_;
  return HighComplex(z.re_ / den, -z.im_ / den);
}

HighComplex pow_ui(const HighComplex& z, unsigned long k) {
  HighComplex acc(1, z.prec());
  HighComplex base = z;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

namespace {

// Render |x| (finite, nonzero) to `digits` significant decimal digits with
// round-to-nearest; returns the digit string and the decimal exponent E such
// that |x| = 0.d1d2... * 10^(E+1).
std::pair<std::string, long> mantissa_digits(const HighReal& x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, abs(x).raw());
  std::string s(buf);
  mpfr_free_str(buf);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  long e10 = std::stol(s.substr(epos + 1));
  mant.erase(std::remove(mant.begin(), mant.end(), '.'), mant.end());
  return {mant, e10};
}

LogScaled build_log_scaled(int sign, const HighReal& ln_mag, int digit_count, bool truncated) {
  if (sign != -1 && sign != 1)
    throw Error(Errc::invalid_input, "to_log_scaled: sign must be -1 or +1");
  if (!ln_mag.is_finite())
    throw Error(Errc::invalid_input, "to_log_scaled: ln_mag must be finite");
  if (digit_count < 1)
    throw Error(Errc::invalid_input, "to_log_scaled: digit_count must be >= 1");

  mpfr_prec_t prec = std::max<mpfr_prec_t>(ln_mag.prec(), 64);
  HighReal l10 = HighReal::ln10(prec);
  HighReal e10f = floor(ln_mag / l10);
  long e10 = e10f.to_long();
  HighReal mant = exp(ln_mag - l10 * e10);  // ~ [1, 10); snprintf renormalizes drift

  LogScaled out;
  out.sign = sign;
  out.ln_mag = ln_mag;
  if (!truncated) {
    auto [ds, eadj] = mantissa_digits(mant, digit_count);
    out.digits = ds;
    out.exponent10 = e10 + eadj;
  } else {
    // round-toward-zero digits; request extra headroom then cut
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, std::max(digit_count, 2), mant.raw(), MPFR_RNDZ);
    std::string ds(raw);
    mpfr_free_str(raw);
    ds = ds.substr(0, digit_count);
    out.digits = ds;
    out.exponent10 = e10 + (e - 1);
  }
  return out;
}

}  // namespace

LogScaled to_log_scaled(int sign, const HighReal& ln_mag, int digit_count) {
  return build_log_scaled(sign, ln_mag, digit_count, false);
}

LogScaled to_log_scaled_truncated(int sign, const HighReal& ln_mag, int digit_count) {
  return build_log_scaled(sign, ln_mag, digit_count, true);
}

bool compare_digits(const LogScaled& a, const LogScaled& b, int k) {
  if (a.sign == 0 || b.sign == 0)
    throw Error(Errc::invalid_input, "compare_digits: both values must be non-zero");
  if (k < 1 || k > static_cast<int>(a.digits.size()) || k > static_cast<int>(b.digits.size()))
    throw Error(Errc::insufficient_digits,
                "compare_digits: requested " + std::to_string(k) + " digits, stored " +
                    std::to_string(a.digits.size()) + " and " + std::to_string(b.digits.size()));
  if (a.sign != b.sign) return false;
  LogScaled ra = to_log_scaled(a.sign, a.ln_mag, k);
  LogScaled rb = to_log_scaled(b.sign, b.ln_mag, k);
  return ra.exponent10 == rb.exponent10 && ra.digits == rb.digits;
}

HighReal rel_diff(const LogScaled& a, const LogScaled& b) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(
      std::max(a.sign ? a.ln_mag.prec() : 64, b.sign ? b.ln_mag.prec() : 64), 64);
  if (a.sign == 0 && b.sign == 0) return HighReal(0, prec);
  if (a.sign == 0 || b.sign == 0) {
    HighReal inf(prec);
    mpfr_set_inf(inf.raw(), 1);
    return inf;
  }
  HighReal d = a.ln_mag - b.ln_mag;
  if (a.sign == b.sign) return abs(expm1(d));
  return exp(d) + 1;
}

LogScaled log_sum(const std::vector<LogScaled>& terms, int digit_count) {
  const LogScaled* top = nullptr;
  for (const auto& t : terms)
    if (t.sign != 0 && (top == nullptr || top->ln_mag < t.ln_mag)) top = &t;
  if (top == nullptr) return LogScaled::zero();

  HighReal acc(top->ln_mag.prec());
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    HighReal part = exp(t.ln_mag - top->ln_mag);
    if (t.sign < 0) acc -= part; else acc += part;
  }
  if (acc.is_zero()) return LogScaled::zero();
  return to_log_scaled(acc.sign(), top->ln_mag + log(abs(acc)), digit_count);
}

LogScaled log_scaled_of(const HighReal& x, int digit_count) {
  if (x.is_zero()) return LogScaled::zero();
  return to_log_scaled(x.sign(), log(abs(x)), digit_count);
}

LogScaled log_scaled_from_digits(int sign, const std::string& digits, long exponent10,
                                 mpfr_prec_t prec) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::invalid_input, "bad digit string: " + digits);
  std::string mant = digits.substr(0, 1) + "." + (digits.size() > 1 ? digits.substr(1) : "0");
  HighReal m = HighReal::from_string(mant, prec);
  LogScaled out;
  out.sign = sign;
  out.ln_mag = log(m) + HighReal::ln10(prec) * exponent10;
  out.digits = digits;
  out.exponent10 = exponent10;
  return out;
}

}  // namespace stieltjes
