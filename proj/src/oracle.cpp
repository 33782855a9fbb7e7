#include "stieltjes/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace stieltjes {

std::vector<mpq_class> bernoulli_numbers(int R) {
  if (R < 0 || R > 30) throw Error(Errc::invalid_input, "bernoulli_numbers: R out of range");
  // B_0..B_{2R} via B_k = -1/(k+1) sum_{j<k} C(k+1, j) B_j
  std::vector<mpq_class> b(2 * R + 1);
  b[0] = 1;
  for (int k = 1; k <= 2 * R; ++k) {
    mpq_class acc = 0;
    for (int j = 0; j < k; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
      acc += binom * b[j];
    }
    b[k] = -acc / (k + 1);
  }
  std::vector<mpq_class> even;
  even.reserve(R);
  for (int r = 1; r <= R; ++r) even.push_back(b[2 * r]);
  return even;
}

LogPowerPolynomial::LogPowerPolynomial(long n) : coeff_(n + 1) {
  if (n < 0) throw Error(Errc::invalid_input, "LogPowerPolynomial: n must be >= 0");
  coeff_[n] = 1;
}

void LogPowerPolynomial::step() {
  // P_{r+1}[j] = (j+1) P_r[j+1] - (r+1) P_r[j]
  std::vector<mpz_class> next(coeff_.size());
  for (size_t j = 0; j < coeff_.size(); ++j) {
    mpz_class v = -(r_ + 1) * coeff_[j];
    if (j + 1 < coeff_.size()) v += mpz_class(static_cast<long>(j + 1)) * coeff_[j + 1];
    next[j] = v;
  }
  coeff_ = std::move(next);
  ++r_;
}

HighReal LogPowerPolynomial::eval(const HighReal& L) const {
  mpfr_prec_t p = L.prec();
  HighReal acc(p);
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    acc *= L;
    HighReal c(p);
    mpfr_set_z(c.raw(), it->get_mpz_t(), MPFR_RNDN);
    acc += c;
  }
  return acc;
}

LogScaled em_gamma(long n, const std::string& alpha, const EMConfig& cfg, int digit_count) {
  cfg.validate();
  cfg.ctx.validate();
  if (n < 0) throw Error(Errc::invalid_input, "em_gamma: n must be >= 0");
  mpfr_prec_t p = cfg.ctx.working_bits;
  HighReal a = HighReal::from_string(alpha, p);
  if (!(a.sign() > 0)) throw Error(Errc::invalid_input, "em_gamma: alpha must be > 0");

  // sum_{j=0}^{m} log^n(j+alpha)/(j+alpha), raw mpfr inner loop
  HighReal S(0, p);
  {
    mpfr_t y, L, t;
    mpfr_init2(y, p);
    mpfr_init2(L, p);
    mpfr_init2(t, p);
    mpfr_set(y, a.raw(), MPFR_RNDN);
    for (long j = 0; j <= cfg.m; ++j) {
      mpfr_log(L, y, MPFR_RNDN);
      mpfr_pow_ui(t, L, static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_div(t, t, y, MPFR_RNDN);
      mpfr_add(S.raw(), S.raw(), t, MPFR_RNDN);
      mpfr_add_ui(y, y, 1, MPFR_RNDN);
    }
    mpfr_clear(y);
    mpfr_clear(L);
    mpfr_clear(t);
  }

  HighReal ym = a + cfg.m;
  HighReal L = log(ym);
  S -= pow_ui(L, static_cast<unsigned long>(n + 1)) / (n + 1);
  HighReal Fm = pow_ui(L, static_cast<unsigned long>(n)) / ym;
  S -= Fm / 2;

  // - sum_{r=1}^{R} B_{2r}/(2r)! * F^{(2r-1)}(m), F^{(s)} = P_s(L)/y^{s+1}
  std::vector<mpq_class> bern = bernoulli_numbers(cfg.R);
  LogPowerPolynomial P(n);
  P.step();  // to index 1; each pass below advances by two to 2r - 1
  mpz_class fact = 1;  // (2r)!
  HighReal ypow = ym;  // y^{2r}
  for (int r = 1; r <= cfg.R; ++r) {
    if (r > 1) {
      P.step();
      P.step();
    }
    fact *= (2 * r - 1);
    fact *= (2 * r);
    ypow *= ym;
    mpq_class q = bern[r - 1] / mpq_class(fact);
    HighReal w(p);
    mpfr_set_q(w.raw(), q.get_mpq_t(), MPFR_RNDN);
    S -= w * (P.eval(L) / ypow);
    ypow *= ym;  // set up y^{2r+1} -> next loop multiplies to y^{2(r+1)}
  }

  return log_scaled_of(S, digit_count);
}

EMCertified em_gamma_certified(long n, const std::string& alpha, const EMConfig& cfg,
                               int target_digits, int digit_count) {
  EMConfig big = cfg;
  big.m = 2 * cfg.m;
  big.R = std::min(cfg.R + 2, 30);
  LogScaled v1 = em_gamma(n, alpha, cfg, digit_count);
  LogScaled v2 = em_gamma(n, alpha, big, digit_count);
  HighReal delta = rel_diff(v1, v2);
  int achieved;
  if (delta.is_zero()) {
    achieved = static_cast<int>((cfg.ctx.working_bits - cfg.ctx.guard_bits) * 0.301);
  } else {
    achieved = static_cast<int>(-std::log10(std::abs(delta.to_double()) + 1e-300));
  }
  if (v1.sign != v2.sign || achieved < target_digits)
    throw Error(Errc::certification_failure,
                "em_gamma runs (m=" + std::to_string(cfg.m) + ",R=" + std::to_string(cfg.R) +
                    ") and (m=" + std::to_string(big.m) + ",R=" + std::to_string(big.R) +
                    ") agree to only " + std::to_string(achieved) +
                    " digits; wanted " + std::to_string(target_digits) +
                    " (increase m/R or precision)");
  return EMCertified{std::move(v2), achieved, std::move(delta)};
}

ReferenceStore ReferenceStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open fixture file: " + path);
  ReferenceStore store;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    ReferenceRecord rec;
    std::string sign_s;
    if (!(ss >> rec.n >> rec.alpha >> sign_s >> rec.digits >> rec.exponent10 >> rec.source))
      throw Error(Errc::io_error, "malformed fixture line: " + line);
    rec.sign = sign_s == "-1" ? -1 : +1;
    store.records_.push_back(std::move(rec));
  }
  return store;
}

std::string ReferenceStore::default_path() {
  if (const char* env = std::getenv("STIELTJES_FIXTURES")) return env;
#ifdef STIELTJES_DEFAULT_FIXTURES
  return STIELTJES_DEFAULT_FIXTURES;
#else
  return "data/reference_values.txt";
#endif
}

const ReferenceRecord* ReferenceStore::best(long n, const std::string& alpha) const {
  const ReferenceRecord* out = nullptr;
  for (const auto& r : records_)
    if (r.n == n && r.alpha == alpha &&
        (out == nullptr || r.digits.size() > out->digits.size()))
      out = &r;
  return out;
}

const ReferenceRecord* ReferenceStore::paper(long n) const {
  for (const auto& r : records_)
    if (r.n == n && r.alpha == "1" && r.source.rfind("paper_", 0) == 0) return &r;
  return nullptr;
}

ReferenceRecord reference(long n, const ReferenceStore& store, const PrecisionContext& ctx) {
  if (const ReferenceRecord* rec = store.paper(n)) return *rec;
  if (n <= 30 && n >= 0) {
    EMConfig cfg;
    cfg.m = 20000;
    cfg.R = 14;
    cfg.ctx = ctx;
    cfg.ctx.working_bits = std::max<long>(ctx.working_bits, 320);
    EMCertified cert = em_gamma_certified(n, "1", cfg, 25);
    ReferenceRecord rec;
    rec.n = n;
    rec.alpha = "1";
    rec.sign = cert.value.sign;
    rec.digits = cert.value.digits;
    rec.exponent10 = cert.value.exponent10;
    rec.source = "oracle";
    return rec;
  }
  throw Error(Errc::no_reference,
              "no reference for n=" + std::to_string(n) +
                  ": not in the fixture set and beyond the oracle ceiling (30)");
}

}  // namespace stieltjes
