#include "stieltjes/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stieltjes/expansion.hpp"
#include "stieltjes/oracle.hpp"
#include "stieltjes/repro.hpp"

namespace stieltjes::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string value_text(int sign, const std::string& digits, long exponent10) {
  if (sign == 0 || digits.empty()) return "0";
  std::string s = sign < 0 ? "-" : "+";
  s += digits.substr(0, 1);
  if (digits.size() > 1) s += "." + digits.substr(1);
  s += "e" + std::to_string(exponent10);
  return s;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::precision_insufficient:
    case Errc::certification_failure:
      return 2;
    case Errc::solver_failure:
    case Errc::wrong_branch:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

std::string OutputRecord::value_string() const {
  return value_text(sign, digits, exponent10);
}

std::string OutputRecord::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n"
     << "n: " << n << "\n"
     << "alpha: " << alpha << "\n"
     << "mode: " << mode << "\n"
     << "terms: " << s_max << "\n"
     << "kmax: " << k_max << "\n"
     << "precision_bits: " << precision_bits << "\n"
     << "value: " << value_string() << "\n"
     << "sign: " << sign << "\n"
     << "digits: " << digits << "\n"
     << "exponent10: " << exponent10 << "\n";
  if (!cos_factor.empty()) os << "cos_factor: " << cos_factor << "\n";
  for (const auto& pk : per_k)
    os << "per_k[" << pk.k << "]: " << value_text(pk.sign, pk.digits, pk.exponent10) << "\n";
  os << "truncation_flag: " << (truncation_flag ? "true" : "false") << "\n"
     << "achieved_digits: " << achieved_digits << "\n"
     << "sign_suspect: " << (sign_suspect ? "true" : "false") << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string OutputRecord::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["request"] = {{"n", n},     {"alpha", alpha},          {"mode", mode},
                  {"terms", s_max}, {"kmax", k_max},       {"precision_bits", precision_bits}};
  j["value"] = {{"sign", sign}, {"digits", digits}, {"exponent10", exponent10},
                {"text", value_string()}};
  ordered_json diag;
  diag["cos_factor"] = cos_factor;
  ordered_json pks = ordered_json::array();
  for (const auto& pk : per_k)
    pks.push_back({{"k", pk.k},
                   {"sign", pk.sign},
                   {"digits", pk.digits},
                   {"exponent10", pk.exponent10}});
  diag["per_k"] = pks;
  diag["truncation_flag"] = truncation_flag;
  diag["achieved_digits"] = achieved_digits;
  diag["sign_suspect"] = sign_suspect;
  diag["warnings"] = warnings;
  j["diagnostics"] = diag;
  return j.dump(2) + "\n";
}

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  os << "command,n,alpha,mode,terms,kmax,precision_bits,sign,digits,exponent10,"
        "cos_factor,truncation_flag,achieved_digits,sign_suspect\n";
  os << command << ',' << n << ',' << alpha << ',' << mode << ',' << s_max << ',' << k_max
     << ',' << precision_bits << ',' << sign << ',' << digits << ',' << exponent10 << ','
     << cos_factor << ',' << (truncation_flag ? 1 : 0) << ',' << achieved_digits << ','
     << (sign_suspect ? 1 : 0) << "\n";
  return os.str();
}

namespace {

void emit(const OutputRecord& rec, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << rec.to_json();
  else if (format == "csv")
    out << rec.to_csv();
  else
    out << rec.to_text();
}

void fill_value(OutputRecord& rec, const LogScaled& v) {
  rec.sign = v.sign;
  rec.digits = v.digits;
  rec.exponent10 = v.exponent10;
}

int cmd_eval(long n, int terms, long kmax, bool kmax_given, const std::string& mode,
             const std::string& alpha, bool alpha_given, long prec, int digits,
             const std::string& format, std::ostream& out) {
  ExpansionRequest req;
  req.n = n;
  req.s_max = terms;
  req.k_max = kmax_given ? kmax : default_k_max(n);
  req.mode = mode == "leading" ? Mode::leading : mode == "t2" ? Mode::theorem2 : Mode::theorem1;
  if (alpha_given) req.hurwitz_alpha = alpha;
  req.ctx.working_bits = prec;
  req.digit_count = digits;

  CertifiedEstimate cert = evaluate_certified(req);

  OutputRecord rec;
  rec.command = "eval";
  rec.n = n;
  rec.alpha = alpha_given ? alpha : "1";
  rec.mode = mode;
  rec.s_max = req.mode == Mode::theorem2 ? 2 : (req.mode == Mode::leading ? 0 : terms);
  rec.k_max = req.mode == Mode::theorem1 && !alpha_given ? req.k_max : 1;
  rec.precision_bits = cert.bits_used;
  fill_value(rec, cert.est.value);
  rec.cos_factor = cert.est.cos_factor.is_finite() ? cert.est.cos_factor.str(17) : "";
  for (const auto& [k, v] : cert.est.per_k)
    rec.per_k.push_back({k, v.sign, v.digits, v.exponent10});
  rec.truncation_flag = cert.est.truncation_flag;
  rec.achieved_digits = cert.achieved_digits;
  rec.sign_suspect = cert.est.sign_suspect;
  if (n < 10)
    rec.warnings.push_back(
        "n < 10: saddle contributions beyond kmax can be significant at this size");
  if (cert.est.sign_suspect)
    rec.warnings.push_back(
        "cosine factor is small; the sign of the cosine-only value is unreliable");
  if (cert.est.truncation_flag)
    rec.warnings.push_back("series terms stopped decreasing before the truncation index");
  emit(rec, format, out);
  return 0;
}

int cmd_repro(int table, const std::string& fixtures, long prec, const std::string& format,
              std::ostream& out) {
  ReferenceStore store = ReferenceStore::load(fixtures);
  PrecisionContext ctx;
  ctx.working_bits = prec;
  repro::Report rep = repro::run_table(table, store, ctx);
  if (format == "json") {
    ordered_json j;
    j["command"] = "repro";
    j["table"] = rep.table;
    ordered_json rows = ordered_json::array();
    for (const auto& e : rep.entries)
      rows.push_back({{"label", e.label},
                      {"computed", e.computed},
                      {"expected", e.expected},
                      {"deviation", e.deviation},
                      {"pass", e.pass}});
    j["entries"] = rows;
    j["all_pass"] = rep.all_pass;
    out << j.dump(2) << "\n";
  } else {
    out << "table " << rep.table << "\n";
    for (const auto& e : rep.entries) {
      out << (e.pass ? "[ ok ] " : "[FAIL] ") << e.label << "  computed=" << e.computed
          << "  expected=" << e.expected << "  deviation=" << e.deviation << "\n";
    }
    size_t passed = 0;
    for (const auto& e : rep.entries) passed += e.pass ? 1 : 0;
    out << (rep.all_pass ? "PASS " : "FAIL ") << passed << "/" << rep.entries.size()
        << " entries\n";
  }
  return rep.all_pass ? 0 : 4;
}

int cmd_oracle(long n, const std::string& alpha, long m, int order, long prec, int digits,
               const std::string& format, std::ostream& out) {
  EMConfig cfg;
  cfg.m = m;
  cfg.R = order;
  cfg.ctx.working_bits = prec;
  EMCertified cert = em_gamma_certified(n, alpha, cfg, digits);

  OutputRecord rec;
  rec.command = "oracle";
  rec.n = n;
  rec.alpha = alpha;
  rec.mode = "euler-maclaurin";
  rec.s_max = order;
  rec.k_max = m;
  rec.precision_bits = prec;
  fill_value(rec, cert.value);
  rec.achieved_digits = cert.achieved_digits;
  rec.warnings.push_back("certification delta " + cert.delta.str(3));
  emit(rec, format, out);
  return 0;
}

int cmd_bounds(long n, long prec, int digits, const std::string& format, std::ostream& out) {
  PrecisionContext ctx;
  ctx.working_bits = prec;
  BoundsReport rep = bounds(n, ctx, digits);
  if (format == "json") {
    ordered_json j;
    j["command"] = "bounds";
    j["n"] = n;
    auto one = [](const LogScaled& v) {
      return ordered_json{{"sign", v.sign},
                          {"digits", v.digits},
                          {"exponent10", v.exponent10},
                          {"text", value_text(v.sign, v.digits, v.exponent10)}};
    };
    j["berndt"] = one(rep.berndt);
    j["zhang_williams"] = one(rep.zhang_williams);
    j["matsuoka"] = rep.matsuoka.sign != 0 ? one(rep.matsuoka) : ordered_json(nullptr);
    j["lambda_n"] = rep.lambda_n.str(17);
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << n << "\n"
        << "berndt: " << value_text(rep.berndt.sign, rep.berndt.digits, rep.berndt.exponent10)
        << "\n"
        << "zhang_williams: "
        << value_text(rep.zhang_williams.sign, rep.zhang_williams.digits,
                      rep.zhang_williams.exponent10)
        << "\n"
        << "matsuoka: "
        << (rep.matsuoka.sign != 0
                ? value_text(rep.matsuoka.sign, rep.matsuoka.digits, rep.matsuoka.exponent10)
                : std::string("n/a (n < 10)"))
        << "\n"
        << "lambda_n: " << rep.lambda_n.str(17) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision asymptotic evaluation of the Stieltjes constants"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate gamma_n (or gamma_n(alpha))");
  long n = 0;
  int terms = 6;
  long kmax = 1;
  std::string mode = "t1", alpha = "1", format = "text";
  long prec = 256;
  int digits = 12;
  eval->add_option("--n", n, "index of the constant")->required();
  eval->add_option("--terms", terms, "truncation index s_max")->check(CLI::Range(0, 16));
  auto* kopt = eval->add_option("--kmax", kmax, "number of saddle contributions")
                   ->check(CLI::PositiveNumber);
  auto* aopt = eval->add_option("--alpha", alpha, "generalized constants offset (0, 1]");
  eval->add_option("--mode", mode, "leading|t1|t2")
      ->check(CLI::IsMember({"leading", "t1", "t2"}));
  eval->add_option("--prec", prec, "starting working precision in bits")
      ->check(CLI::Range(64L, 16384L));
  eval->add_option("--digits", digits, "certified output digits")->check(CLI::Range(1, 1000));
  eval->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "recompute a published reference table");
  int table = 0;
  std::string fixtures = ReferenceStore::default_path();
  long rprec = 256;
  std::string rformat = "text";
  repro_cmd->add_option("--table", table, "table number (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  repro_cmd->add_option("--fixtures", fixtures, "reference fixture file");
  repro_cmd->add_option("--prec", rprec, "working precision in bits")
      ->check(CLI::Range(64L, 16384L));
  repro_cmd->add_option("--format", rformat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Euler-Maclaurin brute-force evaluation");
  long on = 0, om = 20000, oprec = 320;
  int oorder = 14, odigits = 25;
  std::string oalpha = "1", oformat = "text";
  oracle_cmd->add_option("--n", on, "index (0-30)")->required()->check(CLI::Range(0L, 30L));
  oracle_cmd->add_option("--alpha", oalpha, "offset alpha > 0");
  oracle_cmd->add_option("--m", om, "summation cutoff")->check(CLI::Range(10L, 100000000L));
  oracle_cmd->add_option("--order", oorder, "Bernoulli correction terms")
      ->check(CLI::Range(1, 30));
  oracle_cmd->add_option("--prec", oprec, "working precision in bits")
      ->check(CLI::Range(64L, 16384L));
  oracle_cmd->add_option("--digits", odigits, "digits to certify")->check(CLI::Range(1, 200));
  oracle_cmd->add_option("--format", oformat, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "classical upper bounds for |gamma_n|");
  long bn = 0, bprec = 256;
  int bdigits = 12;
  std::string bformat = "text";
  bounds_cmd->add_option("--n", bn, "index")->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--prec", bprec, "working precision in bits")
      ->check(CLI::Range(64L, 16384L));
  bounds_cmd->add_option("--digits", bdigits, "output digits")->check(CLI::Range(1, 100));
  bounds_cmd->add_option("--format", bformat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (eval->parsed())
      return cmd_eval(n, terms, kmax, kopt->count() > 0, mode, alpha, aopt->count() > 0,
                      prec, digits, format, out);
    if (repro_cmd->parsed()) return cmd_repro(table, fixtures, rprec, rformat, out);
    if (oracle_cmd->parsed())
      return cmd_oracle(on, oalpha, om, oorder, oprec, odigits, oformat, out);
    if (bounds_cmd->parsed()) return cmd_bounds(bn, bprec, bdigits, bformat, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 1;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace stieltjes::cli
