#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stieltjes::cli {

/// One evaluation's machine-readable output: request echo, the value, and
/// diagnostics. The three serializations carry identical digit strings.
struct OutputRecord {
  std::string command;
  long n = 0;
  std::string alpha = "1";
  std::string mode;
  int s_max = 0;
  long k_max = 0;
  long precision_bits = 0;

  int sign = 0;
  std::string digits;
  long exponent10 = 0;

  struct PerK {
    long k = 0;
    int sign = 0;
    std::string digits;
    long exponent10 = 0;
  };
  std::string cos_factor;
  std::vector<PerK> per_k;
  bool truncation_flag = false;
  int achieved_digits = 0;
  bool sign_suspect = false;
  std::vector<std::string> warnings;

  std::string value_string() const;
  std::string to_text() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// Entry point used by the binary and by tests; writes to the given streams
/// and returns the process exit code (0 ok, 1 usage, 2 precision/
/// certification, 3 solver, 4 reproduction failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace stieltjes::cli
