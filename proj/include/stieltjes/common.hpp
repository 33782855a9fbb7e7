#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

enum class Errc {
  invalid_input,
  insufficient_digits,
  solver_failure,
  wrong_branch,
  degenerate_saddle,
  order_mismatch,
  precision_insufficient,
  certification_failure,
  no_reference,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stieltjes
