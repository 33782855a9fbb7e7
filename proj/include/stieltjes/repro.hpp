#pragma once

#include <string>
#include <vector>

#include "stieltjes/expansion.hpp"
#include "stieltjes/oracle.hpp"

namespace stieltjes::repro {

struct Entry {
  std::string label;
  std::string computed;
  std::string expected;
  double deviation = 0.0;  // table 1: units of 1e-10; tables 2-3: ratio; table 4: rel diff
  bool pass = false;
};

struct Report {
  int table = 0;
  std::vector<Entry> entries;
  bool all_pass = false;
};

/// Recompute every entry of the requested published table (1-4) and compare
/// at its tolerance: 10 decimal places for coefficients, a factor of two for
/// relative errors, printed digits for values.
Report run_table(int which, const ReferenceStore& store, const PrecisionContext& ctx);

}  // namespace stieltjes::repro
