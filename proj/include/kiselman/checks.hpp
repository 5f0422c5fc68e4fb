// kiselman/checks.hpp -- named self-verification suites backing the CLI's
// `check` subcommand.  Each check runs at the requested rank when feasible
// and reports itself as skipped (passing) outside its supported range.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kiselman/words.hpp"

namespace kiselman {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Suites: "rewrite", "structure", "repr", "algebra", or "all".  Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_checks(const std::string& suite, Rank n,
                                    std::uint64_t seed, long element_cap);

}  // namespace kiselman
