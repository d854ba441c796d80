#pragma once

// Batch checks behind `frontcalc verify`. Output depends only on the seed.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace frontcalc {

struct CheckLine {
  bool passed = false;
  std::string text;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckLine> checks;

  bool ok() const;
};

struct VerifyOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

SuiteResult verify_proposition(const VerifyOptions& options);
SuiteResult verify_arnold();
SuiteResult verify_gk_table();
SuiteResult verify_roundtrip(const VerifyOptions& options);

/// "proposition", "arnold", "gk-table", "roundtrip" or "all".
/// Throws std::invalid_argument for other names.
std::vector<SuiteResult> run_verify(const std::string& suite,
                                    const VerifyOptions& options);

void print_suite(const SuiteResult& suite, std::ostream& out);

}  // namespace frontcalc
