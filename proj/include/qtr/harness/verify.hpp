// verify.hpp: Verification suites: each check compares a measured quantity with
// its expected value under an explicit tolerance.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtr/harness/output.hpp"

namespace qtr::harness {

struct Check {
  std::string id;
  std::string description;
  double measured{0.0};
  double expected{0.0};
  double tolerance{0.0};
  bool pass{false};
  int criterion{0};  // acceptance criterion this check belongs to, 0 if none
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed{20211129};
  std::optional<double> tol;  // replaces the suite's headline tolerance
  std::size_t draws{1000};    // oracle suite only
};

// oracle low_t bounds_strong bounds_weak series cp_ratios chi_compare
const std::vector<std::string>& suite_names();

/// Throws ValidationError("suite") for an unknown name.
VerificationReport run_suite(std::string_view name, const VerifyOptions& options = {});

// Precedence: explicit flag, then QTR_SEED, then the default seed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

Table report_table(const std::vector<VerificationReport>& reports);

}  // namespace qtr::harness
