// oracle_batch.hpp: Seeded random comparisons of the closed-form steady state
// against the full-generator null-space oracle.

#pragma once

#include <cstdint>
#include <vector>

#include "qtr/core_model.hpp"

namespace qtr::harness {

inline constexpr std::uint64_t kDefaultSeed = 20211129;

struct OracleDraw {
  Occupations occ;
  Couplings rates;
  DriveSpec drive;
};

// Rates log-uniform in [1e-3, 1e3], occupations uniform in [0, 100], wc
// log-uniform in [1e-2, 1e2] and wh = wc (1 + r) with r log-uniform in [1e-2, 1e2].
std::vector<OracleDraw> draw_oracle_parameters(std::uint64_t seed, std::size_t count);

struct OracleComparison {
  double population_rel_err{0.0};  // linear solve vs oracle, worst population
  double rho10_rel_err{0.0};       // closed form vs oracle
  double closed_vs_linear_rel_err{0.0};
  double first_law_rel_err{0.0};   // |Qh - Qc - P| / |Qh|; Qh from -Tr(L_h[rho] H0), Qc and P from the closed form
  double g_coherence{0.0};         // max |<g|rho|0>|, |<g|rho|1>| in the oracle state
  double re_rho10{0.0};            // |Re <1|rho|0>| in the oracle state
  double hermiticity_defect{0.0};
  double trace_defect{0.0};        // |Tr L[sigma]| / max(1, max|L[sigma]_ij|), sigma Hermitian unit-trace
};

OracleComparison compare_with_oracle(const OracleDraw& draw);

std::vector<OracleComparison> run_oracle_batch(const std::vector<OracleDraw>& draws);
std::vector<OracleComparison> run_oracle_batch_serial(const std::vector<OracleDraw>& draws);

struct OracleSummary {
  OracleComparison worst;  // component-wise maxima
  std::size_t draws{0};
};

OracleSummary summarize(const std::vector<OracleComparison>& results);

}  // namespace qtr::harness
