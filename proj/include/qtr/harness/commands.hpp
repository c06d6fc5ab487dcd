// commands.hpp: Table-producing back ends of the CLI subcommands. Nothing here
// touches files or streams; the caller renders the tables.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qtr/harness/config.hpp"
#include "qtr/harness/output.hpp"

namespace qtr::harness {

// One row: populations, rho10, P, Qc, Qh, COP, Omega, chi. nc / nh replace the
// thermal occupations when given.
Table steady_state_table(const ParameterSet& params, std::optional<double> nc = std::nullopt,
                         std::optional<double> nh = std::nullopt);

struct FigureGrid {
  double lo{0.01};
  double hi{20.0};
  std::size_t points{400};
  bool log{false};
};

// id 2: COP bounds and chi COPs; 3: cooling-power ratios; 4: scaled cooling
// power at MOF. First column is zeta_C.
Table figure_table(int id, const FigureGrid& grid = {});

struct InteriorMaximum {
  bool found{false};
  double location{0.0};
  double value{0.0};
};

// First strict rise-then-fall of `y` along the rows, excluding the end points.
InteriorMaximum interior_maximum(const Table& table, const std::string& x, const std::string& y);

// Series comparison table: Omega-COP series (fitted and checked), efficiency
// series (quoted, not computed) and chi-COP series (fitted and checked).
Table table1();

// Evaluates the objective on the swept grid; with cfg.optimize set, each grid
// point maximizes over that frequency first. Grid points run concurrently,
// rows come back in grid order.
Table sweep_table(const SweepConfig& cfg, const ParameterSet& base);

}  // namespace qtr::harness
