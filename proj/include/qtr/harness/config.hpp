// config.hpp: key=value configuration files and the parameter set shared by the
// CLI subcommands.

#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtr/core_model.hpp"
#include "qtr/regimes.hpp"

namespace qtr::harness {

// Flat `key = value` lines; `#` starts a comment; blank lines ignored. Later
// duplicates override earlier ones. Throws ValidationError("config", ...) with the
// line number on malformed input.
std::map<std::string, std::string> parse_key_value(std::istream& in);
std::map<std::string, std::string> load_key_value_file(const std::string& path);

double parse_number(std::string_view field, std::string_view text);

// Model parameters addressable by name: tc th gc gh lambda wc wh, plus the derived
// handles gamma (sets gh = gamma * gc), tau (sets tc = tau * th) and zeta_c
// (sets tc = th * zeta_c / (1 + zeta_c)).
struct ParameterSet {
  double tc{1.0};
  double th{2.0};
  double gc{1.0};
  double gh{1.0};
  double lambda{1.0};
  double wc{1.0};
  double wh{2.0};

  static bool is_known(std::string_view name);
  static const std::vector<std::string>& names();
  void set(std::string_view name, double value);
  double get(std::string_view name) const;

  // Validated specs; throws ValidationError naming the offending parameter.
  BathSpec bath() const { return BathSpec::make(tc, th, gc, gh); }
  DriveSpec drive() const { return DriveSpec::make(wc, wh, lambda); }
};

enum class Objective { Omega, Chi, CoolingPower, Bounds };
Objective parse_objective(std::string_view name);
std::string_view to_string(Objective objective);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view name);

struct SweptParameter {
  std::string name;
  double lo{0.0};
  double hi{1.0};
  std::size_t points{2};
  bool log{false};

  std::vector<double> grid() const;
};

struct SweepConfig {
  Regime regime{Regime::Full};
  std::map<std::string, double> fixed;
  SweptParameter swept;
  Objective objective{Objective::Omega};
  OutputFormat format{OutputFormat::Csv};
  std::optional<std::string> optimize;  // inner variable "wc" or "wh"

  // Throws ValidationError on any violated invariant.
  void validate() const;
};

}  // namespace qtr::harness
