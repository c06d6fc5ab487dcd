#include "qtr/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "qtr/errors.hpp"

namespace qtr::harness {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::map<std::string, std::string> parse_key_value(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config", "line " + std::to_string(number) + ": expected key=value");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key.empty()) throw ValidationError("config", "line " + std::to_string(number) + ": empty key");
    out[std::string(key)] = std::string(value);
  }
  return out;
}

std::map<std::string, std::string> load_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open '" + path + "'");
  return parse_key_value(in);
}

double parse_number(std::string_view field, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ValidationError(std::string(field), "not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

const std::vector<std::string>& ParameterSet::names() {
  static const std::vector<std::string> kNames = {"tc", "th", "gc",  "gh",    "lambda",
                                                  "wc", "wh", "gamma", "tau", "zeta_c"};
  return kNames;
}

bool ParameterSet::is_known(std::string_view name) {
  const auto& n = names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

void ParameterSet::set(std::string_view name, double value) {
  if (name == "tc") tc = value;
  else if (name == "th") th = value;
  else if (name == "gc") gc = value;
  else if (name == "gh") gh = value;
  else if (name == "lambda") lambda = value;
  else if (name == "wc") wc = value;
  else if (name == "wh") wh = value;
  else if (name == "gamma") gh = value * gc;
  else if (name == "tau") tc = value * th;
  else if (name == "zeta_c") tc = th * value / (1.0 + value);
  else throw ValidationError(std::string(name), "unknown parameter");
}

double ParameterSet::get(std::string_view name) const {
  if (name == "tc") return tc;
  if (name == "th") return th;
  if (name == "gc") return gc;
  if (name == "gh") return gh;
  if (name == "lambda") return lambda;
  if (name == "wc") return wc;
  if (name == "wh") return wh;
  if (name == "gamma") return gh / gc;
  if (name == "tau") return tc / th;
  if (name == "zeta_c") return tc / (th - tc);
  throw ValidationError(std::string(name), "unknown parameter");
}

Objective parse_objective(std::string_view name) {
  if (name == "omega") return Objective::Omega;
  if (name == "chi") return Objective::Chi;
  if (name == "cooling_power") return Objective::CoolingPower;
  if (name == "bounds") return Objective::Bounds;
  throw ValidationError("objective", "unknown objective '" + std::string(name) + "'");
}

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::Omega: return "omega";
    case Objective::Chi: return "chi";
    case Objective::CoolingPower: return "cooling_power";
    case Objective::Bounds: return "bounds";
  }
  return "unknown";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ValidationError("format", "expected csv or json, got '" + std::string(name) + "'");
}

std::vector<double> SweptParameter::grid() const {
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    if (log) {
      xs[i] = std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo)));
    } else {
      xs[i] = lo + t * (hi - lo);
    }
  }
  if (points > 1) {
    xs.front() = lo;
    xs.back() = hi;
  }
  return xs;
}

void SweepConfig::validate() const {
  if (!ParameterSet::is_known(swept.name)) {
    throw ValidationError("param", "unknown swept parameter '" + swept.name + "'");
  }
  if (fixed.count(swept.name) != 0) {
    throw ValidationError("param", "swept parameter '" + swept.name + "' is also fixed");
  }
  for (const auto& [name, value] : fixed) {
    if (!ParameterSet::is_known(name)) throw ValidationError(name, "unknown parameter");
    if (!std::isfinite(value)) throw ValidationError(name, "must be finite");
  }
  if (swept.points < 2) throw ValidationError("points", "need at least 2 grid points");
  if (!std::isfinite(swept.lo) || !std::isfinite(swept.hi) || swept.lo > swept.hi) {
    throw ValidationError("lo", "require finite lo <= hi");
  }
  if (swept.log && !(swept.lo > 0.0)) throw ValidationError("lo", "log grid needs lo > 0");
  if (optimize) {
    if (*optimize != "wc" && *optimize != "wh") {
      throw ValidationError("optimize", "inner variable must be wc or wh");
    }
    if (*optimize == swept.name) throw ValidationError("optimize", "cannot optimize the swept parameter");
    if (objective == Objective::Bounds) {
      throw ValidationError("optimize", "the bounds objective has nothing to optimize");
    }
  }
  if (objective == Objective::Bounds && swept.name != "zeta_c") {
    throw ValidationError("objective", "bounds objective requires sweeping zeta_c");
  }
}

}  // namespace qtr::harness
