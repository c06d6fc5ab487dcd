#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qtr/analytic.hpp"
#include "qtr/errors.hpp"
#include "qtr/harness/commands.hpp"
#include "qtr/harness/config.hpp"
#include "qtr/harness/oracle_batch.hpp"
#include "qtr/harness/output.hpp"
#include "qtr/harness/verify.hpp"

using namespace qtr;
using namespace qtr::harness;

namespace {

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<no error>";
}

std::string text(const Table& t, std::size_t row, const std::string& col) {
  return std::get<std::string>(t.rows[row][t.column_index(col)]);
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("key=value parsing") {
    std::istringstream in("# comment\n\ntc = 0.5\n  wh=3 # trailing\ntc=0.25\n");
    const auto kv = parse_key_value(in);
    CHECK(kv.size() == 2);
    CHECK(kv.at("tc") == "0.25");
    CHECK(kv.at("wh") == "3");
    std::istringstream bad("tc 0.5\n");
    CHECK(field_of([&] { parse_key_value(bad); }) == "config");
    std::istringstream empty_key(" = 1\n");
    CHECK(field_of([&] { parse_key_value(empty_key); }) == "config");
    CHECK(field_of([] { load_key_value_file("/nonexistent/qtr.cfg"); }) == "config");
  }

  TEST_CASE("number parsing") {
    CHECK(parse_number("x", "1e-3") == 1e-3);
    CHECK(field_of([] { parse_number("wc", "abc"); }) == "wc");
    CHECK(field_of([] { parse_number("wc", "inf"); }) == "wc");
    CHECK(field_of([] { parse_number("wc", "1.0x"); }) == "wc");
  }

  TEST_CASE("parameter set and derived handles") {
    ParameterSet p;
    p.set("gc", 2.0);
    p.set("gamma", 3.0);
    CHECK(p.gh == 6.0);
    p.set("th", 4.0);
    p.set("tau", 0.25);
    CHECK(p.tc == 1.0);
    p.set("zeta_c", 1.0);
    CHECK(p.tc == doctest::Approx(2.0));
    CHECK(p.get("zeta_c") == doctest::Approx(1.0));
    CHECK(field_of([&] { p.set("omega", 1.0); }) == "omega");
    p.wh = 0.5;
    CHECK(field_of([&] { (void)p.drive(); }) == "wh");
  }

  TEST_CASE("sweep configuration validation") {
    SweepConfig cfg;
    cfg.swept = {"gamma", 1e-3, 1e3, 5, true};
    CHECK_NOTHROW(cfg.validate());
    SweepConfig c1 = cfg;
    c1.swept.name = "nope";
    CHECK(field_of([&] { c1.validate(); }) == "param");
    SweepConfig c2 = cfg;
    c2.fixed["gamma"] = 1.0;
    CHECK(field_of([&] { c2.validate(); }) == "param");
    SweepConfig c3 = cfg;
    c3.swept.points = 1;
    CHECK(field_of([&] { c3.validate(); }) == "points");
    SweepConfig c4 = cfg;
    c4.swept.lo = 0.0;
    CHECK(field_of([&] { c4.validate(); }) == "lo");
    SweepConfig c5 = cfg;
    c5.optimize = "lambda";
    CHECK(field_of([&] { c5.validate(); }) == "optimize");
    SweepConfig c6 = cfg;
    c6.objective = Objective::Bounds;
    CHECK(field_of([&] { c6.validate(); }) == "objective");
    CHECK(field_of([] { parse_objective("power"); }) == "objective");
    CHECK(field_of([] { parse_format("xml"); }) == "format");
  }

  TEST_CASE("CSV quoting and line endings") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    Table t;
    t.columns = {"x", "label"};
    t.add_row({0.1, std::string("a,b")});
    std::ostringstream out;
    write_csv(out, t);
    CHECK(out.str() == "x,label\r\n0.10000000000000001,\"a,b\"\r\n");
  }

  TEST_CASE("JSON lines parse back") {
    Table t;
    t.columns = {"x", "label"};
    t.add_row({1.0 / 3.0, std::string("q\"uote")});
    t.add_row({-2.5e-300, std::string("")});
    std::ostringstream out;
    write_json(out, t);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    const auto first = nlohmann::json::parse(line);
    CHECK(first["x"].get<double>() == 1.0 / 3.0);
    CHECK(first["label"].get<std::string>() == "q\"uote");
    std::getline(in, line);
    CHECK(nlohmann::json::parse(line)["x"].get<double>() == -2.5e-300);
  }

  TEST_CASE("numbers round-trip") {
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -1e-310, 123456789.123456789}) {
      CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
    }
  }

  TEST_CASE("table access errors") {
    Table t;
    t.columns = {"x"};
    CHECK_THROWS(t.add_row({1.0, 2.0}));
    t.add_row({1.0});
    CHECK_THROWS(t.column_index("y"));
  }

  TEST_CASE("steady-state table") {
    ParameterSet p;
    const Table t = steady_state_table(p, 1.0, 0.5);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.number(0, "pg") == doctest::Approx(56.0 / 103.0).epsilon(1e-14));
    CHECK(t.number(0, "rho10_im") == doctest::Approx(-2.0 / 103.0).epsilon(1e-14));
    CHECK(t.number(0, "rho10_re") == 0.0);
    CHECK(t.number(0, "cop") == doctest::Approx(1.0));
    const Table thermal = steady_state_table(p);
    CHECK(thermal.number(0, "nc") == doctest::Approx(1.0 / std::expm1(1.0)).epsilon(1e-14));
  }

  TEST_CASE("figure tables") {
    const Table f3 = figure_table(3, {1.0, 2.0, 2, false});
    CHECK(f3.number(0, "R_inf") == doctest::Approx(0.183503).epsilon(1e-5));
    CHECK(f3.number(0, "R_zero") == doctest::Approx(0.555556).epsilon(1e-5));
    const Table f2 = figure_table(2, {0.01, 20.0, 50, true});
    CHECK(f2.rows.size() == 50);
    CHECK(f2.columns.front() == "zeta_C");
    CHECK(field_of([] { figure_table(5); }) == "id");
    CHECK(field_of([] { figure_table(2, {2.0, 1.0, 10, false}); }) == "grid");
    CHECK(field_of([] { figure_table(2, {1.0, 2.0, 1, false}); }) == "points");
  }

  TEST_CASE("interior maximum") {
    Table t;
    t.columns = {"x", "y"};
    for (double x : {0.0, 1.0, 2.0, 3.0, 4.0}) t.add_row({x, -(x - 2.0) * (x - 2.0)});
    const auto m = interior_maximum(t, "x", "y");
    CHECK(m.found);
    CHECK(m.location == 2.0);
    Table mono;
    mono.columns = {"x", "y"};
    for (double x : {0.0, 1.0, 2.0}) mono.add_row({x, x});
    CHECK_FALSE(interior_maximum(mono, "x", "y").found);
  }

  TEST_CASE("series table") {
    const Table t = table1();
    REQUIRE(t.rows.size() == 7);
    CHECK(text(t, 3, "row") == "zeta_+");
    CHECK(text(t, 3, "column_I") == "2/3·ζC + 1/9 − (4/27)/ζC");
    for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(text(t, i, "status_I") == "verified");
    CHECK(text(t, 1, "column_III") == "0");
    CHECK(text(t, 1, "column_II") == "3/4·ηC");
    CHECK(text(t, 1, "status_II").rfind("not computed", 0) == 0);
    for (std::size_t i = 2; i < 5; ++i) CHECK(text(t, i, "status_III") == "verified");
  }

  TEST_CASE("sweep: a single point matches the steady-state table") {
    SweepConfig cfg;
    cfg.swept = {"wc", 0.7, 0.7, 2, false};
    const Table s = sweep_table(cfg, ParameterSet{});
    ParameterSet p;
    p.wc = 0.7;
    const Table ss = steady_state_table(p);
    CHECK(s.number(0, "omega") == doctest::Approx(ss.number(0, "omega")).epsilon(1e-12));
    CHECK(s.number(1, "omega") == s.number(0, "omega"));
  }

  TEST_CASE("sweep: strong-coupling optimum over gamma") {
    SweepConfig cfg;
    cfg.regime = Regime::HighTStrong;
    cfg.swept = {"gamma", 1e-4, 1e4, 17, true};
    cfg.optimize = "wc";
    const Table t = sweep_table(cfg, ParameterSet{});
    const double hi = zeta_plus(1.0);
    const double lo = zeta_yc(1.0);
    double prev = hi;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const double c = t.number(i, "cop");
      CHECK(c <= prev + 1e-9);
      CHECK(c <= hi);
      CHECK(c >= lo);
      CHECK(c == doctest::Approx(cop_mof_strong(0.5, t.number(i, "gamma"))).epsilon(1e-6));
      prev = c;
    }
  }

  TEST_CASE("sweep: bounds objective") {
    SweepConfig cfg;
    cfg.objective = Objective::Bounds;
    cfg.swept = {"zeta_c", 0.5, 2.0, 4, false};
    const Table t = sweep_table(cfg, ParameterSet{});
    REQUIRE(t.rows.size() == 4);
    CHECK(t.number(1, "zeta_plus") == doctest::Approx(zeta_plus(1.0)).epsilon(1e-15));
  }

  TEST_CASE("seed precedence") {
    ::unsetenv("QTR_SEED");
    CHECK(resolve_seed(std::nullopt) == kDefaultSeed);
    ::setenv("QTR_SEED", "42", 1);
    CHECK(resolve_seed(std::nullopt) == 42);
    CHECK(resolve_seed(7) == 7);
    ::setenv("QTR_SEED", "-3", 1);
    CHECK(field_of([] { resolve_seed(std::nullopt); }) == "QTR_SEED");
    ::unsetenv("QTR_SEED");
  }

  TEST_CASE("suites") {
    CHECK(suite_names().size() == 7);
    CHECK(field_of([] { run_suite("nope"); }) == "suite");
    const auto report = run_suite("bounds_weak");
    CHECK(report.passed());
    const Table t = report_table({report});
    CHECK(t.rows.size() == report.checks.size());
  }

  TEST_CASE("oracle draws are reproducible") {
    const auto a = draw_oracle_parameters(5, 20);
    const auto b = draw_oracle_parameters(5, 20);
    const auto c = draw_oracle_parameters(6, 20);
    CHECK(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].occ.nc == b[i].occ.nc);
      CHECK(a[i].rates.lambda == b[i].rates.lambda);
      CHECK(a[i].drive.wh > a[i].drive.wc);
    }
    CHECK(a[0].occ.nc != c[0].occ.nc);
  }
}
