#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qtr/harness/oracle_batch.hpp"
#include "qtr/parallel.hpp"

using namespace qtr;

TEST_SUITE("parallel") {
  TEST_CASE("results come back in index order") {
    const auto out = par::map(1000, [](std::size_t i) { return static_cast<double>(i * i); });
    REQUIRE(out.size() == 1000);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<double>(i * i));
  }

  TEST_CASE("map and map_serial agree") {
    auto f = [](std::size_t i) { return std::to_string(i) + ":" + std::to_string(i % 7); };
    CHECK(par::map(257, f) == par::map_serial(257, f));
    CHECK(par::map(0, f).empty());
  }

  TEST_CASE("the lowest failing index is rethrown") {
    auto f = [](std::size_t i) -> int {
      if (i == 500 || i == 37 || i == 900) throw std::runtime_error(std::to_string(i));
      return static_cast<int>(i);
    };
    for (int rep = 0; rep < 5; ++rep) {
      try {
        par::map(1000, f);
        FAIL("no exception");
      } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "37");
      }
    }
  }

  TEST_CASE("oracle batch is bitwise identical in parallel and serial") {
    const auto draws = harness::draw_oracle_parameters(harness::kDefaultSeed, 200);
    const auto a = harness::run_oracle_batch(draws);
    const auto b = harness::run_oracle_batch_serial(draws);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].rho10_rel_err == b[i].rho10_rel_err);
      CHECK(a[i].population_rel_err == b[i].population_rel_err);
      CHECK(a[i].first_law_rel_err == b[i].first_law_rel_err);
      CHECK(a[i].trace_defect == b[i].trace_defect);
    }
  }
}
