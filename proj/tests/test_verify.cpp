// The verification suites themselves: shape of the catalogue, a few cheap
// suites run end to end, and the policy that a tripped size guard reports as
// a failure instead of silently passing.
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "chromahom/verify.hpp"

using namespace chromahom;

namespace {

VerifyOptions base_options() {
  VerifyOptions opt;
  opt.data_dir = CHROMAHOM_DATA_DIR;
  return opt;
}

}  // namespace

TEST_CASE("the suite catalogue is well formed") {
  CHECK(suite_count() == 9);
  for (int id = 1; id <= suite_count(); ++id)
    CHECK(!suite_title(id).empty());
  CHECK_THROWS_AS(suite_title(0), std::out_of_range);
  CHECK_THROWS_AS(suite_title(10), std::out_of_range);
}

TEST_CASE("cheap suites run green end to end") {
  const VerifyOptions opt = base_options();
  for (int id : {2, 4, 6, 7, 9}) {
    const SuiteResult r = run_suite(id, opt);
    CAPTURE(id);
    CHECK(r.id == id);
    CHECK(r.title == suite_title(id));
    CHECK(r.pass);
    CHECK(r.checks_passed() == static_cast<int>(r.checks.size()));
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(!c.detail.empty());
      CHECK(c.seconds >= 0.0);
    }
  }
}

TEST_CASE("a starved size guard fails checks instead of skipping them") {
  VerifyOptions opt = base_options();
  opt.max_cells = 1;
  opt.wide_max_cells = 1;
  const SuiteResult r = run_suite(4, opt);
  CHECK(!r.pass);
  bool guard_mentioned = false;
  for (const auto& c : r.checks)
    if (!c.pass && c.detail.find("guard") != std::string::npos)
      guard_mentioned = true;
  CHECK(guard_mentioned);
}

TEST_CASE("the log callback sees one line per check") {
  VerifyOptions opt = base_options();
  int lines = 0;
  opt.log = [&](const std::string& line) {
    ++lines;
    CHECK(!line.empty());
  };
  const SuiteResult r = run_suite(7, opt);
  CHECK(r.pass);
  CHECK(lines == static_cast<int>(r.checks.size()));
}
