// The verification suites: every closed form, pinned group, reference table,
// structural identity, and conjectured formula the library knows, checked
// against the chain-level computation.  The command line exposes these as
// `verify`, and the acceptance test binary runs them one suite at a time.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chromahom/state_complex.hpp"

namespace chromahom {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // comparison count, or a description of the failures
  double seconds = 0.0;
};

struct SuiteResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  bool pass = true;
  double seconds = 0.0;

  int checks_passed() const;
};

struct VerifyOptions {
  // Ordinary per-slice work cap; table recomputations use this.
  long long max_cells = kDefaultMaxCells;
  // Cap for the checks documented to need more room: full-range width
  // scans and the table rows whose estimates exceed the default cap.
  long long wide_max_cells = 400'000'000;
  unsigned long long seed = 20240911ULL;
  // Directory holding fixtures/ and meshes/.
  std::string data_dir = "data";
  // Progress sink; called with one line per finished check when set.
  std::function<void(const std::string&)> log;
};

int suite_count();
std::string suite_title(int id);  // id in 1..suite_count()

SuiteResult run_suite(int id, const VerifyOptions& opt);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt);

}  // namespace chromahom
