// Reference tables of published cohomology groups, torsion-width scans, and
// the bundled conjecture checks.  Reference values live in a JSON fixture
// (data/fixtures/reference_tables.json); computation happens through the
// chain-level engine so every comparison is an independent check.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromahom/abelian.hpp"
#include "chromahom/graph.hpp"
#include "chromahom/state_complex.hpp"

namespace chromahom {

// One pinned value: H^{1,j} of `graph` over the table's algebra, or just the
// torsion part when torsion_only is set.  group is absent for cells that
// carry no reference value (they are computed for display only).
struct TableCell {
  int j = 0;
  bool torsion_only = false;
  std::optional<AbelianGroup> group;
  std::string graph;  // family descriptor; empty = use the row's graph
  bool conjectured = false;
  std::string note;
};

struct TableRow {
  std::string label;
  std::string graph;
  std::vector<TableCell> cells;
};

struct ReferenceTable {
  std::string id;
  std::string title;
  int m = 3;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

// All tables from the fixture file, or one by id (throws if absent).
std::vector<ReferenceTable> load_reference_tables(const std::string& path);
ReferenceTable load_reference_table(const std::string& path,
                                    const std::string& id);

// Computed counterpart of one cell.
struct TableCellResult {
  const TableCell* cell = nullptr;
  bool computed = false;  // false = skipped by the size guard
  long long guard_estimate = 0;
  AbelianGroup actual;        // full group (valid when computed)
  std::optional<bool> match;  // empty when skipped or no reference value
};

struct TableResult {
  ReferenceTable table;
  std::vector<std::vector<TableCellResult>> rows;  // parallel to table.rows
  int mismatches = 0;  // computed cells whose value differs from the fixture
  int skipped = 0;     // cells the size guard refused
};

TableResult compute_table(const ReferenceTable& table,
                          long long max_cells = kDefaultMaxCells);

// Scan of tor H^{1,j} over every feasible grading.  width = -1 when all
// torsion vanishes, else jmax - jmin over gradings with nonzero torsion.
struct WidthScan {
  int width = -1;
  int jmin = -1;
  int jmax = -1;
  bool complete = true;          // false when any grading was guard-skipped
  std::vector<int> skipped;      // guard-skipped gradings
  std::map<int, AbelianGroup> groups;  // computed H^{1,j} per grading
};

WidthScan torsion_width(const SimpleGraph& g, int m,
                        long long max_cells = kDefaultMaxCells);

// One checked instance of a conjecture, e.g. a single k or m value.
struct ConjectureInstance {
  std::string subject;   // what was checked, e.g. "Gts:2 width"
  bool computed = false; // false = size guard stopped the computation
  bool holds = false;    // valid only when computed
  std::string expected;
  std::string actual;
};

struct ConjectureReport {
  std::string id;
  std::string statement;
  std::vector<ConjectureInstance> instances;
  int failures = 0;  // computed instances that do not hold
  int skipped = 0;
};

// Known conjecture ids ("8.1" .. "8.12") with the parameter range each scan
// covers by default; `limit` raises or lowers the range's upper end when
// positive.  Throws std::invalid_argument for unknown ids.
ConjectureReport check_conjecture(const std::string& id, int limit = 0,
                                  long long max_cells = kDefaultMaxCells);
std::vector<std::string> conjecture_ids();

}  // namespace chromahom
