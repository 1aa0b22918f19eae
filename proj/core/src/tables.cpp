#include "chromahom/tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "chromahom/families.hpp"

namespace chromahom {

namespace {

TableCell cell_from_json(const nlohmann::json& j) {
  TableCell cell;
  cell.j = j.at("j").get<int>();
  cell.torsion_only = j.value("torsion_only", false);
  if (j.contains("group") && !j.at("group").is_null())
    cell.group = group_from_json(j.at("group"));
  cell.graph = j.value("graph", std::string{});
  cell.conjectured = j.value("conjectured", false);
  cell.note = j.value("note", std::string{});
  return cell;
}

ReferenceTable table_from_json(const nlohmann::json& j) {
  ReferenceTable table;
  table.id = j.at("id").get<std::string>();
  table.title = j.at("title").get<std::string>();
  table.m = j.at("m").get<int>();
  table.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jr : j.at("rows")) {
    TableRow row;
    row.label = jr.at("label").get<std::string>();
    row.graph = jr.at("graph").get<std::string>();
    for (const auto& jc : jr.at("cells")) row.cells.push_back(cell_from_json(jc));
    if (row.cells.size() != table.columns.size())
      throw std::runtime_error("reference table '" + table.id + "' row '" +
                               row.label + "': cell count does not match columns");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

std::vector<ReferenceTable> load_reference_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference tables: " + path);
  nlohmann::json doc;
  in >> doc;
  std::vector<ReferenceTable> tables;
  for (const auto& jt : doc.at("tables")) tables.push_back(table_from_json(jt));
  return tables;
}

ReferenceTable load_reference_table(const std::string& path,
                                    const std::string& id) {
  for (auto& table : load_reference_tables(path))
    if (table.id == id) return table;
  throw std::invalid_argument("no reference table with id '" + id + "'");
}

TableResult compute_table(const ReferenceTable& table, long long max_cells) {
  TableResult result;
  result.table = table;
  for (const auto& row : result.table.rows) {
    SimpleGraph row_graph = family(row.graph);
    std::vector<TableCellResult> out_row;
    for (const auto& cell : row.cells) {
      TableCellResult r;
      r.cell = &cell;
      const SimpleGraph g =
          cell.graph.empty() ? row_graph : family(cell.graph);
      SliceOutcome outcome = slice_cohomology(g, table.m, 1, cell.j,
                                              Variant::chromatic,
                                              Convention::cohomology, max_cells);
      r.computed = outcome.computed;
      r.guard_estimate = outcome.guard_estimate;
      if (!outcome.computed) {
        ++result.skipped;
      } else {
        r.actual = outcome.group;
        if (cell.group) {
          r.match = cell.torsion_only
                        ? r.actual.invariant_factors == cell.group->invariant_factors
                        : r.actual == *cell.group;
          if (!*r.match) ++result.mismatches;
        }
      }
      out_row.push_back(std::move(r));
    }
    result.rows.push_back(std::move(out_row));
  }
  return result;
}

WidthScan torsion_width(const SimpleGraph& g, int m, long long max_cells) {
  WidthScan scan;
  auto range = grading_range(g, m, 1, Variant::chromatic);
  if (!range) return scan;
  for (int j = range->first; j <= range->second; ++j) {
    SliceOutcome outcome = slice_cohomology(g, m, 1, j, Variant::chromatic,
                                            Convention::cohomology, max_cells);
    if (!outcome.computed) {
      scan.complete = false;
      scan.skipped.push_back(j);
      continue;
    }
    scan.groups.emplace(j, outcome.group);
    if (!outcome.group.torsion_free()) {
      if (scan.jmin < 0) scan.jmin = j;
      scan.jmax = j;
    }
  }
  if (scan.jmin >= 0) scan.width = scan.jmax - scan.jmin;
  return scan;
}

namespace {

AbelianGroup power_sum(int rank, long long factor, int count,
                       std::vector<long long> extra = {}) {
  std::vector<long long> factors(static_cast<std::size_t>(count), factor);
  factors.insert(factors.end(), extra.begin(), extra.end());
  return AbelianGroup::from_factors(rank, std::move(factors));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// One full H^{1,j} comparison.
void add_group_check(ConjectureReport& rep, const SimpleGraph& g, int m, int j,
                     const AbelianGroup& expected, const std::string& subject,
                     long long max_cells, bool torsion_only = false) {
  ConjectureInstance inst;
  inst.subject = subject;
  inst.expected = torsion_only ? expected.torsion().str() : expected.str();
  SliceOutcome outcome = slice_cohomology(g, m, 1, j, Variant::chromatic,
                                          Convention::cohomology, max_cells);
  if (!outcome.computed) {
    inst.actual = "skipped (estimated work " +
                  std::to_string(outcome.guard_estimate) + " cells > cap)";
    ++rep.skipped;
  } else {
    inst.computed = true;
    AbelianGroup actual =
        torsion_only ? outcome.group.torsion() : outcome.group;
    AbelianGroup want = torsion_only ? expected.torsion() : expected;
    inst.actual = actual.str();
    inst.holds = actual == want;
    if (!inst.holds) ++rep.failures;
  }
  rep.instances.push_back(std::move(inst));
}

void add_width_check(ConjectureReport& rep, const SimpleGraph& g, int m,
                     int expected_width, const std::string& subject,
                     long long max_cells) {
  ConjectureInstance inst;
  inst.subject = subject;
  inst.expected = std::to_string(expected_width);
  WidthScan scan = torsion_width(g, m, max_cells);
  if (!scan.complete) {
    std::ostringstream os;
    os << "incomplete scan (guard-skipped gradings:";
    for (int j : scan.skipped) os << ' ' << j;
    os << ")";
    inst.actual = os.str();
    ++rep.skipped;
  } else {
    inst.computed = true;
    inst.actual = std::to_string(scan.width);
    inst.holds = scan.width == expected_width;
    if (!inst.holds) ++rep.failures;
  }
  rep.instances.push_back(std::move(inst));
}

int range_top(int limit, int fallback) { return limit > 0 ? limit : fallback; }

}  // namespace

std::vector<std::string> conjecture_ids() {
  return {"8.1", "8.2", "8.3", "8.4", "8.5", "8.6",
          "8.7", "8.8", "8.9", "8.10", "8.11", "8.12"};
}

ConjectureReport check_conjecture(const std::string& id, int limit,
                                  long long max_cells) {
  ConjectureReport rep;
  rep.id = id;
  if (id == "8.1") {
    rep.statement =
        "over Z[x]/(x^3), the torsion width of the triangle-on-a-k-gon graph "
        "Pt:k is k-3";
    for (int k = 3; k <= range_top(limit, 7); ++k)
      add_width_check(rep, pt_graph(k), 3, k - 3,
                      "Pt:" + std::to_string(k) + " width", max_cells);
  } else if (id == "8.2") {
    rep.statement =
        "over Z[x]/(x^3), tor H^{1,4k+2} of the triangle-with-k-squares graph "
        "Gts:k is (Z_3)^(2k)";
    for (int k = 1; k <= range_top(limit, 3); ++k)
      add_group_check(rep, gts_graph(k), 3, 4 * k + 2, power_sum(0, 3, 2 * k),
                      "Gts:" + std::to_string(k) + " at j=" +
                          std::to_string(4 * k + 2),
                      max_cells, /*torsion_only=*/true);
  } else if (id == "8.3") {
    rep.statement =
        "over Z[x]/(x^3), tor H^{1,3k+3} of the triangle-with-k-squares graph "
        "Gts:k is (Z_3)^(2^k)";
    for (int k = 1; k <= range_top(limit, 3); ++k)
      add_group_check(rep, gts_graph(k), 3, 3 * k + 3, power_sum(0, 3, 1 << k),
                      "Gts:" + std::to_string(k) + " at j=" +
                          std::to_string(3 * k + 3),
                      max_cells, /*torsion_only=*/true);
  } else if (id == "8.4") {
    rep.statement =
        "over Z[x]/(x^3), the torsion width of the triangle-with-k-squares "
        "graph Gts:k is k";
    for (int k = 1; k <= range_top(limit, 3); ++k)
      add_width_check(rep, gts_graph(k), 3, k,
                      "Gts:" + std::to_string(k) + " width", max_cells);
  } else if (id == "8.5") {
    rep.statement =
        "over Z[x]/(x^3), the torsion width of the wheel W:n is floor((n-3)/2)";
    for (int n = 4; n <= range_top(limit, 8); ++n)
      add_width_check(rep, wheel_graph(n), 3, (n - 3) / 2,
                      "W:" + std::to_string(n) + " width", max_cells);
  } else if (id == "8.6") {
    rep.statement =
        "over Z[x]/(x^3), the torsion width of the complete graph K:n is 0";
    for (int n = 3; n <= range_top(limit, 6); ++n)
      add_width_check(rep, complete_graph_k(n), 3, 0,
                      "K:" + std::to_string(n) + " width", max_cells);
  } else if (id == "8.7") {
    rep.statement =
        "over Z[x]/(x^5), the cone over an n-gon (W:(n+1), n > 4) has "
        "H^{1,4n-3} = (Z_5)^n + Z^n; removing one rim edge gives "
        "(Z_5)^(n-1) + Z^(n-2) and removing one spoke gives "
        "(Z_5)^(n-2) + Z^(n-2)";
    for (int n = 5; n <= range_top(limit, 6); ++n) {
      const int j = 4 * n - 3;
      const std::string at = " at j=" + std::to_string(j);
      add_group_check(rep, wheel_out(n + 1), 5, j, power_sum(n - 2, 5, n - 1),
                      "Wout:" + std::to_string(n + 1) + at, max_cells);
      add_group_check(rep, wheel_graph(n + 1), 5, j, power_sum(n, 5, n),
                      "W:" + std::to_string(n + 1) + at, max_cells);
      add_group_check(rep, wheel_in(n + 1), 5, j, power_sum(n - 2, 5, n - 2),
                      "Win:" + std::to_string(n + 1) + at, max_cells);
    }
  } else if (id == "8.8") {
    rep.statement =
        "over Z[x]/(x^5), H^{1,4n-7}(K:n) = (Z_5)^C(n,3) + (Z_2)^C(n,4) + "
        "Z^(2 C(n,4))";
    for (int n = 4; n <= range_top(limit, 5); ++n) {
      const int j = 4 * n - 7;
      std::vector<long long> factors(static_cast<std::size_t>(binomial(n, 3)), 5);
      factors.insert(factors.end(), static_cast<std::size_t>(binomial(n, 4)), 2);
      AbelianGroup expected = AbelianGroup::from_factors(
          static_cast<int>(2 * binomial(n, 4)), std::move(factors));
      add_group_check(rep, complete_graph_k(n), 5, j, expected,
                      "K:" + std::to_string(n) + " at j=" + std::to_string(j),
                      max_cells);
    }
  } else if (id == "8.9") {
    rep.statement =
        "over Z[x]/(x^m), H^{1,2m-1} of two triangles sharing an edge is "
        "(Z_m)^2 + Z for m >= 3, and Z_2 + Z at m = 2";
    const SimpleGraph g = edge_product(polygon(3), 0, polygon(3), 0);
    for (int m = 2; m <= range_top(limit, 8); ++m) {
      AbelianGroup expected =
          m == 2 ? power_sum(1, 2, 1) : power_sum(1, m, 2);
      add_group_check(rep, g, m, 2 * m - 1, expected,
                      "P3|P3 at m=" + std::to_string(m) +
                          ", j=" + std::to_string(2 * m - 1),
                      max_cells);
    }
  } else if (id == "8.10") {
    rep.statement =
        "over Z[x]/(x^m), H^{1,3m-2} of a triangle and a square sharing an "
        "edge is Z_m + Z for m >= 2";
    const SimpleGraph g = edge_product(polygon(3), 0, polygon(4), 0);
    for (int m = 2; m <= range_top(limit, 8); ++m)
      add_group_check(rep, g, m, 3 * m - 2, power_sum(1, m, 1),
                      "P3|P4 at m=" + std::to_string(m) +
                          ", j=" + std::to_string(3 * m - 2),
                      max_cells);
  } else if (id == "8.11") {
    rep.statement =
        "over Z[x]/(x^m), H^{1,2m-1}(K:4) = (Z_m)^4 + Z_2 + Z^2 for m >= 4";
    for (int m = 4; m <= range_top(limit, 6); ++m)
      add_group_check(rep, complete_graph_k(4), m, 2 * m - 1,
                      power_sum(2, m, 4, {2}),
                      "K:4 at m=" + std::to_string(m) +
                          ", j=" + std::to_string(2 * m - 1),
                      max_cells);
  } else if (id == "8.12") {
    rep.statement =
        "over Z[x]/(x^m), H^{1,3m-2}(K:5) is Z_2 + Z^5 (m=2); "
        "Z_2 + (Z_3)^4 + Z^10 (m=3); (Z_2)^5 + (Z_m)^10 + Z^10 (m=4 or odd "
        "m>4); (Z_2)^10 + (Z_m)^10 + Z^10 (even m>5)";
    for (int m = 2; m <= range_top(limit, 4); ++m) {
      AbelianGroup expected;
      if (m == 2)
        expected = power_sum(5, 2, 1);
      else if (m == 3)
        expected = power_sum(10, 3, 4, {2});
      else if (m == 4 || m % 2 == 1)
        expected = power_sum(10, m, 10, std::vector<long long>(5, 2));
      else
        expected = power_sum(10, m, 10, std::vector<long long>(10, 2));
      add_group_check(rep, complete_graph_k(5), m, 3 * m - 2, expected,
                      "K:5 at m=" + std::to_string(m) +
                          ", j=" + std::to_string(3 * m - 2),
                      max_cells);
    }
  } else {
    throw std::invalid_argument("unknown conjecture id '" + id + "'");
  }
  return rep;
}

}  // namespace chromahom
