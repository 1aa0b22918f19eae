// chromahom — exact chromatic graph cohomology over truncated polynomial
// algebras Z[x]/(x^m).
//
// Subcommands: cohomology, scan, table, verify, conjecture, stats, cell,
// families.  Graph sources are family descriptors ("K4", "Pt:6"), edge-list
// files, or quadrilateral-mesh files (*.qm).  The CHROMAHOM_MAX_CELLS
// environment variable overrides the default size guard; CHROMAHOM_DATA_DIR
// points at the bundled data directory (fixtures and meshes).
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromahom/cell.hpp"
#include "chromahom/closed_forms.hpp"
#include "chromahom/families.hpp"
#include "chromahom/graph.hpp"
#include "chromahom/state_complex.hpp"
#include "chromahom/tables.hpp"
#include "chromahom/verify.hpp"

namespace {

using namespace chromahom;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitGuard = 3;

long long env_max_cells() {
  const char* s = std::getenv("CHROMAHOM_MAX_CELLS");
  return s && *s ? std::atoll(s) : kDefaultMaxCells;
}

std::string default_data_dir() {
  const char* s = std::getenv("CHROMAHOM_DATA_DIR");
  if (s && *s) return s;
  return CHROMAHOM_DATA_DIR;
}

// A graph source: family descriptor, edge-list file, or mesh file.
SimpleGraph load_graph_source(const std::string& source) {
  if (std::filesystem::exists(source)) {
    if (source.size() > 3 && source.substr(source.size() - 3) == ".qm")
      return load_quad_mesh(source).graph;
    return load_edge_list(source);
  }
  if (source.find('/') != std::string::npos)
    throw std::invalid_argument("no such file: " + source);
  return family(source);
}

std::string render_orders(int rank, std::vector<long long> orders) {
  if (rank == 0 && orders.empty()) return "0";
  std::sort(orders.begin(), orders.end());
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += " + ";
  };
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    sep();
    out += "Z_" + std::to_string(orders[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  if (rank > 0) {
    sep();
    out += "Z";
    if (rank > 1) out += "^" + std::to_string(rank);
  }
  return out;
}

// The same group in primary form (Z_6 shown as Z_2 + Z_3).
std::string primary_str(const AbelianGroup& g) {
  std::vector<long long> orders;
  for (const auto& [p, exps] : g.primary())
    for (int e : exps) {
      long long q = 1;
      for (int t = 0; t < e; ++t) q *= p;
      orders.push_back(q);
    }
  return render_orders(g.rank, orders);
}

std::string girth_str(int girth) {
  return girth >= kGirthInf ? "inf" : std::to_string(girth);
}

void print_json(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

json graph_json(const std::string& source, const SimpleGraph& g) {
  return json{{"source", source}, {"vertices", g.v}, {"edges", g.edge_count()}};
}

// ---------------------------------------------------------------------------
// cohomology

struct CohomologyArgs {
  std::string source;
  int m = 3;
  int i = 1;
  int j = 0;
  std::string variant = "chromatic";
  std::string convention = "cohomology";
  std::string format = "text";
  long long max_cells = 0;
};

int run_cohomology(const CohomologyArgs& a) {
  const SimpleGraph g = load_graph_source(a.source);
  const Variant variant = variant_from_string(a.variant);
  const Convention convention = convention_from_string(a.convention);
  // The dichromatic differential preserves (m-1)(i + #components) - weight
  // sum rather than the weight sum itself; the command line speaks weight-sum
  // labels throughout, translated here via j -> v(m-1) - j.
  const int engine_j =
      variant == Variant::dichromatic ? g.v * (a.m - 1) - a.j : a.j;
  const SliceOutcome out =
      slice_cohomology(g, a.m, a.i, engine_j, variant, convention, a.max_cells);

  if (a.format == "json") {
    json doc{{"graph", graph_json(a.source, g)},
             {"m", a.m},
             {"i", a.i},
             {"j", a.j},
             {"variant", a.variant},
             {"convention", a.convention},
             {"computed", out.computed},
             {"guard_estimate", out.guard_estimate},
             {"max_cells", a.max_cells}};
    if (variant == Variant::dichromatic) doc["raw_grading"] = engine_j;
    if (out.computed) {
      doc["group"] = group_to_json(out.group);
      doc["chain_ranks"] = out.chain_ranks;
    }
    print_json(doc);
    return out.computed ? 0 : kExitGuard;
  }

  std::printf("graph %s: %d vertices, %d edges\n", a.source.c_str(), g.v,
              g.edge_count());
  std::printf("%s^{%d,%d} over Z[x]/(x^%d), %s variant\n",
              convention == Convention::cohomology ? "H" : "H_", a.i, a.j, a.m,
              a.variant.c_str());
  if (variant == Variant::dichromatic)
    std::printf("  raw preserved grading: %d\n", engine_j);
  if (!out.computed) {
    std::printf(
        "  skipped: estimated work %lld cell products exceeds the guard "
        "(%lld); raise --max-cells\n",
        out.guard_estimate, a.max_cells);
    return kExitGuard;
  }
  std::printf("  group:   %s\n", out.group.str().c_str());
  std::printf("  primary: %s\n", primary_str(out.group).c_str());
  std::printf("  chain ranks: %lld / %lld / %lld (degrees %d, %d, %d)\n",
              out.chain_ranks[0], out.chain_ranks[1], out.chain_ranks[2],
              a.i - 1, a.i, a.i + 1);
  return 0;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::string source;
  int m = 3;
  int i = 1;
  std::string variant = "chromatic";
  std::string format = "text";
  long long max_cells = 0;
};

int run_scan(const ScanArgs& a) {
  const SimpleGraph g = load_graph_source(a.source);
  const Variant variant = variant_from_string(a.variant);
  const auto range = grading_range(g, a.m, a.i, variant);

  struct Row {
    int j = 0;         // weight-sum label
    int grading = 0;   // grading passed to the engine
    SliceOutcome out;
  };
  std::vector<Row> rows;
  if (range) {
    for (int x = range->first; x <= range->second; ++x) {
      Row row;
      row.grading = x;
      row.j = variant == Variant::dichromatic ? g.v * (a.m - 1) - x : x;
      row.out = slice_cohomology(g, a.m, a.i, x, variant,
                                 Convention::cohomology, a.max_cells);
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& l, const Row& r) { return l.j < r.j; });
  }

  int jmin = -1, jmax = -1, skipped = 0;
  for (const Row& row : rows) {
    if (!row.out.computed) {
      ++skipped;
      continue;
    }
    if (row.out.group.torsion_free()) continue;
    if (jmin < 0) jmin = row.j;
    jmin = std::min(jmin, row.j);
    jmax = std::max(jmax, row.j);
  }
  const int width = jmin < 0 ? -1 : jmax - jmin;
  const bool complete = skipped == 0;

  if (a.format == "json") {
    json slices = json::array();
    for (const Row& row : rows) {
      json s{{"j", row.j},
             {"grading", row.grading},
             {"computed", row.out.computed},
             {"guard_estimate", row.out.guard_estimate}};
      if (row.out.computed) {
        s["group"] = group_to_json(row.out.group);
        s["chain_ranks"] = row.out.chain_ranks;
      }
      slices.push_back(std::move(s));
    }
    print_json(json{{"graph", graph_json(a.source, g)},
                    {"m", a.m},
                    {"i", a.i},
                    {"variant", a.variant},
                    {"slices", slices},
                    {"torsion_width",
                     {{"width", width},
                      {"j_min", jmin},
                      {"j_max", jmax},
                      {"complete", complete}}}});
    return complete ? 0 : kExitGuard;
  }

  if (a.format == "csv") {
    std::printf("j,grading,computed,free_rank,torsion,group,guard_estimate\n");
    for (const Row& row : rows) {
      if (row.out.computed)
        std::printf("%d,%d,1,%d,\"%s\",\"%s\",%lld\n", row.j, row.grading,
                    row.out.group.rank, row.out.group.torsion().str().c_str(),
                    row.out.group.str().c_str(), row.out.guard_estimate);
      else
        std::printf("%d,%d,0,,,,%lld\n", row.j, row.grading,
                    row.out.guard_estimate);
    }
    return complete ? 0 : kExitGuard;
  }

  std::printf("scan of %s over Z[x]/(x^%d): H^{%d,j}, %s variant\n",
              a.source.c_str(), a.m, a.i, a.variant.c_str());
  for (const Row& row : rows) {
    if (!row.out.computed) {
      std::printf("  j=%-3d skipped (estimated work %lld exceeds guard %lld)\n",
                  row.j, row.out.guard_estimate, a.max_cells);
      continue;
    }
    std::printf("  j=%-3d %s", row.j, row.out.group.str().c_str());
    if (!row.out.group.torsion_free())
      std::printf("   [torsion %s]", row.out.group.torsion().str().c_str());
    if (variant == Variant::dichromatic)
      std::printf("   (raw grading %d)", row.grading);
    std::printf("\n");
  }
  if (width >= 0)
    std::printf("torsion width %d (j from %d to %d)%s\n", width, jmin, jmax,
                complete ? "" : ", incomplete: some slices were skipped");
  else
    std::printf("torsion width -1 (every computed group is free)%s\n",
                complete ? "" : ", incomplete: some slices were skipped");
  return complete ? 0 : kExitGuard;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string id;
  std::string format = "text";
  std::string data_dir;
  long long max_cells = 0;
};

int list_tables(const std::string& data_dir) {
  const auto tables =
      load_reference_tables(data_dir + "/fixtures/reference_tables.json");
  std::printf("bundled reference tables:\n");
  for (const auto& t : tables)
    std::printf("  %-10s %s (%zu rows, algebra Z[x]/(x^%d))\n", t.id.c_str(),
                t.title.c_str(), t.rows.size(), t.m);
  return 0;
}

int run_table(const TableArgs& a) {
  if (a.id.empty()) return list_tables(a.data_dir);
  const ReferenceTable table = load_reference_table(
      a.data_dir + "/fixtures/reference_tables.json", a.id);
  const TableResult result = compute_table(table, a.max_cells);

  int unnoted_mismatches = 0;
  std::vector<std::string> footnotes;
  auto footnote_index = [&](const std::string& note) {
    for (std::size_t i = 0; i < footnotes.size(); ++i)
      if (footnotes[i] == note) return i + 1;
    footnotes.push_back(note);
    return footnotes.size();
  };

  if (a.format == "json") {
    json rows = json::array();
    for (std::size_t r = 0; r < result.rows.size(); ++r) {
      json cells = json::array();
      for (const TableCellResult& c : result.rows[r]) {
        json cell{{"j", c.cell->j},
                  {"torsion_only", c.cell->torsion_only},
                  {"computed", c.computed},
                  {"guard_estimate", c.guard_estimate},
                  {"conjectured", c.cell->conjectured}};
        if (c.cell->group) cell["published"] = group_to_json(*c.cell->group);
        if (!c.cell->note.empty()) cell["note"] = c.cell->note;
        if (c.computed) cell["group"] = group_to_json(c.actual);
        if (c.match.has_value()) cell["match"] = *c.match;
        if (c.match == false && c.cell->note.empty()) ++unnoted_mismatches;
        cells.push_back(std::move(cell));
      }
      rows.push_back(json{{"label", table.rows[r].label},
                          {"graph", table.rows[r].graph},
                          {"cells", std::move(cells)}});
    }
    print_json(json{{"id", table.id},
                    {"title", table.title},
                    {"m", table.m},
                    {"columns", table.columns},
                    {"rows", std::move(rows)},
                    {"mismatches", result.mismatches},
                    {"skipped", result.skipped}});
    return unnoted_mismatches == 0 ? 0 : kExitMismatch;
  }

  if (a.format == "csv") {
    std::printf("table,row,column,j,computed,group,published,match,note\n");
    for (std::size_t r = 0; r < result.rows.size(); ++r)
      for (std::size_t c = 0; c < result.rows[r].size(); ++c) {
        const TableCellResult& cell = result.rows[r][c];
        if (cell.match == false && cell.cell->note.empty())
          ++unnoted_mismatches;
        std::printf(
            "%s,%s,\"%s\",%d,%d,\"%s\",\"%s\",%s,\"%s\"\n", table.id.c_str(),
            table.rows[r].label.c_str(),
            c < table.columns.size() ? table.columns[c].c_str() : "",
            cell.cell->j, cell.computed ? 1 : 0,
            cell.computed ? cell.actual.str().c_str() : "",
            cell.cell->group ? cell.cell->group->str().c_str() : "",
            cell.match.has_value() ? (*cell.match ? "1" : "0") : "",
            cell.cell->note.c_str());
      }
    return unnoted_mismatches == 0 ? 0 : kExitMismatch;
  }

  std::printf("%s (algebra Z[x]/(x^%d))\n", table.title.c_str(), table.m);
  std::printf("marks: = matches the published value, ! differs, "
              "~ conjectured value, no mark = computed for display only\n\n");
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"row"});
  for (const auto& col : table.columns) grid.back().push_back(col);
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    grid.push_back({table.rows[r].label});
    for (const TableCellResult& c : result.rows[r]) {
      std::string text;
      if (!c.computed) {
        text = "skipped(est " + std::to_string(c.guard_estimate) + ")";
      } else {
        const AbelianGroup shown =
            c.cell->torsion_only ? c.actual.torsion() : c.actual;
        text = shown.str();
        if (c.match == true) text += " =";
        if (c.match == false) {
          text += " ! published " +
                  (c.cell->torsion_only ? c.cell->group->torsion().str()
                                        : c.cell->group->str());
          if (c.cell->note.empty()) ++unnoted_mismatches;
        }
        if (c.cell->conjectured) text += " ~";
      }
      if (!c.cell->note.empty())
        text += " [" + std::to_string(footnote_index(c.cell->note)) + "]";
      grid.back().push_back(std::move(text));
    }
  }
  std::vector<std::size_t> widths;
  for (const auto& row : grid) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c)
      std::printf("%-*s%s", static_cast<int>(widths[c]), row[c].c_str(),
                  c + 1 < row.size() ? "  | " : "");
    std::printf("\n");
  }
  std::printf("\n%d mismatching cells, %d skipped cells\n", result.mismatches,
              result.skipped);
  for (std::size_t i = 0; i < footnotes.size(); ++i)
    std::printf("[%zu] %s\n", i + 1, footnotes[i].c_str());
  return unnoted_mismatches == 0 ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::vector<std::string> suites;
  bool list = false;
  unsigned long long seed = 0;
  long long max_cells = 0;
  long long wide_max_cells = 0;
  std::string data_dir;
  std::string format = "text";
};

int suite_id_from_name(const std::string& name) {
  static const std::map<std::string, int> aliases = {
      {"polygon", 1},     {"polygons", 1},  {"thm31", 2},
      {"quadratic", 2},   {"thm41", 3},     {"cubic", 3},
      {"pinned", 4},      {"tables", 5},    {"widths", 5},
      {"band", 6},        {"meshes", 7},    {"surfaces", 7},
      {"properties", 8},  {"whitney", 8},   {"conjectures", 9},
  };
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  try {
    const int id = std::stoi(name);
    if (id >= 1 && id <= suite_count()) return id;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

int run_verify(const VerifyArgs& a) {
  if (a.list) {
    for (int id = 1; id <= suite_count(); ++id)
      std::printf("  %d  %s\n", id, suite_title(id).c_str());
    return 0;
  }
  std::vector<int> ids;
  for (const auto& name : a.suites) ids.push_back(suite_id_from_name(name));
  if (ids.empty())
    for (int id = 1; id <= suite_count(); ++id) ids.push_back(id);

  VerifyOptions opt;
  opt.data_dir = a.data_dir;
  opt.max_cells = a.max_cells;
  if (a.wide_max_cells > 0) opt.wide_max_cells = a.wide_max_cells;
  opt.wide_max_cells = std::max(opt.wide_max_cells, opt.max_cells);
  if (a.seed) opt.seed = a.seed;
  const bool text = a.format == "text";
  if (text)
    opt.log = [](const std::string& line) {
      std::printf("%s\n", line.c_str());
      std::fflush(stdout);
    };

  json suites = json::array();
  bool all_pass = true;
  for (int id : ids) {
    if (text) std::printf("suite %d: %s\n", id, suite_title(id).c_str());
    const SuiteResult r = run_suite(id, opt);
    all_pass = all_pass && r.pass;
    if (text) {
      std::printf("suite %d %s: %d/%zu checks, %.1fs\n", id,
                  r.pass ? "passed" : "FAILED", r.checks_passed(),
                  r.checks.size(), r.seconds);
    } else {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"detail", c.detail},
                              {"seconds", c.seconds}});
      suites.push_back(json{{"id", r.id},
                            {"title", r.title},
                            {"pass", r.pass},
                            {"seconds", r.seconds},
                            {"checks", std::move(checks)}});
    }
  }
  if (!text) print_json(json{{"pass", all_pass}, {"suites", suites}});
  return all_pass ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------------------
// conjecture

struct ConjectureArgs {
  std::string id;
  int limit = 0;
  long long max_cells = 0;
  std::string format = "text";
};

int run_conjecture(const ConjectureArgs& a) {
  if (a.id.empty()) {
    std::printf("conjectured formulas with bundled scans:\n");
    for (const auto& id : conjecture_ids()) {
      // A starved guard yields the statement without computing anything.
      const ConjectureReport rep = check_conjecture(id, 1, 1);
      std::printf("  %-5s %s\n", id.c_str(), rep.statement.c_str());
    }
    return 0;
  }
  const ConjectureReport rep = check_conjecture(a.id, a.limit, a.max_cells);

  if (a.format == "json") {
    json instances = json::array();
    for (const auto& inst : rep.instances)
      instances.push_back(json{{"subject", inst.subject},
                               {"computed", inst.computed},
                               {"holds", inst.computed ? json(inst.holds)
                                                       : json(nullptr)},
                               {"expected", inst.expected},
                               {"actual", inst.actual}});
    print_json(json{{"id", rep.id},
                    {"statement", rep.statement},
                    {"instances", std::move(instances)},
                    {"failures", rep.failures},
                    {"skipped", rep.skipped}});
    return rep.failures == 0 ? 0 : kExitMismatch;
  }

  std::printf("conjecture %s: %s\n", rep.id.c_str(), rep.statement.c_str());
  for (const auto& inst : rep.instances) {
    const char* mark = !inst.computed ? "skipped  "
                       : inst.holds   ? "confirmed"
                                      : "REFUTED  ";
    std::printf("  %s %s: expected %s, got %s\n", mark, inst.subject.c_str(),
                inst.expected.c_str(), inst.actual.c_str());
  }
  std::printf("%d refuted, %d skipped of %zu instances\n", rep.failures,
              rep.skipped, rep.instances.size());
  return rep.failures == 0 ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------------------
// stats

int run_stats(const std::string& source, const std::string& format) {
  const SimpleGraph g = load_graph_source(source);
  const GraphStats s = stats(g);
  if (format == "json") {
    print_json(json{{"graph", graph_json(source, g)},
                    {"vertices", s.v},
                    {"edges", s.e},
                    {"triangle_census", {s.t0, s.t1, s.t2, s.t3}},
                    {"distance_pairs",
                     {{"d1", s.d1}, {"d2", s.d2}, {"d_ge3", s.dge3}}},
                    {"four_cycles", s.sq},
                    {"four_cycles_with_diagonal", s.sqprime},
                    {"girth", s.girth >= kGirthInf ? json(nullptr)
                                                   : json(s.girth)},
                    {"components", s.p0},
                    {"bipartite_components", s.p0bi},
                    {"cycle_rank", s.p1}});
    return 0;
  }
  std::printf("graph %s\n", source.c_str());
  std::printf("  vertices %d, edges %lld, components %d (bipartite %d), "
              "cycle rank %lld, girth %s\n",
              s.v, static_cast<long long>(s.e), s.p0, s.p0bi,
              static_cast<long long>(s.p1), girth_str(s.girth).c_str());
  std::printf("  vertex triples by spanned edges: t0=%lld t1=%lld t2=%lld "
              "t3=%lld\n",
              static_cast<long long>(s.t0), static_cast<long long>(s.t1),
              static_cast<long long>(s.t2), static_cast<long long>(s.t3));
  std::printf("  ordered vertex pairs by distance: d1=%lld d2=%lld "
              "d>=3=%lld\n",
              static_cast<long long>(s.d1), static_cast<long long>(s.d2),
              static_cast<long long>(s.dge3));
  std::printf("  4-cycles %lld, of them with a diagonal %lld\n",
              static_cast<long long>(s.sq), static_cast<long long>(s.sqprime));
  return 0;
}

// ---------------------------------------------------------------------------
// cell

struct CellArgs {
  std::string source;
  std::string variant = "delta4";
  std::string format = "text";
};

int run_cell(const CellArgs& a) {
  const bool is_mesh = std::filesystem::exists(a.source) &&
                       a.source.size() > 3 &&
                       a.source.substr(a.source.size() - 3) == ".qm";
  CellPresentation p;
  std::string describe;
  if (is_mesh) {
    const QuadMesh mesh = load_quad_mesh(a.source);
    p = mesh_presentation(mesh);
    describe = "mesh " + a.source + " (" + std::to_string(mesh.graph.v) +
               " vertices, " + std::to_string(mesh.faces.size()) + " faces)";
  } else {
    const SimpleGraph g = load_graph_source(a.source);
    p = presentation(g, cell_variant_from_string(a.variant));
    describe = "graph " + a.source + ", presentation " + a.variant;
  }
  const AbelianGroup one = h1(p);
  const long long two = h2(p);

  if (a.format == "json") {
    print_json(json{{"source", a.source},
                    {"presentation", is_mesh ? "mesh" : a.variant},
                    {"generators", p.generators},
                    {"relations", p.relations.n_rows},
                    {"h1", group_to_json(one)},
                    {"h2_rank", two}});
    return 0;
  }
  std::printf("%s\n", describe.c_str());
  std::printf("  generators %d, relations %d\n", p.generators,
              p.relations.n_rows);
  std::printf("  h1: %s   (primary %s)\n", one.str().c_str(),
              primary_str(one).c_str());
  std::printf("  h2 rank: %lld\n", two);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact chromatic graph cohomology over truncated polynomial algebras"};
  app.require_subcommand(1);

  const long long default_cells = env_max_cells();
  const std::string data_dir = default_data_dir();
  const auto format_check =
      CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case);
  const auto variant_check =
      CLI::IsMember({"chromatic", "hat", "dichromatic"}, CLI::ignore_case);

  CohomologyArgs coh;
  coh.max_cells = default_cells;
  auto* c1 = app.add_subcommand(
      "cohomology", "one cohomology group H^{i,j} of a graph");
  c1->add_option("graph", coh.source,
                 "family descriptor, edge-list file, or mesh file")
      ->required();
  c1->add_option("--m", coh.m, "algebra truncation exponent (weights < m)")
      ->check(CLI::Range(2, 64));
  c1->add_option("--i", coh.i, "cohomological degree (edges in a state)")
      ->check(CLI::NonNegativeNumber);
  c1->add_option("--j", coh.j, "weight-sum grading")->required();
  c1->add_option("--variant", coh.variant, "differential variant")
      ->check(variant_check);
  c1->add_option("--convention", coh.convention,
                 "cohomology (default) or homology")
      ->check(CLI::IsMember({"cohomology", "homology"}, CLI::ignore_case));
  c1->add_option("--format", coh.format, "text or json")->check(format_check);
  c1->add_option("--max-cells", coh.max_cells,
                 "size guard: max product of adjacent chain ranks");

  ScanArgs scan;
  scan.max_cells = default_cells;
  auto* c2 = app.add_subcommand(
      "scan", "all gradings of H^{i,*} plus the torsion width");
  c2->add_option("graph", scan.source,
                 "family descriptor, edge-list file, or mesh file")
      ->required();
  c2->add_option("--m", scan.m, "algebra truncation exponent")
      ->check(CLI::Range(2, 64));
  c2->add_option("--i", scan.i, "cohomological degree (default 1)")
      ->check(CLI::NonNegativeNumber);
  c2->add_option("--variant", scan.variant, "differential variant")
      ->check(variant_check);
  c2->add_option("--format", scan.format, "text, json, or csv")
      ->check(format_check);
  c2->add_option("--max-cells", scan.max_cells, "size guard per slice");

  TableArgs table;
  table.max_cells = default_cells;
  table.data_dir = data_dir;
  auto* c3 = app.add_subcommand(
      "table",
      "recompute a bundled reference table and mark agreement; cells whose "
      "published value is a documented erratum carry footnotes");
  c3->add_option("id", table.id, "table id (omit to list tables)");
  c3->add_option("--format", table.format, "text, json, or csv")
      ->check(format_check);
  c3->add_option("--max-cells", table.max_cells, "size guard per cell");
  c3->add_option("--data-dir", table.data_dir, "data directory with fixtures");

  VerifyArgs verify;
  verify.max_cells = default_cells;
  verify.data_dir = data_dir;
  auto* c4 = app.add_subcommand(
      "verify",
      "cross-check closed forms, pinned groups, tables, and structural "
      "properties against the chain-level computation");
  c4->add_option("suite", verify.suites,
                 "suite numbers or names (default: all; see --list)");
  c4->add_flag("--list", verify.list, "list the suites and exit");
  c4->add_option("--seed", verify.seed, "seed for the randomized checks");
  c4->add_option("--max-cells", verify.max_cells, "default size guard");
  c4->add_option("--wide-max-cells", verify.wide_max_cells,
                 "raised guard for the checks that need one");
  c4->add_option("--data-dir", verify.data_dir, "data directory");
  c4->add_option("--format", verify.format, "text or json")
      ->check(format_check);

  ConjectureArgs conj;
  conj.max_cells = default_cells;
  auto* c5 = app.add_subcommand(
      "conjecture", "evaluate a conjectured formula over a parameter range");
  c5->add_option("id", conj.id, "conjecture id (omit to list)");
  c5->add_option("--limit", conj.limit,
                 "upper end of the parameter range (0 = default range)");
  c5->add_option("--max-cells", conj.max_cells, "size guard per slice");
  c5->add_option("--format", conj.format, "text or json")->check(format_check);

  std::string stats_source, stats_format = "text";
  auto* c6 = app.add_subcommand("stats", "graph census counts");
  c6->add_option("graph", stats_source,
                 "family descriptor, edge-list file, or mesh file")
      ->required();
  c6->add_option("--format", stats_format, "text or json")
      ->check(format_check);

  CellArgs cell;
  auto* c7 = app.add_subcommand(
      "cell", "homology of a cell presentation (graph variants or a mesh)");
  c7->add_option("source", cell.source,
                 "family descriptor, edge-list file, or mesh file")
      ->required();
  c7->add_option("--variant", cell.variant,
                 "delta4, delta4-prime, 34, 34-prime, (3)4, hat-34, "
                 "hat-(3)4, or 4-only (ignored for meshes)");
  c7->add_option("--format", cell.format, "text or json")->check(format_check);

  auto* c8 = app.add_subcommand("families",
                                "list the graph-family descriptors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c1->parsed()) return run_cohomology(coh);
    if (c2->parsed()) return run_scan(scan);
    if (c3->parsed()) return run_table(table);
    if (c4->parsed()) return run_verify(verify);
    if (c5->parsed()) return run_conjecture(conj);
    if (c6->parsed()) return run_stats(stats_source, stats_format);
    if (c7->parsed()) return run_cell(cell);
    if (c8->parsed()) {
      std::printf("%s", family_help().c_str());
      std::printf(
          "\nAny argument naming an existing file is read as an edge list "
          "(header line 'v e', then one\n'u w' pair per edge, vertices "
          "0-based), or as a quadrilateral mesh when it ends in .qm.\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
