#include "chromahom/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromahom/cell.hpp"
#include "chromahom/closed_forms.hpp"
#include "chromahom/families.hpp"
#include "chromahom/graph.hpp"
#include "chromahom/snf.hpp"
#include "chromahom/tables.hpp"

namespace chromahom {

int SuiteResult::checks_passed() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.pass) ++n;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string ts(long long x) { return std::to_string(x); }

// Accumulates comparisons inside one named check; the first few failures are
// kept verbatim so the report says what went wrong, not just that it did.
struct Tally {
  long long compared = 0;
  long long failures = 0;
  std::string info;  // extra summary appended to a passing check
  std::ostringstream problems;

  void expect(const std::string& what, bool ok) {
    ++compared;
    if (ok) return;
    ++failures;
    if (failures <= 4) problems << (failures == 1 ? "" : "; ") << what;
  }

  void expect_group(const std::string& what, const AbelianGroup& actual,
                    const AbelianGroup& expected) {
    expect(what + ": got " + actual.str() + ", want " + expected.str(),
           actual == expected);
  }

  void expect_eq(const std::string& what, long long actual, long long expected) {
    expect(what + ": got " + ts(actual) + ", want " + ts(expected),
           actual == expected);
  }

  std::string render() const {
    if (failures == 0) {
      std::string s = ts(compared) + " comparisons";
      if (!info.empty()) s += "; " + info;
      return s;
    }
    std::string s =
        ts(failures) + " of " + ts(compared) + " comparisons failed: " +
        problems.str();
    if (failures > 4) s += "; ...";
    return s;
  }
};

class Recorder {
 public:
  Recorder(SuiteResult& suite, const VerifyOptions& opt)
      : suite_(suite), opt_(opt) {}

  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    const auto t0 = Clock::now();
    try {
      Tally tally;
      fn(tally);
      r.pass = tally.failures == 0;
      r.detail = tally.render();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(t0);
    if (!r.pass) suite_.pass = false;
    if (opt_.log) {
      std::ostringstream line;
      line << (r.pass ? "    ok   " : "    FAIL ") << r.name << " (" << r.detail
           << ", " << r.seconds << "s)";
      opt_.log(line.str());
    }
    suite_.checks.push_back(std::move(r));
  }

 private:
  SuiteResult& suite_;
  const VerifyOptions& opt_;
};

std::string fixture_path(const VerifyOptions& opt) {
  return opt.data_dir + "/fixtures/reference_tables.json";
}

std::string mesh_path(const VerifyOptions& opt, const char* name) {
  return opt.data_dir + "/meshes/" + name;
}

// ---------------------------------------------------------------------------
// Shared helpers

std::optional<AbelianGroup> try_slice(const SimpleGraph& g, int m, int i, int j,
                                      long long cap,
                                      Variant variant = Variant::chromatic,
                                      Convention conv = Convention::cohomology) {
  SliceOutcome out = slice_cohomology(g, m, i, j, variant, conv, cap);
  if (!out.computed) return std::nullopt;
  return out.group;
}

// Compares one slice against an expected group, treating a guard skip as a
// failure (these suites choose sizes that must fit the configured caps).
void expect_slice(Tally& t, const std::string& what, const SimpleGraph& g,
                  int m, int i, int j, const AbelianGroup& expected,
                  long long cap) {
  auto actual = try_slice(g, m, i, j, cap);
  if (!actual) {
    t.expect(what + ": size guard tripped", false);
    return;
  }
  t.expect_group(what, *actual, expected);
}

SimpleGraph graph_from_mask(int v, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w, ++bit)
      if (mask >> bit & 1u) edges.push_back({u, w});
  return build_graph(v, std::move(edges));
}

SimpleGraph random_graph(std::mt19937_64& rng, int v, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w)
      if (coin(rng)) edges.push_back({u, w});
  return build_graph(v, std::move(edges));
}

double cycled_prob(int index) {
  static constexpr double kProbs[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  return kProbs[index % 5];
}

const int kTopGradingM3 = 3;  // algebra used by the top-grading formulas

int top_j(const SimpleGraph& g) { return 2 * g.v - 3; }

// ---------------------------------------------------------------------------
// Suite 1: polygons against the algebra's own homology in closed form.

void suite_polygons(Recorder& rec, const VerifyOptions& opt) {
  // The seven-gon over m = 4 sits just past the default size guard, and the
  // polygon comparisons are mandatory, so this suite runs at the wide guard.
  const long long cap = std::max(opt.max_cells, opt.wide_max_cells);
  for (int m = 2; m <= 4; ++m) {
    rec.run("polygons over m=" + ts(m) +
                ": every middle-degree slice matches the closed form",
            [&](Tally& t) {
              for (int v = 3; v <= 7; ++v) {
                const SimpleGraph g = polygon(v);
                for (int i = 1; i <= v - 2; ++i) {
                  auto range = grading_range(g, m, i);
                  if (!range) continue;
                  for (int j = range->first; j <= range->second; ++j)
                    expect_slice(t,
                                 "P" + ts(v) + " i=" + ts(i) + " j=" + ts(j) +
                                     " m=" + ts(m),
                                 g, m, i, j, polygon_cohomology(v, m, i, j),
                                 cap);
                }
              }
            });
  }
  rec.run(
      "polygon torsion is one copy of Z_m, exactly in gradings 2j = (v-i)m",
      [&](Tally& t) {
        for (int m = 2; m <= 4; ++m)
          for (int v = 3; v <= 7; ++v) {
            const SimpleGraph g = polygon(v);
            for (int i = 1; i <= v - 2; ++i) {
              auto range = grading_range(g, m, i);
              if (!range) continue;
              for (int j = range->first; j <= range->second; ++j) {
                auto group = try_slice(g, m, i, j, cap);
                if (!group) {
                  t.expect("size guard tripped", false);
                  continue;
                }
                const bool predicted =
                    (v - i) % 2 == 0 && 2 * j == (v - i) * m;
                const std::string what =
                    "P" + ts(v) + " i=" + ts(i) + " j=" + ts(j) + " m=" + ts(m);
                if (predicted)
                  t.expect_group(what, *group, AbelianGroup{0, {m}});
                else
                  t.expect(what + ": unexpected torsion in " + group->str(),
                           group->torsion_free());
              }
            }
          }
      });
}

// ---------------------------------------------------------------------------
// Suite 2: the quadratic algebra's top grading, closed form vs chain level.

void suite_quadratic_top(Recorder& rec, const VerifyOptions& opt) {
  auto compare = [&](Tally& t, const SimpleGraph& g, const std::string& what) {
    const TopPair expected = a2_theorem31(g);
    expect_slice(t, what + " H^0", g, 2, 0, g.v - 1, expected.h0,
                 opt.max_cells);
    expect_slice(t, what + " H^1", g, 2, 1, g.v - 1, expected.h1,
                 opt.max_cells);
  };
  rec.run("exhaustive: all labeled graphs on up to 5 vertices", [&](Tally& t) {
    long long graphs = 0;
    for (int v = 1; v <= 5; ++v) {
      const int pairs = v * (v - 1) / 2;
      for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        compare(t, graph_from_mask(v, mask), "v=" + ts(v) + " mask=" + ts(mask));
        ++graphs;
      }
    }
    t.info = ts(graphs) + " graphs";
  });
  rec.run("random: 200 graphs on 6..8 vertices", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 200; ++trial) {
      const int v = 6 + trial % 3;
      compare(t, random_graph(rng, v, cycled_prob(trial)),
              "trial " + ts(trial) + " v=" + ts(v));
    }
  });
}

// ---------------------------------------------------------------------------
// Suite 3: the cubic algebra's top grading, cell-presentation formula vs
// chain level.

void suite_cubic_top(Recorder& rec, const VerifyOptions& opt) {
  auto compare = [&](Tally& t, const SimpleGraph& g, const std::string& what) {
    const TopPair expected = a3_theorem41(g);
    expect_slice(t, what + " H^0", g, 3, 0, top_j(g), expected.h0,
                 opt.max_cells);
    expect_slice(t, what + " H^1", g, 3, 1, top_j(g), expected.h1,
                 opt.max_cells);
  };
  rec.run("exhaustive: all labeled graphs on up to 6 vertices", [&](Tally& t) {
    long long graphs = 0;
    for (int v = 1; v <= 6; ++v) {
      const int pairs = v * (v - 1) / 2;
      for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        compare(t, graph_from_mask(v, mask), "v=" + ts(v) + " mask=" + ts(mask));
        ++graphs;
      }
    }
    t.info = ts(graphs) + " graphs";
  });
  rec.run("random: 100 graphs on 7..8 vertices", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 1);
    for (int trial = 0; trial < 100; ++trial) {
      const int v = 7 + trial % 2;
      compare(t, random_graph(rng, v, cycled_prob(trial)),
              "trial " + ts(trial) + " v=" + ts(v));
    }
  });
}

// ---------------------------------------------------------------------------
// Suite 4: pinned groups for complete graphs and wheels at the top grading.

void suite_pinned_groups(Recorder& rec, const VerifyOptions& opt) {
  rec.run("complete graphs: published top-grading groups", [&](Tally& t) {
    expect_slice(t, "K3 j=3", complete_graph_k(3), kTopGradingM3, 1, 3,
                 AbelianGroup{0, {3}}, opt.max_cells);
    expect_slice(t, "K4 j=5", complete_graph_k(4), kTopGradingM3, 1, 5,
                 AbelianGroup::from_factors(2, {3, 3, 6}), opt.max_cells);
    expect_slice(t, "K5 j=7", complete_graph_k(5), kTopGradingM3, 1, 7,
                 AbelianGroup::from_factors(10, {2, 3, 3, 3, 3}),
                 opt.max_cells);
  });
  rec.run("complete graphs: the closed form follows the chain level, n=3..8",
          [&](Tally& t) {
            for (int n = 3; n <= 8; ++n)
              expect_slice(t, "K" + ts(n), complete_graph_k(n), kTopGradingM3,
                           1, 2 * n - 3, complete_graph_top(n), opt.max_cells);
          });
  rec.run("wheels: closed form and published table agree with the chain level",
          [&](Tally& t) {
            const ReferenceTable table =
                load_reference_table(fixture_path(opt), "wheels");
            for (const auto& row : table.rows) {
              const SimpleGraph g = family(row.graph);
              const int n = g.v;
              const TableCell& top = row.cells.back();
              t.expect_eq("top cell grading of " + row.label, top.j,
                          2 * n - 3);
              if (top.group)
                t.expect_group("closed form vs published, " + row.label,
                               wheel_top(n), *top.group);
              expect_slice(t, "chain level, " + row.label, g, kTopGradingM3, 1,
                           2 * n - 3, wheel_top(n), opt.max_cells);
            }
          });
}

// ---------------------------------------------------------------------------
// Suite 5: the bundled reference tables and the torsion-width checks.

void expect_cell(Tally& t, const std::string& what, const TableCellResult& r) {
  if (!r.computed) {
    t.expect(what + ": size guard tripped (estimate " +
                 ts(r.guard_estimate) + ")",
             false);
    return;
  }
  if (!r.cell->group) {
    ++t.compared;  // display-only cell: nothing published to compare against
    return;
  }
  const bool torsion_only = r.cell->torsion_only;
  const AbelianGroup actual = torsion_only ? r.actual.torsion() : r.actual;
  const AbelianGroup want =
      torsion_only ? r.cell->group->torsion() : *r.cell->group;
  t.expect_group(
      what + (r.cell->note.empty() ? "" : " [this fixture cell carries a note]"),
      actual, want);
}

void check_table_rows(Tally& t, ReferenceTable table, std::size_t keep_rows,
                      std::size_t first_row, long long cap) {
  std::vector<TableRow> rows(
      table.rows.begin() + static_cast<std::ptrdiff_t>(first_row),
      table.rows.begin() + static_cast<std::ptrdiff_t>(first_row + keep_rows));
  table.rows = std::move(rows);
  const TableResult result = compute_table(table, cap);
  for (std::size_t r = 0; r < result.rows.size(); ++r)
    for (const auto& cell : result.rows[r])
      expect_cell(t,
                  table.id + " " + table.rows[r].label + " j=" +
                      ts(cell.cell->j),
                  cell);
}

void suite_reference_tables(Recorder& rec, const VerifyOptions& opt) {
  rec.run("triangle-on-polygon rows k=3..7 recompute to the published cells",
          [&](Tally& t) {
            check_table_rows(t, load_reference_table(fixture_path(opt), "pt"),
                             5, 0, opt.max_cells);
          });
  rec.run("triangle-with-squares rows k=1..3 recompute to the published cells",
          [&](Tally& t) {
            check_table_rows(t, load_reference_table(fixture_path(opt), "gts"),
                             3, 0, opt.max_cells);
          });
  rec.run("rows past the default size guard match at the raised guard",
          [&](Tally& t) {
            check_table_rows(t, load_reference_table(fixture_path(opt), "pt"),
                             1, 5, opt.wide_max_cells);  // k = 8
            check_table_rows(t, load_reference_table(fixture_path(opt), "gts"),
                             1, 3, opt.wide_max_cells);  // k = 4
          });
  auto width_check = [&](const char* id) {
    return [&, id](Tally& t) {
      const ConjectureReport rep =
          check_conjecture(id, 0, opt.wide_max_cells);
      for (const auto& inst : rep.instances)
        t.expect(inst.subject + ": expected " + inst.expected + ", got " +
                     inst.actual,
                 inst.computed && inst.holds);
    };
  };
  rec.run("torsion width of the triangle-on-polygon family is k-3 (k=3..7)",
          width_check("8.1"));
  rec.run("torsion width of the triangle-with-squares family is k (k=1..3)",
          width_check("8.4"));
}

// ---------------------------------------------------------------------------
// Suite 6: the annulus-band family.

void suite_band_family(Recorder& rec, const VerifyOptions& opt) {
  rec.run("construction invariants: sizes and triangle coverage",
          [&](Tally& t) {
            for (int k = 1; k <= 4; ++k) {
              const SimpleGraph g = gk_graph(k);
              const SimpleGraph gp = gk_prime_graph(k);
              t.expect_eq("Gk:" + ts(k) + " vertices", g.v, 4 * k + 4);
              t.expect_eq("Gk:" + ts(k) + " edges", g.edge_count(), 9 * k + 7);
              t.expect_eq("rung-free variant edges", gp.edge_count(),
                          8 * k + 8);
              int off_triangle = 0;
              for (int e = 0; e < g.edge_count(); ++e)
                if (triangles_containing(g, e) == 0) ++off_triangle;
              t.expect_eq("edges not on a triangle", off_triangle, k - 1);
              bool all_on = true;
              for (int e = 0; e < gp.edge_count(); ++e)
                if (triangles_containing(gp, e) == 0) all_on = false;
              t.expect("every rung-free edge lies on a triangle", all_on);
            }
          });
  rec.run("top-grading groups match the closed form for k=2,3", [&](Tally& t) {
    for (int k = 2; k <= 3; ++k) {
      const SimpleGraph g = gk_graph(k);
      expect_slice(t, "Gk:" + ts(k) + " j=" + ts(8 * k + 5), g, kTopGradingM3,
                   1, 8 * k + 5, gk_top(k), opt.max_cells);
    }
  });
  rec.run("the first member is the documented exception", [&](Tally& t) {
    // Rank 12 instead of the general 5k+5 = 10; torsion as in the family.
    expect_slice(t, "Gk:1 j=13", gk_graph(1), kTopGradingM3, 1, 13,
                 AbelianGroup::from_factors(12, {3, 3, 3, 3, 3, 3, 12}),
                 opt.max_cells);
  });
  rec.run("triangle-presentation homology of the rung-free variant",
          [&](Tally& t) {
            for (int k = 2; k <= 3; ++k) {
              const CellPresentation p =
                  presentation(gk_prime_graph(k), CellVariant::delta4);
              std::vector<long long> threes(static_cast<std::size_t>(4 * k + 3),
                                            3);
              t.expect_group("h1 of the k=" + ts(k) + " presentation", h1(p),
                             AbelianGroup::from_factors(1, std::move(threes)));
            }
            // k = 1 has no rungs to drop, and its group is exceptional.
            const CellPresentation p1 =
                presentation(gk_prime_graph(1), CellVariant::delta4);
            t.expect_group("h1 of the k=1 presentation", h1(p1),
                           AbelianGroup::from_factors(0, {3, 3, 3, 3, 3, 3, 12}));
          });
  rec.run("coherence-count shortcut applies to the rung-free variant (k=2,3)",
          [&](Tally& t) {
            for (int k = 2; k <= 3; ++k) {
              const SimpleGraph gp = gk_prime_graph(k);
              const SquareCordialResult scf = square_cordial_form(gp);
              t.expect("shortcut path used for k=" + ts(k), scf.used_formula);
              auto actual = try_slice(gp, kTopGradingM3, 1, top_j(gp),
                                      opt.max_cells);
              if (!actual)
                t.expect("size guard tripped", false);
              else
                t.expect_group("shortcut vs chain level, k=" + ts(k), scf.h1,
                               *actual);
            }
          });
}

// ---------------------------------------------------------------------------
// Suite 7: quadrilateral surface meshes.

void suite_meshes(Recorder& rec, const VerifyOptions& opt) {
  rec.run("projective-plane mesh: torsion Z_2, trivial h2", [&](Tally& t) {
    const QuadMesh mesh = load_quad_mesh(mesh_path(opt, "rp2_5x5.qm"));
    t.expect_eq("faces", static_cast<long long>(mesh.faces.size()), 25);
    const CellPresentation p = mesh_presentation(mesh);
    t.expect_group("h1", h1(p), AbelianGroup{0, {2}});
    t.expect_eq("h2 rank", h2(p), 0);
  });
  rec.run("torus mesh: rank 2, no torsion, one 2-cycle", [&](Tally& t) {
    const QuadMesh mesh = load_quad_mesh(mesh_path(opt, "torus_5x5.qm"));
    const CellPresentation p = mesh_presentation(mesh);
    t.expect_group("h1", h1(p), AbelianGroup{2, {}});
    t.expect_eq("h2 rank", h2(p), 1);
  });
  rec.run("mod-3 mesh: torsion Z_3 from a tripled boundary word",
          [&](Tally& t) {
            const QuadMesh mesh = load_quad_mesh(mesh_path(opt, "z3_6x6.qm"));
            const CellPresentation p = mesh_presentation(mesh);
            t.expect_group("h1", h1(p), AbelianGroup{0, {3}});
            t.expect_eq("h2 rank", h2(p), 0);
          });
}

// ---------------------------------------------------------------------------
// Suite 8: structural properties on random and fixed graphs.

void suite_properties(Recorder& rec, const VerifyOptions& opt) {
  const std::vector<SimpleGraph> zoo = {complete_graph_k(4), wheel_graph(5),
                                        pt_graph(4), polygon(6)};

  rec.run("the differential composes to zero in every variant", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 10);
    std::vector<SimpleGraph> graphs = zoo;
    for (int trial = 0; trial < 8; ++trial)
      graphs.push_back(random_graph(rng, 4 + trial % 3, cycled_prob(trial)));
    for (const auto& g : graphs)
      for (int m = 2; m <= 4; ++m)
        for (Variant variant : {Variant::chromatic, Variant::hat,
                                Variant::dichromatic})
          for (int i = 0; i <= g.edge_count(); ++i) {
            auto range = grading_range(g, m, i, variant);
            if (!range) continue;
            for (int j = range->first; j <= range->second; ++j) {
              const GradedSliceComplex sc = slice_complex(g, m, j, i, variant);
              if (sc.ranks[0] * sc.ranks[1] > 100'000 ||
                  sc.ranks[1] * sc.ranks[2] > 100'000)
                continue;
              t.expect("d.d != 0 at v=" + ts(g.v) + " E=" +
                           ts(g.edge_count()) + " m=" + ts(m) + " i=" + ts(i) +
                           " j=" + ts(j) + " variant=" + to_string(variant),
                       multiply(sc.d_out, sc.d_in).is_zero());
            }
          }
  });

  rec.run("cohomology equals free homology plus lower torsion", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 11);
    std::vector<SimpleGraph> graphs = {complete_graph_k(4), pt_graph(4)};
    for (int trial = 0; trial < 6; ++trial)
      graphs.push_back(random_graph(rng, 4 + trial % 2, 0.55));
    for (const auto& g : graphs)
      for (int m = 2; m <= 3; ++m)
        for (int i = 0; i <= g.edge_count(); ++i) {
          auto range = grading_range(g, m, i);
          if (!range) continue;
          for (int j = range->first; j <= range->second; ++j) {
            auto coh = try_slice(g, m, i, j, opt.max_cells);
            auto hom = try_slice(g, m, i, j, opt.max_cells, Variant::chromatic,
                                 Convention::homology);
            auto below = i == 0 ? std::optional<AbelianGroup>(AbelianGroup{})
                                : try_slice(g, m, i - 1, j, opt.max_cells,
                                            Variant::chromatic,
                                            Convention::homology);
            if (!coh || !hom || !below) {
              t.expect("size guard tripped", false);
              continue;
            }
            t.expect_group("i=" + ts(i) + " j=" + ts(j) + " m=" + ts(m) +
                               " E=" + ts(g.edge_count()),
                           *coh, cohomology_from_homology(*hom, *below));
          }
        }
  });

  rec.run("alternating chain ranks equal alternating cohomology ranks",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 12);
            std::vector<SimpleGraph> graphs = {complete_graph_k(4), polygon(5)};
            for (int trial = 0; trial < 6; ++trial)
              graphs.push_back(random_graph(rng, 5, cycled_prob(trial)));
            for (const auto& g : graphs)
              for (int m = 2; m <= 3; ++m)
                for (int j = 0; j <= (m - 1) * g.v; ++j) {
                  long long chains = 0, ranks = 0;
                  bool any = false, guarded = false;
                  for (int i = 0; i <= g.edge_count(); ++i) {
                    const long long dim = basis_size(g, m, i, j);
                    if (dim == 0) continue;
                    any = true;
                    const int sign = i % 2 == 0 ? 1 : -1;
                    chains += sign * dim;
                    auto group = try_slice(g, m, i, j, opt.max_cells);
                    if (!group) {
                      guarded = true;
                      break;
                    }
                    ranks += sign * group->rank;
                  }
                  if (!any) continue;
                  if (guarded) {
                    t.expect("size guard tripped", false);
                    continue;
                  }
                  t.expect_eq("m=" + ts(m) + " j=" + ts(j) + " v=" + ts(g.v) +
                                  " E=" + ts(g.edge_count()),
                              ranks, chains);
                }
          });

  rec.run("graph statistics satisfy the counting identities", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 13);
    for (int trial = 0; trial < 40; ++trial) {
      const int v = 1 + static_cast<int>(rng() % 12);
      const SimpleGraph g = random_graph(rng, v, cycled_prob(trial));
      const GraphStats s = stats(g);
      const long long vv = v;
      const std::string at = " (v=" + ts(v) + " E=" + ts(s.e) + ")";
      t.expect_eq("ordered pairs" + at, s.d1 + s.d2 + s.dge3, vv * (vv - 1));
      t.expect_eq("distance-1 pairs" + at, s.d1, 2LL * s.e);
      t.expect_eq("vertex triples" + at, s.t0 + s.t1 + s.t2 + s.t3,
                  vv * (vv - 1) * (vv - 2) / 6);
      t.expect_eq("edge-triple incidences" + at,
                  s.e + s.t1 + 2 * s.t2 + 3 * s.t3,
                  static_cast<long long>(s.e) * (vv - 1));
      t.expect_eq("cycle rank" + at, s.p1, s.e - s.v + s.p0);
      t.expect("distance-2 pairs come in ordered pairs" + at, s.d2 % 2 == 0);
      t.expect("diagonal 4-cycles are 4-cycles" + at, s.sqprime <= s.sq);
      t.expect("bipartite components are components" + at, s.p0bi <= s.p0);
    }
  });

  rec.run("dropping diagonal squares changes h2, never h1", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 14);
    for (int trial = 0; trial < 10; ++trial) {
      const SimpleGraph g = trial == 0   ? complete_graph_k(5)
                            : trial == 1 ? wheel_graph(6)
                                         : random_graph(rng, 6, 0.55);
      const GraphStats s = stats(g);
      for (auto [full, pruned] :
           {std::pair{CellVariant::delta4, CellVariant::delta4_prime},
            std::pair{CellVariant::t34, CellVariant::t34_prime}}) {
        const CellPresentation a = presentation(g, full);
        const CellPresentation b = presentation(g, pruned);
        const std::string at = " (trial " + ts(trial) + ", " +
                               to_string(full) + ")";
        t.expect_group("h1 unchanged" + at, h1(a), h1(b));
        t.expect_eq("h2 drops by the diagonal-square count" + at, h2(a),
                    h2(b) + s.sqprime);
      }
    }
  });

  rec.run("presentation homologies agree in the documented coefficients",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 15);
            for (int trial = 0; trial < 10; ++trial) {
              const SimpleGraph g = trial == 0 ? complete_graph_k(5)
                                               : random_graph(rng, 6, 0.5);
              const AbelianGroup da =
                  h1(presentation(g, CellVariant::delta4));
              const CellPresentation t34 =
                  presentation(g, CellVariant::t34);
              const AbelianGroup qa =
                  h1(presentation(g, CellVariant::quot34));
              const std::string at = " (trial " + ts(trial) + ")";
              t.expect_eq("mod-3 dimensions agree" + at, da.tensor_zp(3),
                          h1_dim_zp(t34, 3));
              t.expect("away from 3 the identified presentation agrees" + at,
                       da.localize_away(3) == qa.localize_away(3));
              t.expect_eq("free ranks agree" + at, qa.rank, da.rank);
              int three_primary = 0;
              for (long long d : da.invariant_factors)
                if (d % 3 == 0) ++three_primary;
              t.expect_eq("mod-3 dimension counts 3-primary summands" + at,
                          h1_dim_zp(t34, 3), da.rank + three_primary);
            }
          });

  rec.run("a triangle forces 3-torsion in the top grading", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 16);
    int with_triangle = 0;
    for (int trial = 0; trial < 40 && with_triangle < 20; ++trial) {
      const SimpleGraph g = random_graph(rng, 5 + trial % 3, 0.55);
      if (stats(g).t3 == 0) continue;
      ++with_triangle;
      auto group = try_slice(g, 3, 1, top_j(g), opt.max_cells);
      if (!group) {
        t.expect("size guard tripped", false);
        continue;
      }
      bool has3 = false;
      for (long long d : group->invariant_factors)
        if (d % 3 == 0) has3 = true;
      t.expect("trial " + ts(trial) + ": no Z_3 in " + group->str(), has3);
    }
    t.expect("enough triangle graphs sampled", with_triangle >= 15);
  });

  rec.run("one-vertex products and Whitney flips preserve the top group",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 17);
            for (int trial = 0; trial < 50; ++trial) {
              const SimpleGraph g = random_graph(rng, 3 + trial % 4, 0.6);
              const SimpleGraph h = random_graph(rng, 3 + (trial + 2) % 4, 0.6);
              const int vg = static_cast<int>(rng() % g.v);
              const int wh = static_cast<int>(rng() % h.v);
              const SimpleGraph star = one_vertex_product(g, vg, h, wh);
              auto prod = try_slice(star, 3, 1, top_j(star), opt.max_cells);
              auto left = try_slice(g, 3, 1, top_j(g), opt.max_cells);
              auto right = try_slice(h, 3, 1, top_j(h), opt.max_cells);
              if (!prod || !left || !right) {
                t.expect("size guard tripped", false);
                continue;
              }
              t.expect_group("one-vertex product, trial " + ts(trial), *prod,
                             direct_sum(*left, *right));

              if (g.v < 2 || h.v < 2) continue;
              const int v1 = static_cast<int>(rng() % g.v);
              int v2 = static_cast<int>(rng() % (g.v - 1));
              if (v2 >= v1) ++v2;
              const int w1 = static_cast<int>(rng() % h.v);
              int w2 = static_cast<int>(rng() % (h.v - 1));
              if (w2 >= w1) ++w2;
              const SimpleGraph straight =
                  two_vertex_product(g, v1, v2, h, w1, w2, false);
              const SimpleGraph flipped =
                  two_vertex_product(g, v1, v2, h, w1, w2, true);
              auto a = try_slice(straight, 3, 1, top_j(straight),
                                 opt.max_cells);
              auto b = try_slice(flipped, 3, 1, top_j(flipped), opt.max_cells);
              if (!a || !b) {
                t.expect("size guard tripped", false);
                continue;
              }
              t.expect_group("Whitney flip, trial " + ts(trial), *a, *b);
            }
          });

  rec.run("edge products: mod-3 dimension adds the triangle pairing",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 18);
            int done = 0;
            for (int trial = 0; trial < 60 && done < 20; ++trial) {
              const SimpleGraph g = random_graph(rng, 4 + trial % 3, 0.6);
              const SimpleGraph h = random_graph(rng, 4 + (trial + 1) % 3, 0.6);
              if (g.edge_count() == 0 || h.edge_count() == 0) continue;
              ++done;
              const int eg = static_cast<int>(rng() % g.edge_count());
              const int eh = static_cast<int>(rng() % h.edge_count());
              const SimpleGraph glued = edge_product(g, eg, h, eh);
              auto prod = try_slice(glued, 3, 1, top_j(glued), opt.max_cells);
              auto left = try_slice(g, 3, 1, top_j(g), opt.max_cells);
              auto right = try_slice(h, 3, 1, top_j(h), opt.max_cells);
              if (!prod || !left || !right) {
                t.expect("size guard tripped", false);
                continue;
              }
              const long long expected =
                  left->tensor_zp(3) + right->tensor_zp(3) +
                  static_cast<long long>(triangles_containing(g, eg)) *
                      triangles_containing(h, eh);
              t.expect_eq("trial " + ts(trial), prod->tensor_zp(3), expected);
            }
            t.expect("enough product pairs sampled", done == 20);
          });

  rec.run("appending a triangle along an edge adds Z_3 and a free summand "
          "per triangle on that edge",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 19);
            int done = 0;
            for (int trial = 0; trial < 60 && done < 20; ++trial) {
              const SimpleGraph g = random_graph(rng, 4 + trial % 3, 0.6);
              if (g.edge_count() == 0) continue;
              ++done;
              const int eg = static_cast<int>(rng() % g.edge_count());
              const SimpleGraph glued = edge_product(g, eg, polygon(3), 0);
              auto prod = try_slice(glued, 3, 1, top_j(glued), opt.max_cells);
              auto base = try_slice(g, 3, 1, top_j(g), opt.max_cells);
              if (!prod || !base) {
                t.expect("size guard tripped", false);
                continue;
              }
              AbelianGroup expected = direct_sum(
                  *base, AbelianGroup::from_factors(
                             triangles_containing(g, eg), {3}));
              t.expect_group("trial " + ts(trial), *prod, expected);
            }
            t.expect("enough graphs sampled", done == 20);
          });

  rec.run("appending a square along an edge adds one free summand",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 20);
            int done = 0;
            for (int trial = 0; trial < 60 && done < 20; ++trial) {
              const SimpleGraph g = random_graph(rng, 4 + trial % 3, 0.6);
              if (g.edge_count() == 0) continue;
              ++done;
              const int eg = static_cast<int>(rng() % g.edge_count());
              const SimpleGraph glued = edge_product(g, eg, polygon(4), 0);
              auto prod = try_slice(glued, 3, 1, top_j(glued), opt.max_cells);
              auto base = try_slice(g, 3, 1, top_j(g), opt.max_cells);
              if (!prod || !base) {
                t.expect("size guard tripped", false);
                continue;
              }
              t.expect_group(
                  "trial " + ts(trial), *prod,
                  direct_sum(*base, AbelianGroup::free_group(1)));
            }
            t.expect("enough graphs sampled", done == 20);
          });

  rec.run("high gradings below the girth vanish", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 21);
    for (int trial = 0; trial < 10; ++trial) {
      const SimpleGraph g = trial == 0   ? polygon(5)
                            : trial == 1 ? complete_graph_k(4)
                                         : random_graph(rng, 5, 0.5);
      if (g.edge_count() == 0) continue;
      const GraphStats s = stats(g);
      for (int m : {3, 4})
        for (int i = 1; i < std::min(s.girth, 3); ++i) {
          const int bound = (m - 1) * (g.v - i);
          for (int j = bound; j <= bound + 2; ++j) {
            t.expect("criterion applies at i=" + ts(i) + " j=" + ts(j),
                     vanishing_applies(g, m, i, j));
            expect_slice(t, "m=" + ts(m) + " i=" + ts(i) + " j=" + ts(j), g, m,
                         i, j, AbelianGroup{}, opt.max_cells);
          }
          t.expect("criterion stops below the bound",
                   !vanishing_applies(g, m, i, bound - 1));
        }
    }
  });

  rec.run("relabeling the vertices never changes a slice", [&](Tally& t) {
    std::mt19937_64 rng(opt.seed + 22);
    for (int trial = 0; trial < 8; ++trial) {
      const SimpleGraph g = random_graph(rng, 5 + trial % 2, 0.55);
      std::vector<int> perm(static_cast<std::size_t>(g.v));
      for (int i = 0; i < g.v; ++i) perm[static_cast<std::size_t>(i)] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      const SimpleGraph p = permuted(g, perm);
      for (int m = 2; m <= 3; ++m)
        for (int i = 1; i <= 2; ++i) {
          auto range = grading_range(g, m, i);
          if (!range) continue;
          for (int j = range->first; j <= range->second; ++j) {
            auto a = try_slice(g, m, i, j, opt.max_cells);
            auto b = try_slice(p, m, i, j, opt.max_cells);
            if (!a || !b) {
              t.expect("size guard tripped", false);
              continue;
            }
            t.expect_group("trial " + ts(trial) + " m=" + ts(m) + " i=" +
                               ts(i) + " j=" + ts(j),
                           *a, *b);
          }
        }
    }
  });

  rec.run("an isolated vertex tensors the weight algebra onto every slice",
          [&](Tally& t) {
            std::mt19937_64 rng(opt.seed + 23);
            for (int trial = 0; trial < 6; ++trial) {
              const SimpleGraph g = random_graph(rng, 4 + trial % 2, 0.6);
              SimpleGraph plus = build_graph(g.v + 1, g.edges);
              for (int m = 2; m <= 3; ++m)
                for (int i = 0; i <= 2; ++i) {
                  auto range = grading_range(plus, m, i);
                  if (!range) continue;
                  for (int j = range->first; j <= range->second; ++j) {
                    auto whole = try_slice(plus, m, i, j, opt.max_cells);
                    if (!whole) {
                      t.expect("size guard tripped", false);
                      continue;
                    }
                    AbelianGroup expected;
                    bool ok = true;
                    for (int a = 0; a < m && ok; ++a) {
                      if (j - a < 0) continue;
                      auto part = try_slice(g, m, i, j - a, opt.max_cells);
                      if (!part) {
                        ok = false;
                        break;
                      }
                      expected = direct_sum(expected, *part);
                    }
                    if (!ok) {
                      t.expect("size guard tripped", false);
                      continue;
                    }
                    t.expect_group("trial " + ts(trial) + " m=" + ts(m) +
                                       " i=" + ts(i) + " j=" + ts(j),
                                   *whole, expected);
                  }
                }
            }
          });
}

// ---------------------------------------------------------------------------
// Suite 9: conjectured formulas on their scanned ranges.

void suite_conjectures(Recorder& rec, const VerifyOptions& opt) {
  struct Scan {
    const char* id;
    int limit;
    const char* label;
  };
  for (Scan scan : {Scan{"8.9", 8, "two triangles sharing an edge, m=2..8"},
                    Scan{"8.10", 8, "triangle and square sharing an edge, m=2..8"},
                    Scan{"8.11", 6, "complete graph on 4 vertices, m=4..6"},
                    Scan{"8.7", 6, "cones over polygons over m=5, n=5..6"}}) {
    rec.run(std::string("conjecture ") + scan.id + ": " + scan.label,
            [&](Tally& t) {
              const ConjectureReport rep =
                  check_conjecture(scan.id, scan.limit, opt.max_cells);
              for (const auto& inst : rep.instances)
                t.expect(inst.subject + ": expected " + inst.expected +
                             ", got " + inst.actual,
                         inst.computed && inst.holds);
            });
  }
}

constexpr std::array<const char*, 9> kSuiteTitles = {
    "polygons against the truncated algebra's closed form",
    "top grading over the quadratic algebra",
    "top grading over the cubic algebra",
    "pinned groups: complete graphs and wheels",
    "reference tables and torsion widths",
    "annulus-band family",
    "quadrilateral surface meshes",
    "structural properties",
    "conjecture scans",
};

}  // namespace

int suite_count() { return static_cast<int>(kSuiteTitles.size()); }

std::string suite_title(int id) {
  if (id < 1 || id > suite_count())
    throw std::out_of_range("suite id must be 1.." + ts(suite_count()));
  return kSuiteTitles[static_cast<std::size_t>(id - 1)];
}

SuiteResult run_suite(int id, const VerifyOptions& opt) {
  SuiteResult suite;
  suite.id = id;
  suite.title = suite_title(id);
  Recorder rec(suite, opt);
  const auto t0 = Clock::now();
  switch (id) {
    case 1: suite_polygons(rec, opt); break;
    case 2: suite_quadratic_top(rec, opt); break;
    case 3: suite_cubic_top(rec, opt); break;
    case 4: suite_pinned_groups(rec, opt); break;
    case 5: suite_reference_tables(rec, opt); break;
    case 6: suite_band_family(rec, opt); break;
    case 7: suite_meshes(rec, opt); break;
    case 8: suite_properties(rec, opt); break;
    case 9: suite_conjectures(rec, opt); break;
    default: break;  // unreachable; suite_title already threw
  }
  suite.seconds = seconds_since(t0);
  return suite;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
  std::vector<SuiteResult> suites;
  for (int id = 1; id <= suite_count(); ++id)
    suites.push_back(run_suite(id, opt));
  return suites;
}

}  // namespace chromahom
