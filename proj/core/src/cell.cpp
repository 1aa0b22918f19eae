#include "chromahom/cell.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chromahom/snf.hpp"

namespace chromahom {

namespace {

// A triangle on sorted vertices a<b<c, traversed a->b->c->a. Each traversal
// step is recorded against the canonical (min,max) edge orientation.
struct OrientedTriangle {
  std::array<int, 3> edge_idx;
  std::array<int, 3> edge_sign;
};

OrientedTriangle orient_triangle(const SimpleGraph& g, const std::array<int, 3>& t) {
  const auto [a, b, c] = t;
  return OrientedTriangle{{g.edge_index(a, b), g.edge_index(b, c), g.edge_index(a, c)},
                          {+1, +1, -1}};
}

struct OrientedSquare {
  std::array<int, 4> edge_idx;
  std::array<int, 4> edge_sign;
  bool has_diagonal = false;
};

OrientedSquare orient_square(const SimpleGraph& g, const FourCycle& f) {
  OrientedSquare s;
  s.has_diagonal = f.has_diagonal;
  for (int t = 0; t < 4; ++t) {
    const int from = f.verts[static_cast<std::size_t>(t)];
    const int to = f.verts[static_cast<std::size_t>((t + 1) % 4)];
    s.edge_idx[static_cast<std::size_t>(t)] = g.edge_index(from, to);
    s.edge_sign[static_cast<std::size_t>(t)] = from < to ? +1 : -1;
  }
  return s;
}

// Union-find over directed edge classes: each edge is either aligned (+1) or
// reversed (-1) relative to its class root; a class becomes "forced" when
// the identifications require an edge to equal its own reverse.
struct SignedUnionFind {
  std::vector<int> parent;
  std::vector<int> sign;  // sign of this element relative to its parent
  std::vector<bool> forced;

  explicit SignedUnionFind(int n) : parent(n), sign(n, 1), forced(n, false) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent[static_cast<std::size_t>(x)] == x) return {x, 1};
    const auto [root, s] = find(parent[static_cast<std::size_t>(x)]);
    parent[static_cast<std::size_t>(x)] = root;
    sign[static_cast<std::size_t>(x)] *= s;
    return {root, sign[static_cast<std::size_t>(x)]};
  }

  // Impose e_x = s * e_y.
  void unite(int x, int y, int s) {
    const auto [rx, sx] = find(x);
    const auto [ry, sy] = find(y);
    if (rx == ry) {
      if (sx != s * sy) forced[static_cast<std::size_t>(rx)] = true;
      return;
    }
    parent[static_cast<std::size_t>(ry)] = rx;
    sign[static_cast<std::size_t>(ry)] = sx * s * sy;
    if (forced[static_cast<std::size_t>(ry)]) forced[static_cast<std::size_t>(rx)] = true;
  }
};

SignedUnionFind triangle_identifications(const SimpleGraph& g,
                                         const std::vector<std::array<int, 3>>& tris) {
  SignedUnionFind uf(g.edge_count());
  for (const auto& t : tris) {
    const OrientedTriangle ot = orient_triangle(g, t);
    // Traversal edges are identified pairwise: e1 = e2 = e3.
    uf.unite(ot.edge_idx[0], ot.edge_idx[1], ot.edge_sign[0] * ot.edge_sign[1]);
    uf.unite(ot.edge_idx[1], ot.edge_idx[2], ot.edge_sign[1] * ot.edge_sign[2]);
  }
  return uf;
}

SparseIntMat oriented_incidence(const SimpleGraph& g) {
  SparseIntMat m(g.v, g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, w] = g.edges[static_cast<std::size_t>(e)];
    m.set(w, e, +1);
    m.set(u, e, -1);
  }
  m.finalize();
  return m;
}

struct PlainUnionFind {
  std::vector<int> parent;
  explicit PlainUnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
};

}  // namespace

CellVariant cell_variant_from_string(const std::string& tag) {
  if (tag == "delta4") return CellVariant::delta4;
  if (tag == "delta4-prime") return CellVariant::delta4_prime;
  if (tag == "34") return CellVariant::t34;
  if (tag == "34-prime") return CellVariant::t34_prime;
  if (tag == "(3)4") return CellVariant::quot34;
  if (tag == "hat-34") return CellVariant::hat34;
  if (tag == "hat-(3)4") return CellVariant::hat_quot34;
  if (tag == "4-only") return CellVariant::four_only;
  throw std::invalid_argument("unknown cell variant: " + tag);
}

std::string to_string(CellVariant v) {
  switch (v) {
    case CellVariant::delta4: return "delta4";
    case CellVariant::delta4_prime: return "delta4-prime";
    case CellVariant::t34: return "34";
    case CellVariant::t34_prime: return "34-prime";
    case CellVariant::quot34: return "(3)4";
    case CellVariant::hat34: return "hat-34";
    case CellVariant::hat_quot34: return "hat-(3)4";
    case CellVariant::four_only: return "4-only";
  }
  return "?";
}

CellPresentation presentation(const SimpleGraph& g, CellVariant variant) {
  const int e_total = g.edge_count();
  const std::vector<std::array<int, 3>> tris = triangles(g);
  const std::vector<FourCycle> squares = four_cycles(g);
  const bool prime_only =
      variant == CellVariant::delta4_prime || variant == CellVariant::t34_prime;

  CellPresentation p;
  p.variant = variant;

  if (variant == CellVariant::quot34 || variant == CellVariant::hat_quot34) {
    SignedUnionFind uf = triangle_identifications(g, tris);
    // Generators: one per class, indexed in increasing root edge order.
    std::vector<int> col_of_root(static_cast<std::size_t>(e_total), -1);
    std::vector<int> roots;
    for (int e = 0; e < e_total; ++e) {
      const auto [root, s] = uf.find(e);
      (void)s;
      if (col_of_root[static_cast<std::size_t>(root)] < 0) {
        col_of_root[static_cast<std::size_t>(root)] = static_cast<int>(roots.size());
        roots.push_back(root);
      }
    }
    p.generators = static_cast<int>(roots.size());

    std::vector<std::vector<long long>> rows;
    for (const FourCycle& f : squares) {
      const OrientedSquare sq = orient_square(g, f);
      std::vector<long long> row(static_cast<std::size_t>(p.generators), 0);
      for (int t = 0; t < 4; ++t) {
        const auto [root, s] = uf.find(sq.edge_idx[static_cast<std::size_t>(t)]);
        row[static_cast<std::size_t>(col_of_root[static_cast<std::size_t>(root)])] +=
            sq.edge_sign[static_cast<std::size_t>(t)] * s;
      }
      rows.push_back(std::move(row));
    }
    for (int c = 0; c < p.generators; ++c) {
      if (uf.forced[static_cast<std::size_t>(roots[static_cast<std::size_t>(c)])]) {
        std::vector<long long> row(static_cast<std::size_t>(p.generators), 0);
        row[static_cast<std::size_t>(c)] = 2;
        rows.push_back(std::move(row));
      }
    }
    p.relations = SparseIntMat(static_cast<int>(rows.size()), p.generators);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < p.generators; ++c)
        p.relations.set(static_cast<int>(r), c, rows[r][static_cast<std::size_t>(c)]);
    p.relations.finalize();

    if (variant == CellVariant::hat_quot34) {
      // Identifying a triangle's edges pinches its three vertices together.
      PlainUnionFind vuf(g.v);
      for (const auto& t : tris) {
        vuf.unite(t[0], t[1]);
        vuf.unite(t[1], t[2]);
      }
      std::vector<int> vclass(static_cast<std::size_t>(g.v), -1);
      int vcount = 0;
      for (int v = 0; v < g.v; ++v) {
        const int r = vuf.find(v);
        if (vclass[static_cast<std::size_t>(r)] < 0)
          vclass[static_cast<std::size_t>(r)] = vcount++;
        vclass[static_cast<std::size_t>(v)] = vclass[static_cast<std::size_t>(r)];
      }
      p.keep_vertices = true;
      p.vertex_incidence = SparseIntMat(vcount, p.generators);
      for (int c = 0; c < p.generators; ++c) {
        const auto [u, w] =
            g.edges[static_cast<std::size_t>(roots[static_cast<std::size_t>(c)])];
        p.vertex_incidence.set(vclass[static_cast<std::size_t>(w)], c, +1);
        p.vertex_incidence.set(vclass[static_cast<std::size_t>(u)], c, -1);
      }
      p.vertex_incidence.finalize();
    }
    return p;
  }

  // Edge-generator variants.
  p.generators = e_total;
  std::vector<std::array<long long, 3>> tri_coeff;  // per-row traversal coefficients
  const bool with_triangles = variant != CellVariant::four_only;
  if (with_triangles) {
    if (variant == CellVariant::delta4 || variant == CellVariant::delta4_prime) {
      tri_coeff = {{1, -2, 1}, {1, 1, -2}};
    } else {
      tri_coeff = {{1, 1, 1}};
    }
  }
  int n_rows = 0;
  if (with_triangles) n_rows += static_cast<int>(tris.size() * tri_coeff.size());
  for (const FourCycle& f : squares)
    if (!prime_only || !f.has_diagonal) ++n_rows;

  p.relations = SparseIntMat(n_rows, e_total);
  int r = 0;
  if (with_triangles) {
    for (const auto& t : tris) {
      const OrientedTriangle ot = orient_triangle(g, t);
      for (const auto& coeff : tri_coeff) {
        for (int k = 0; k < 3; ++k)
          p.relations.set(r, ot.edge_idx[static_cast<std::size_t>(k)],
                          coeff[static_cast<std::size_t>(k)] *
                              ot.edge_sign[static_cast<std::size_t>(k)]);
        ++r;
      }
    }
  }
  for (const FourCycle& f : squares) {
    if (prime_only && f.has_diagonal) continue;
    const OrientedSquare sq = orient_square(g, f);
    for (int k = 0; k < 4; ++k)
      p.relations.set(r, sq.edge_idx[static_cast<std::size_t>(k)],
                      sq.edge_sign[static_cast<std::size_t>(k)]);
    ++r;
  }
  p.relations.finalize();

  if (variant == CellVariant::hat34) {
    p.keep_vertices = true;
    p.vertex_incidence = oriented_incidence(g);
  }
  return p;
}

AbelianGroup h1(const CellPresentation& p) {
  if (!p.keep_vertices) {
    const SnfResult snf = smith_normal_form(p.relations);
    return AbelianGroup::from_factors(p.generators - snf.rank,
                                      snf.nontrivial_factors());
  }
  return homology_pair(p.vertex_incidence, p.relations.transposed());
}

long long h2(const CellPresentation& p) {
  return p.relations.n_rows - rank_z(p.relations);
}

int h1_dim_zp(const CellPresentation& p, long long p_prime) {
  int cycles = p.generators;
  if (p.keep_vertices) cycles -= rank_zp(p.vertex_incidence, p_prime);
  return cycles - rank_zp(p.relations, p_prime);
}

TriangleGraph triangle_graph(const SimpleGraph& g) {
  TriangleGraph tg;
  tg.triangles = triangles(g);
  const int n = static_cast<int>(tg.triangles.size());

  PlainUnionFind uf(n);
  std::vector<std::vector<int>> edge_tris(static_cast<std::size_t>(g.edge_count()));
  for (int t = 0; t < n; ++t) {
    const auto& tri = tg.triangles[static_cast<std::size_t>(t)];
    for (const auto [a, b] : {std::pair{tri[0], tri[1]}, std::pair{tri[0], tri[2]},
                              std::pair{tri[1], tri[2]}})
      edge_tris[static_cast<std::size_t>(g.edge_index(a, b))].push_back(t);
  }
  for (const auto& list : edge_tris)
    for (std::size_t k = 1; k < list.size(); ++k) uf.unite(list[0], list[k]);

  tg.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> comp_of_root(static_cast<std::size_t>(std::max(n, 1)), -1);
  for (int t = 0; t < n; ++t) {
    const int r = uf.find(t);
    if (comp_of_root[static_cast<std::size_t>(r)] < 0)
      comp_of_root[static_cast<std::size_t>(r)] = tg.components++;
    tg.component[static_cast<std::size_t>(t)] = comp_of_root[static_cast<std::size_t>(r)];
  }

  tg.coherent.assign(static_cast<std::size_t>(tg.components), true);
  SignedUnionFind suf = triangle_identifications(g, tg.triangles);
  for (int t = 0; t < n; ++t) {
    const auto& tri = tg.triangles[static_cast<std::size_t>(t)];
    const auto [root, s] = suf.find(g.edge_index(tri[0], tri[1]));
    (void)s;
    if (suf.forced[static_cast<std::size_t>(root)])
      tg.coherent[static_cast<std::size_t>(tg.component[static_cast<std::size_t>(t)])] =
          false;
  }
  return tg;
}

std::pair<int, int> coherence(const SimpleGraph& g) {
  const TriangleGraph tg = triangle_graph(g);
  const int coh = static_cast<int>(
      std::count(tg.coherent.begin(), tg.coherent.end(), true));
  return {tg.components, coh};
}

bool square_cordial(const SimpleGraph& g) {
  const GraphStats st = stats(g);
  return st.sq == st.sqprime;
}

QuadMesh parse_quad_mesh(const std::string& text) {
  std::istringstream in(text);
  int v = 0, e = 0, f = 0;
  if (!(in >> v >> e >> f)) throw std::invalid_argument("quad mesh: bad header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (int k = 0; k < e; ++k) {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw std::invalid_argument("quad mesh: bad edge line");
    edges.push_back({a, b});
  }
  QuadMesh mesh;
  mesh.graph = build_graph(v, edges);
  if (mesh.graph.collapsed_duplicates || mesh.graph.edge_count() != e)
    throw std::invalid_argument("quad mesh: duplicate edges");
  // Face indices refer to input order, which must equal canonical order.
  for (int k = 0; k < e; ++k) {
    auto [a, b] = edges[static_cast<std::size_t>(k)];
    if (a > b) std::swap(a, b);
    if (mesh.graph.edges[static_cast<std::size_t>(k)] != std::pair{a, b})
      throw std::invalid_argument("quad mesh: edges must be listed in sorted order");
  }
  for (int k = 0; k < f; ++k) {
    std::array<int, 4> face{};
    for (int t = 0; t < 4; ++t) {
      if (!(in >> face[static_cast<std::size_t>(t)]) ||
          face[static_cast<std::size_t>(t)] == 0 ||
          std::abs(face[static_cast<std::size_t>(t)]) > e)
        throw std::invalid_argument("quad mesh: bad face line");
    }
    // Every face must be a closed walk.
    std::vector<int> boundary(static_cast<std::size_t>(v), 0);
    for (int t = 0; t < 4; ++t) {
      const int idx = std::abs(face[static_cast<std::size_t>(t)]) - 1;
      const int sgn = face[static_cast<std::size_t>(t)] > 0 ? +1 : -1;
      const auto [a, b] = mesh.graph.edges[static_cast<std::size_t>(idx)];
      boundary[static_cast<std::size_t>(b)] += sgn;
      boundary[static_cast<std::size_t>(a)] -= sgn;
    }
    for (int x : boundary)
      if (x != 0) throw std::invalid_argument("quad mesh: face is not a closed walk");
    mesh.faces.push_back(face);
  }
  return mesh;
}

QuadMesh load_quad_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open quad mesh file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quad_mesh(buf.str());
}

CellPresentation mesh_presentation(const QuadMesh& mesh) {
  CellPresentation p;
  p.variant = CellVariant::four_only;
  p.generators = mesh.graph.edge_count();
  p.relations =
      SparseIntMat(static_cast<int>(mesh.faces.size()), p.generators);
  for (std::size_t r = 0; r < mesh.faces.size(); ++r) {
    std::vector<long long> row(static_cast<std::size_t>(p.generators), 0);
    for (int t = 0; t < 4; ++t) {
      const int signed_idx = mesh.faces[r][static_cast<std::size_t>(t)];
      row[static_cast<std::size_t>(std::abs(signed_idx) - 1)] +=
          signed_idx > 0 ? +1 : -1;
    }
    for (int c = 0; c < p.generators; ++c)
      p.relations.set(static_cast<int>(r), c, row[static_cast<std::size_t>(c)]);
  }
  p.relations.finalize();
  p.keep_vertices = true;
  p.vertex_incidence = oriented_incidence(mesh.graph);
  return p;
}

}  // namespace chromahom
