#include "chromahom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace chromahom {

int SimpleGraph::edge_index(int u, int w) const {
  if (u > w) std::swap(u, w);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, w));
  if (it == edges.end() || *it != std::make_pair(u, w)) return -1;
  return static_cast<int>(it - edges.begin());
}

int SimpleGraph::degree(int u) const {
  return __builtin_popcountll(adj[u]);
}

std::vector<int> SimpleGraph::neighbors(int u) const {
  std::vector<int> out;
  for (int w = 0; w < v; ++w)
    if (w != u && ((adj[u] >> w) & 1ULL)) out.push_back(w);
  return out;
}

SimpleGraph build_graph(int v, std::vector<std::pair<int, int>> edges) {
  if (v < 0 || v > kMaxVertices)
    throw std::invalid_argument("build_graph: vertex count out of supported range");
  if (v == 0 && !edges.empty())
    throw std::invalid_argument("build_graph: edges on an empty vertex set");
  SimpleGraph g;
  g.v = v;
  g.adj.assign(std::max(v, 1), 0);
  for (auto& [u, w] : edges) {
    if (u == w) throw std::invalid_argument("build_graph: loop edge");
    if (u < 0 || w < 0 || u >= v || w >= v)
      throw std::invalid_argument("build_graph: endpoint out of range");
    if (u > w) std::swap(u, w);
  }
  std::sort(edges.begin(), edges.end());
  for (auto& e : edges) {
    if (!g.edges.empty() && g.edges.back() == e) {
      g.collapsed_duplicates = true;
      continue;
    }
    g.edges.push_back(e);
    g.adj[e.first] |= 1ULL << e.second;
    g.adj[e.second] |= 1ULL << e.first;
  }
  return g;
}

std::vector<int> component_labels(const SimpleGraph& g) {
  std::vector<int> label(g.v, -1);
  int next = 0;
  for (int s = 0; s < g.v; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (label[w] < 0) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
  std::vector<int> dist(g.v, -1);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<std::array<int, 3>> triangles(const SimpleGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.v; ++a)
    for (int b = a + 1; b < g.v; ++b) {
      if (!g.has_edge(a, b)) continue;
      std::uint64_t common = g.adj[a] & g.adj[b];
      for (int c = b + 1; c < g.v; ++c)
        if ((common >> c) & 1ULL) out.push_back({a, b, c});
    }
  return out;
}

int triangles_containing(const SimpleGraph& g, int edge_idx) {
  if (edge_idx < 0 || edge_idx >= g.edge_count())
    throw std::invalid_argument("triangles_containing: bad edge index");
  auto [u, w] = g.edges[edge_idx];
  return __builtin_popcountll(g.adj[u] & g.adj[w]);
}

std::vector<FourCycle> four_cycles(const SimpleGraph& g) {
  std::vector<FourCycle> out;
  auto consider = [&](int a, int b, int c, int d) {
    // Cycle a-b-c-d-a with diagonals (a,c) and (b,d); a is the smallest
    // vertex of the subset by construction below.
    if (!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
          g.has_edge(d, a)))
      return;
    FourCycle fc;
    fc.verts = (b < d) ? std::array<int, 4>{a, b, c, d}
                       : std::array<int, 4>{a, d, c, b};
    fc.has_diagonal = g.has_edge(a, c) || g.has_edge(b, d);
    out.push_back(fc);
  };
  for (int a = 0; a < g.v; ++a)
    for (int b = a + 1; b < g.v; ++b)
      for (int c = b + 1; c < g.v; ++c)
        for (int d = c + 1; d < g.v; ++d) {
          consider(a, b, c, d);
          consider(a, b, d, c);
          consider(a, c, b, d);
        }
  return out;
}

namespace {

// Shortest cycle through each edge: delete it, BFS between its endpoints.
int exact_girth(const SimpleGraph& g) {
  int best = kGirthInf;
  for (auto [u, w] : g.edges) {
    SimpleGraph h = g;
    h.adj[u] &= ~(1ULL << w);
    h.adj[w] &= ~(1ULL << u);
    auto dist = bfs_distances(h, u);
    if (dist[w] >= 0) best = std::min(best, dist[w] + 1);
  }
  return best;
}

}  // namespace

GraphStats stats(const SimpleGraph& g) {
  GraphStats s;
  s.v = g.v;
  s.e = g.edge_count();

  for (int a = 0; a < g.v; ++a)
    for (int b = a + 1; b < g.v; ++b)
      for (int c = b + 1; c < g.v; ++c) {
        int k = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
        (k == 0 ? s.t0 : k == 1 ? s.t1 : k == 2 ? s.t2 : s.t3) += 1;
      }

  for (int u = 0; u < g.v; ++u) {
    auto dist = bfs_distances(g, u);
    for (int w = 0; w < g.v; ++w) {
      if (w == u) continue;
      if (dist[w] == 1)
        ++s.d1;
      else if (dist[w] == 2)
        ++s.d2;
      else
        ++s.dge3;  // distance >= 3, including unreachable
    }
  }

  for (const FourCycle& fc : four_cycles(g)) {
    ++s.sq;
    if (fc.has_diagonal) ++s.sqprime;
  }

  s.girth = exact_girth(g);

  auto label = component_labels(g);
  s.p0 = label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
  if (g.v == 0) s.p0 = 0;

  // Bipartite components via 2-coloring.
  std::vector<int> color(g.v, -1);
  std::vector<char> comp_bad(std::max(s.p0, 1), 0);
  for (int start = 0; start < g.v; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = color[u] ^ 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          comp_bad[label[u]] = 1;
        }
      }
    }
  }
  for (int c = 0; c < s.p0; ++c)
    if (!comp_bad[c]) ++s.p0bi;

  s.p1 = s.e - s.v + s.p0;
  return s;
}

namespace {

// Shared relabelling core: keep G's vertices; map selected H vertices onto
// G's, append the rest of H in increasing original order.
SimpleGraph glue(const SimpleGraph& g, const SimpleGraph& h,
                 const std::vector<std::pair<int, int>>& ident) {
  std::vector<int> hmap(h.v, -1);
  for (auto [hv, gv] : ident) {
    if (hv < 0 || hv >= h.v || gv < 0 || gv >= g.v)
      throw std::invalid_argument("product: vertex out of range");
    hmap[hv] = gv;
  }
  int next = g.v;
  for (int u = 0; u < h.v; ++u)
    if (hmap[u] < 0) hmap[u] = next++;
  std::vector<std::pair<int, int>> edges = g.edges;
  for (auto [u, w] : h.edges) edges.push_back({hmap[u], hmap[w]});
  return build_graph(next, std::move(edges));
}

}  // namespace

SimpleGraph one_vertex_product(const SimpleGraph& g, int vg,
                               const SimpleGraph& h, int wh) {
  return glue(g, h, {{wh, vg}});
}

SimpleGraph two_vertex_product(const SimpleGraph& g, int v1, int v2,
                               const SimpleGraph& h, int w1, int w2,
                               bool flip) {
  if (v1 == v2 || w1 == w2)
    throw std::invalid_argument("two_vertex_product: identified vertices must differ");
  if (flip) std::swap(w1, w2);
  return glue(g, h, {{w1, v1}, {w2, v2}});
}

SimpleGraph edge_product(const SimpleGraph& g, int eg, const SimpleGraph& h,
                         int eh, bool flip) {
  if (eg < 0 || eg >= g.edge_count() || eh < 0 || eh >= h.edge_count())
    throw std::invalid_argument("edge_product: bad edge index");
  auto [a, b] = g.edges[eg];
  auto [c, d] = h.edges[eh];
  return two_vertex_product(g, a, b, h, c, d, flip);
}

SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.v)
    throw std::invalid_argument("permuted: permutation size mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, w] : g.edges) edges.push_back({perm[u], perm[w]});
  return build_graph(g.v, std::move(edges));
}

namespace {

bool extend_iso(const SimpleGraph& a, const SimpleGraph& b,
                std::vector<int>& map, std::vector<char>& used, int next) {
  if (next == a.v) return true;
  for (int cand = 0; cand < b.v; ++cand) {
    if (used[cand]) continue;
    if (a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.v != b.v || a.edge_count() != b.edge_count()) return false;
  if (a.v > 10) throw std::invalid_argument("is_isomorphic: supported for v <= 10");
  std::vector<int> da, db;
  for (int u = 0; u < a.v; ++u) da.push_back(a.degree(u));
  for (int u = 0; u < b.v; ++u) db.push_back(b.degree(u));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.v, -1);
  std::vector<char> used(a.v, 0);
  return extend_iso(a, b, map, used, 0);
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.v << " " << g.edge_count() << "\n";
  for (auto [u, w] : g.edges) os << u << " " << w << "\n";
  return os.str();
}

SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  int v = 0, e = 0;
  if (!(is >> v >> e)) throw std::invalid_argument("edge list: bad header");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < e; ++i) {
    int u = 0, w = 0;
    if (!(is >> u >> w)) throw std::invalid_argument("edge list: truncated");
    edges.push_back({u, w});
  }
  return build_graph(v, std::move(edges));
}

SimpleGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

}  // namespace chromahom
