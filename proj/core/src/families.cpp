#include "chromahom/families.hpp"

#include <cctype>
#include <stdexcept>

namespace chromahom {

SimpleGraph polygon(int n) {
  if (n < 3) throw std::invalid_argument("polygon: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, std::move(e));
}

SimpleGraph complete_graph_k(int n) {
  if (n < 1) throw std::invalid_argument("complete graph: need n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return build_graph(n, std::move(e));
}

SimpleGraph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel: need n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) {
    e.push_back({0, i});
    e.push_back({i, i == n - 1 ? 1 : i + 1});
  }
  return build_graph(n, std::move(e));
}

SimpleGraph wheel_out(int n) {
  SimpleGraph w = wheel_graph(n);
  int drop = w.edge_index(1, n - 1);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < w.edge_count(); ++i)
    if (i != drop) e.push_back(w.edges[i]);
  return build_graph(n, std::move(e));
}

SimpleGraph wheel_in(int n) {
  SimpleGraph w = wheel_graph(n);
  int drop = w.edge_index(0, 1);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < w.edge_count(); ++i)
    if (i != drop) e.push_back(w.edges[i]);
  return build_graph(n, std::move(e));
}

SimpleGraph pt_graph(int k) {
  if (k < 3) throw std::invalid_argument("P_{t,k}: need k >= 3");
  // k-gon on 0..k-1 plus an apex k over the edge {0,1}.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  e.push_back({0, k});
  e.push_back({1, k});
  return build_graph(k + 1, std::move(e));
}

SimpleGraph gts_graph(int k) {
  if (k < 1) throw std::invalid_argument("G_{t,s^k}: need k >= 1");
  std::vector<std::pair<int, int>> e;
  auto a = [](int j) { return 1 + 2 * j; };
  auto b = [](int j) { return 2 + 2 * j; };
  e.push_back({0, a(0)});
  e.push_back({0, b(0)});
  e.push_back({a(0), b(0)});
  for (int j = 1; j <= k; ++j) {
    e.push_back({a(j - 1), a(j)});
    e.push_back({b(j - 1), b(j)});
    e.push_back({a(j), b(j)});
  }
  return build_graph(3 + 2 * k, std::move(e));
}

SimpleGraph gk_graph(int k) {
  if (k < 1) throw std::invalid_argument("G_k: need k >= 1");
  int c = 2 * k + 2;  // cycle length
  auto x = [](int i) { return i; };
  auto y = [c](int j) { return c + j; };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < c; ++i) {
    e.push_back({x(i), x((i + 1) % c)});
    e.push_back({y(i), y((i + 1) % c)});
    e.push_back({y(i), x(i)});
    e.push_back({y(i), x((i + 1) % c)});
  }
  for (int i = 1; i <= k - 1; ++i) e.push_back({x(i), x(2 * k + 1 - i)});
  return build_graph(4 * k + 4, std::move(e));
}

SimpleGraph gk_prime_graph(int k) {
  if (k < 1) throw std::invalid_argument("G'_k: need k >= 1");
  SimpleGraph full = gk_graph(k);
  int c = 2 * k + 2;
  std::vector<std::pair<int, int>> e;
  for (auto [u, w] : full.edges) {
    bool rung = (u >= 1 && u <= k - 1 && w == 2 * k + 1 - u);
    if (!rung) e.push_back({u, w});
  }
  return build_graph(c + c, std::move(e));
}

SimpleGraph family(const std::string& descriptor) {
  std::string name;
  std::string num;
  for (char ch : descriptor) {
    if (std::isalpha(static_cast<unsigned char>(ch)))
      name += ch;
    else if (ch == ':')
      continue;
    else if (std::isdigit(static_cast<unsigned char>(ch)))
      num += ch;
    else
      throw std::invalid_argument("family: bad descriptor '" + descriptor + "'");
  }
  if (name.empty() || num.empty())
    throw std::invalid_argument("family: bad descriptor '" + descriptor + "'");
  int n = std::stoi(num);
  if (name == "P") return polygon(n);
  if (name == "K") return complete_graph_k(n);
  if (name == "W") return wheel_graph(n);
  if (name == "Wout") return wheel_out(n);
  if (name == "Win") return wheel_in(n);
  if (name == "Pt") return pt_graph(n);
  if (name == "Gts") return gts_graph(n);
  if (name == "Gk") return gk_graph(n);
  throw std::invalid_argument("family: unknown family '" + name + "'");
}

std::string family_help() {
  return
      "P<n>     polygon on n vertices (n >= 3), e.g. P7\n"
      "K<n>     complete graph (n >= 1), e.g. K5\n"
      "W<n>     wheel: cone over the (n-1)-gon (n >= 4), e.g. W8\n"
      "Wout<n>  wheel minus one rim edge (n >= 4), e.g. Wout8\n"
      "Win<n>   wheel minus one spoke (n >= 4), e.g. Win8\n"
      "Pt:<k>   triangle glued to a k-gon along an edge (k >= 3), e.g. Pt:8\n"
      "Gts:<k>  triangle plus a ladder of k squares (k >= 1), e.g. Gts:3\n"
      "Gk:<k>   annulus-band graph with k interior squares (k >= 1), e.g. Gk:2\n";
}

}  // namespace chromahom
