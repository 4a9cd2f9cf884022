#include "ehrstab/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ehrstab {

Graph::Graph(std::vector<std::string> vertex_names,
             std::vector<std::pair<int, int>> edges)
    : names_(std::move(vertex_names)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != n)
    throw std::invalid_argument("duplicate vertex identifier");
  std::set<std::pair<int, int>> edge_set;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (u > v) std::swap(u, v);
    if (!edge_set.insert({u, v}).second)
      throw std::invalid_argument("duplicate edge rejected");
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  adj_.assign(n, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return Graph(std::move(names), std::move(edges));
}

int cycle_length_of(const Graph& g) {
  const int n = g.size();
  if (n < 3 || static_cast<int>(g.edges().size()) != n) return 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return 0;
  // connectivity: walk from 0 and count reachable vertices
  std::vector<bool> seen(n, false);
  int prev = -1, cur = 0, count = 0;
  while (!seen[cur]) {
    seen[cur] = true;
    ++count;
    const auto& nb = g.neighbors(cur);
    int nxt = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
  }
  return count == n ? n : 0;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(std::move(names), std::move(edges));
}

SmallCliqueFamily small_cliques(const Graph& g) {
  SmallCliqueFamily fam;
  const int n = g.size();
  for (int a = 0; a < n; ++a) fam.cliques.push_back({a});
  for (auto [a, b] : g.edges()) fam.cliques.push_back({a, b});
  for (auto [a, b] : g.edges())
    for (int c = b + 1; c < n; ++c)
      if (g.adjacent(a, c) && g.adjacent(b, c)) fam.cliques.push_back({a, b, c});
  for (const auto& k : fam.cliques) {
    bool maximal = true;
    for (const auto& k2 : fam.cliques) {
      if (k2.size() <= k.size()) continue;
      if (std::includes(k2.begin(), k2.end(), k.begin(), k.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) fam.maximal.push_back(k);
  }
  return fam;
}

namespace {

void extend_chordless(const Graph& g, std::vector<int>& path,
                      std::vector<bool>& used, int max_len,
                      std::vector<std::vector<int>>& out) {
  const int s = path.front();
  const int last = path.back();
  const int len = static_cast<int>(path.size());
  for (int u : g.neighbors(last)) {
    if (u <= s || used[u]) continue;
    // chordless: u may touch only the path tip (closure back to s aside)
    bool chord = false;
    for (int i = 1; i + 1 < len; ++i)
      if (g.adjacent(u, path[i])) {
        chord = true;
        break;
      }
    if (chord) continue;
    if (len > 1 && g.adjacent(u, s)) {
      // closing vertex; extending past it would chord with s
      if (len + 1 >= 5 && (len + 1) % 2 == 1 && len + 1 <= max_len &&
          path[1] < u) {  // path[1] < u kills the reflected copy
        auto cyc = path;
        cyc.push_back(u);
        out.push_back(std::move(cyc));
      }
      continue;
    }
    if (len + 1 >= max_len) continue;
    path.push_back(u);
    used[u] = true;
    extend_chordless(g, path, used, max_len, out);
    used[u] = false;
    path.pop_back();
  }
}

}  // namespace

OddCycleList chordless_odd_cycles(const Graph& g, int max_len) {
  if (max_len < 5) throw std::invalid_argument("max_len must be at least 5");
  OddCycleList list;
  const int n = g.size();
  std::vector<bool> used(n, false);
  for (int s = 0; s < n; ++s) {
    std::vector<int> path = {s};
    used[s] = true;
    extend_chordless(g, path, used, max_len, list.cycles);
    used[s] = false;
  }
  std::sort(list.cycles.begin(), list.cycles.end());
  return list;
}

namespace {

void grow_stable(const Graph& g, int next, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int v = next; v < g.size(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    grow_stable(g, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> stable_sets(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  grow_stable(g, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

const char* GorensteinVerdict::tag() const {
  switch (criterion) {
    case GorensteinCriterion::EmptyEdges: return "(i)";
    case GorensteinCriterion::NoIsolatedNoTriangle: return "(ii)";
    case GorensteinCriterion::BigCliques: return "(iii)";
    default: return "none";
  }
}

GorensteinVerdict is_gorenstein_tperfect(const Graph& g) {
  if (g.edges().empty()) return {true, GorensteinCriterion::EmptyEdges};

  auto fam = small_cliques(g);
  bool has_triangle = false;
  for (const auto& k : fam.cliques)
    if (k.size() == 3) has_triangle = true;
  bool has_isolated = false;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) has_isolated = true;

  auto cycles = chordless_odd_cycles(g, std::max(5, g.size())).cycles;
  bool has_long_odd = false;  // length >= 7
  bool has_odd5 = !cycles.empty();
  for (const auto& c : cycles)
    if (c.size() >= 7) has_long_odd = true;

  if (!has_isolated && !has_triangle && !has_long_odd)
    return {true, GorensteinCriterion::NoIsolatedNoTriangle};

  bool all_cliques_big = true;
  for (const auto& k : fam.maximal)
    if (k.size() < 3) all_cliques_big = false;
  if (all_cliques_big && !has_odd5)
    return {true, GorensteinCriterion::BigCliques};

  return {false, GorensteinCriterion::None};
}

}  // namespace ehrstab
