#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ehrstab {

/// Finite simple graph with a fixed vertex order. Immutable after
/// construction; all queries report vertices by index in vertex-list order.
class Graph {
 public:
  Graph(std::vector<std::string> vertex_names,
        std::vector<std::pair<int, int>> edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj_;
};

/// Cycle graph on vertices v_0..v_{n-1} with edges e_j = {v_j, v_{j+1 mod n}}.
/// Rejects n < 3.
Graph make_cycle(int n);

/// Returns n if g is exactly a single n-cycle (every vertex of degree 2,
/// connected), otherwise 0.
int cycle_length_of(const Graph& g);

/// Parses {"vertices": [...], "edges": [[i,j], ...]}. Throws
/// std::invalid_argument with a diagnostic on loops, duplicate edges or
/// out-of-range indices.
Graph graph_from_json(const nlohmann::json& j);

struct SmallCliqueFamily {
  std::vector<std::vector<int>> cliques;  // all cliques of size 1..3
  std::vector<std::vector<int>> maximal;  // inclusion-maximal members
};

SmallCliqueFamily small_cliques(const Graph& g);

struct OddCycleList {
  std::vector<std::vector<int>> cycles;  // chordless, odd, length >= 5
};

/// All chordless odd cycles of length in [5, max_len], each reported once
/// up to rotation and reflection. Requires max_len >= 5.
OddCycleList chordless_odd_cycles(const Graph& g, int max_len);

/// All stable sets, including the empty set, in lexicographic order.
/// Intended for graphs with at most ~20 vertices.
std::vector<std::vector<int>> stable_sets(const Graph& g);

enum class GorensteinCriterion { None, EmptyEdges, NoIsolatedNoTriangle, BigCliques };

struct GorensteinVerdict {
  bool gorenstein = false;
  GorensteinCriterion criterion = GorensteinCriterion::None;
  const char* tag() const;  // "(i)", "(ii)", "(iii)" or "none"
};

/// Gorenstein test for the Ehrhart ring of stab(g). The caller asserts
/// that g is t-perfect; t-perfection is not verified here.
GorensteinVerdict is_gorenstein_tperfect(const Graph& g);

}  // namespace ehrstab
