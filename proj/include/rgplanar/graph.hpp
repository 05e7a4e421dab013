#pragma once

#include <compare>
#include <vector>

namespace rgp {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph: no loops, no parallel edges. Edges are kept
/// sorted; neighbor lists are sorted ascending.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);
  /// Loops are dropped and duplicates merged.
  SimpleGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int a, int b) const;

  /// Component id per vertex; ids are assigned in order of smallest vertex.
  std::vector<int> component_ids() const;
  int component_count() const;
  bool is_connected() const;

  SimpleGraph without_edge(Edge e) const;
  /// Subgraph keeping all vertices and the given subset of edges.
  SimpleGraph with_edges(std::vector<Edge> edges) const { return SimpleGraph(n_, std::move(edges)); }
  /// Induced subgraph on `vertices` (relabelled in the given order).
  SimpleGraph induced(const std::vector<int>& vertices) const;

  /// Same vertex count and every edge of *this present in `other`.
  bool is_subgraph_of(const SimpleGraph& other) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph cycle_graph(int n);
SimpleGraph petersen_graph();
/// Triangular prism (C3 x K2).
SimpleGraph prism_graph(int n);
SimpleGraph cube_graph();

/// True when every component is 3-vertex-connected (brute force over vertex pairs).
bool is_three_connected(const SimpleGraph& g);

}  // namespace rgp
