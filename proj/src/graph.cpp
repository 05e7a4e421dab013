#include "rgplanar/graph.hpp"

#include <algorithm>
#include <deque>

#include "rgplanar/errors.hpp"

namespace rgp {

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
  if (vertex_count < 0) throw Error("negative vertex count");
}

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges) : SimpleGraph(vertex_count) {
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) throw Error("edge endpoint out of range");
    e = make_edge(e.u, e.v);
  }
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](const Edge& e) { return e.u == e.v; }),
              edges.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<int> SimpleGraph::component_ids() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> queue{s};
    comp[s] = next;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adj_[x])
        if (comp[y] < 0) {
          comp[y] = next;
          queue.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

int SimpleGraph::component_count() const {
  const auto ids = component_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool SimpleGraph::is_connected() const { return component_count() <= 1; }

SimpleGraph SimpleGraph::without_edge(Edge e) const {
  e = make_edge(e.u, e.v);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const auto& f : edges_)
    if (f != e) kept.push_back(f);
  return SimpleGraph(n_, std::move(kept));
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> kept;
  for (const auto& e : edges_)
    if (pos[e.u] >= 0 && pos[e.v] >= 0) kept.push_back(make_edge(pos[e.u], pos[e.v]));
  return SimpleGraph(static_cast<int>(vertices.size()), std::move(kept));
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const {
  if (n_ != other.n_) return false;
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.push_back({x, a + y});
  return SimpleGraph(a + b, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) edges.push_back(make_edge(a, (a + 1) % n));
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return SimpleGraph(10, std::move(edges));
}

SimpleGraph prism_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(make_edge(i, (i + 1) % n));
    edges.push_back(make_edge(n + i, n + (i + 1) % n));
    edges.push_back(make_edge(i, n + i));
  }
  return SimpleGraph(2 * n, std::move(edges));
}

SimpleGraph cube_graph() { return prism_graph(4); }

bool is_three_connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  if (!g.is_connected()) return false;
  std::vector<bool> removed(n, false);
  auto connected_without = [&]() {
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v)
      if (!removed[v]) {
        ++alive;
        if (start < 0) start = v;
      }
    std::vector<bool> seen(n, false);
    std::deque<int> queue{start};
    seen[start] = true;
    int count = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x))
        if (!removed[y] && !seen[y]) {
          seen[y] = true;
          ++count;
          queue.push_back(y);
        }
    }
    return count == alive;
  };
  for (int a = 0; a < n; ++a) {
    removed[a] = true;
    for (int b = a + 1; b < n; ++b) {
      removed[b] = true;
      const bool ok = connected_without();
      removed[b] = false;
      if (!ok) return false;
    }
    removed[a] = false;
  }
  return true;
}

}  // namespace rgp
