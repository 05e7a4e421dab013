#include "rgplanar/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "rgplanar/errors.hpp"

namespace rgp {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const SimpleGraph& g) {
  BoostGraph bg(g.vertex_count());
  int index = 0;
  for (const auto& e : g.edges()) {
    auto [edge, added] = boost::add_edge(e.u, e.v, bg);
    (void)added;
    boost::put(boost::edge_index, bg, edge, index++);
  }
  return bg;
}

bool boost_is_planar(const SimpleGraph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Position of each neighbor inside the rotation at every vertex, indexed
// parallel to the graph's sorted neighbor lists.
class DartIndex {
 public:
  DartIndex(const SimpleGraph& g, const RotationSystem& rot) : g_(g), rot_(rot), pos_(g.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      pos_[v].assign(g.degree(v), -1);
      for (size_t i = 0; i < rot.order[v].size(); ++i) pos_[v][slot(v, rot.order[v][i])] = static_cast<int>(i);
    }
  }

  int slot(int v, int w) const {
    const auto& nb = g_.neighbors(v);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  }

  // Successor of u in the rotation at v.
  int successor(int v, int u) const {
    const auto& r = rot_.order[v];
    return r[(pos_[v][slot(v, u)] + 1) % r.size()];
  }

 private:
  const SimpleGraph& g_;
  const RotationSystem& rot_;
  std::vector<std::vector<int>> pos_;
};

int traced_face_count(const SimpleGraph& g, const RotationSystem& rot) {
  return static_cast<int>(trace_faces(g, rot).size());
}

void require_connected(const SimpleGraph& g) {
  if (!g.is_connected()) throw Error("graph is disconnected");
}

Face canonical_face(const Face& f) {
  if (f.empty()) return f;
  // Rotate so the walk starts at its lexicographically least rotation.
  Face best = f;
  Face cur = f;
  for (size_t i = 1; i < f.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<std::vector<int>> trace_branch_paths(const SimpleGraph& h, const std::vector<bool>& is_branch) {
  std::vector<std::vector<int>> paths;
  std::set<std::pair<int, int>> used_first_steps;
  for (int b = 0; b < h.vertex_count(); ++b) {
    if (!is_branch[b]) continue;
    for (int next : h.neighbors(b)) {
      if (used_first_steps.count({b, next})) continue;
      std::vector<int> path{b};
      int prev = b;
      int cur = next;
      while (!is_branch[cur]) {
        path.push_back(cur);
        const auto& nb = h.neighbors(cur);
        if (nb.size() != 2) throw Error("kuratowski subgraph has a dangling vertex");
        const int step = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = step;
      }
      path.push_back(cur);
      used_first_steps.insert({cur, prev});
      used_first_steps.insert({b, next});
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

KuratowskiWitness classify_minimal_nonplanar(const SimpleGraph& h) {
  std::vector<int> branch;
  std::vector<bool> is_branch(h.vertex_count(), false);
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 2) {
      branch.push_back(v);
      is_branch[v] = true;
    }
  KuratowskiWitness w;
  auto all_degree = [&](int d) {
    return std::all_of(branch.begin(), branch.end(), [&](int v) { return h.degree(v) == d; });
  };
  if (branch.size() == 5 && all_degree(4)) {
    w.kind = KuratowskiKind::kK5;
    w.branch_vertices = branch;
  } else if (branch.size() == 6 && all_degree(3)) {
    w.kind = KuratowskiKind::kK33;
  } else {
    throw Error("minimal non-planar subgraph is not a Kuratowski subdivision");
  }
  w.paths = trace_branch_paths(h, is_branch);
  if (w.kind == KuratowskiKind::kK33) {
    std::set<int> linked_to_first;
    for (const auto& p : w.paths) {
      if (p.front() == branch[0]) linked_to_first.insert(p.back());
      if (p.back() == branch[0]) linked_to_first.insert(p.front());
    }
    std::vector<int> side_a;
    std::vector<int> side_b;
    for (int v : branch) (linked_to_first.count(v) ? side_b : side_a).push_back(v);
    w.branch_vertices = side_a;
    w.branch_vertices.insert(w.branch_vertices.end(), side_b.begin(), side_b.end());
  }
  return w;
}

KuratowskiWitness extract_witness(const SimpleGraph& g, const std::vector<Edge>& seed) {
  // Shrink to a minimal non-planar edge set, then read off the subdivision.
  std::vector<Edge> edges = seed.empty() ? g.edges() : seed;
  std::sort(edges.begin(), edges.end());
  if (boost_is_planar(SimpleGraph(g.vertex_count(), edges))) edges = g.edges();
  for (size_t i = 0; i < edges.size();) {
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost_is_planar(SimpleGraph(g.vertex_count(), trial)))
      edges = std::move(trial);
    else
      ++i;
  }
  return classify_minimal_nonplanar(SimpleGraph(g.vertex_count(), edges));
}

}  // namespace

bool is_rotation_of(const SimpleGraph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> sorted = rot.order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) return false;
  }
  return true;
}

std::vector<Face> trace_faces(const SimpleGraph& g, const RotationSystem& rot) {
  if (!is_rotation_of(g, rot)) throw Error("rotation does not match graph");
  DartIndex index(g, rot);
  std::vector<std::vector<bool>> seen(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) seen[v].assign(g.degree(v), false);
  std::vector<Face> faces;
  for (int s = 0; s < g.vertex_count(); ++s) {
    for (int t : g.neighbors(s)) {
      if (seen[s][index.slot(s, t)]) continue;
      Face face;
      int u = s;
      int v = t;
      while (!seen[u][index.slot(u, v)]) {
        seen[u][index.slot(u, v)] = true;
        face.push_back(u);
        const int w = index.successor(v, u);
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

PlanarityResult test_planarity(const SimpleGraph& g) {
  BoostGraph bg = to_boost(g);
  const int n = g.vertex_count();
  std::vector<std::vector<BoostEdge>> embedding(n);
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  PlanarityResult result;
  result.planar = planar;
  if (planar) {
    PlanarEmbedding e;
    e.graph = g;
    e.rotation.order.resize(n);
    for (int v = 0; v < n; ++v)
      for (const auto& edge : embedding[v]) {
        const int a = static_cast<int>(boost::source(edge, bg));
        const int b = static_cast<int>(boost::target(edge, bg));
        e.rotation.order[v].push_back(a == v ? b : a);
      }
    e.faces = trace_faces(g, e.rotation);
    result.embedding = std::move(e);
  } else {
    std::vector<Edge> seed;
    for (const auto& edge : kuratowski)
      seed.push_back(make_edge(static_cast<int>(boost::source(edge, bg)), static_cast<int>(boost::target(edge, bg))));
    result.witness = extract_witness(g, seed);
  }
  return result;
}

bool is_planar(const SimpleGraph& g) {
  if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6) return false;
  return boost_is_planar(g);
}

namespace {

bool faces_match(const std::vector<Face>& stored, const std::vector<Face>& traced) {
  if (stored.empty()) return true;
  std::multiset<Face> a;
  std::multiset<Face> b;
  for (const auto& f : stored) a.insert(canonical_face(f));
  for (const auto& f : traced) b.insert(canonical_face(f));
  return a == b;
}

}  // namespace

bool verify_embedding(const PlanarEmbedding& e) {
  require_connected(e.graph);
  if (!is_rotation_of(e.graph, e.rotation)) return false;
  const auto faces = trace_faces(e.graph, e.rotation);
  if (!faces_match(e.faces, faces)) return false;
  const int f = e.graph.edge_count() == 0 ? 1 : static_cast<int>(faces.size());
  return e.graph.vertex_count() - e.graph.edge_count() + f == 2;
}

bool verify_embedding_componentwise(const PlanarEmbedding& e) {
  if (!is_rotation_of(e.graph, e.rotation)) return false;
  const auto faces = trace_faces(e.graph, e.rotation);
  if (!faces_match(e.faces, faces)) return false;
  const auto comp = e.graph.component_ids();
  const int c = e.graph.component_count();
  std::vector<int> v(c, 0);
  std::vector<int> edges(c, 0);
  std::vector<int> f(c, 0);
  for (int x = 0; x < e.graph.vertex_count(); ++x) ++v[comp[x]];
  for (const auto& edge : e.graph.edges()) ++edges[comp[edge.u]];
  for (const auto& face : faces) ++f[comp[face.front()]];
  for (int i = 0; i < c; ++i) {
    const int faces_i = edges[i] == 0 ? 1 : f[i];
    if (v[i] - edges[i] + faces_i != 2) return false;
  }
  return true;
}

bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w) {
  const bool k5 = w.kind == KuratowskiKind::kK5;
  const size_t want_branch = k5 ? 5 : 6;
  const size_t want_paths = k5 ? 10 : 9;
  if (w.branch_vertices.size() != want_branch || w.paths.size() != want_paths) return false;
  std::map<int, int> branch_pos;
  for (size_t i = 0; i < w.branch_vertices.size(); ++i) {
    const int b = w.branch_vertices[i];
    if (b < 0 || b >= g.vertex_count()) return false;
    if (!branch_pos.emplace(b, static_cast<int>(i)).second) return false;
  }
  std::set<int> interior_used;
  std::set<std::pair<int, int>> pairs;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    auto a = branch_pos.find(p.front());
    auto b = branch_pos.find(p.back());
    if (a == branch_pos.end() || b == branch_pos.end() || a->second == b->second) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1])) return false;
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch_pos.count(p[i])) return false;
      if (!interior_used.insert(p[i]).second) return false;
    }
    int x = std::min(a->second, b->second);
    int y = std::max(a->second, b->second);
    if (!k5 && !(x < 3 && y >= 3)) return false;
    if (!pairs.insert({x, y}).second) return false;
  }
  return pairs.size() == want_paths;
}

int genus_of_embedding(const SimpleGraph& g, const RotationSystem& rot) {
  require_connected(g);
  if (!is_rotation_of(g, rot)) throw Error("rotation does not match graph");
  const int f = g.edge_count() == 0 ? 1 : traced_face_count(g, rot);
  const int twice = 2 - g.vertex_count() + g.edge_count() - f;
  if (twice < 0 || twice % 2 != 0) throw Error("face count inconsistent with an orientable surface");
  return twice / 2;
}

GenusSearch min_genus_bruteforce(const SimpleGraph& g, std::int64_t budget) {
  require_connected(g);
  GenusSearch result;
  std::int64_t total = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 2; i < g.degree(v); ++i) {
      if (total > budget / i) {
        result.exceeded = true;
        return result;
      }
      total *= i;
    }
  if (total > budget) {
    result.exceeded = true;
    return result;
  }
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) rot.order[v] = g.neighbors(v);
  // Odometer: each vertex keeps its smallest neighbor first and permutes the rest.
  while (true) {
    const int genus = genus_of_embedding(g, rot);
    ++result.rotations;
    if (result.min_genus < 0 || genus < result.min_genus) {
      result.min_genus = genus;
      result.best = rot;
    }
    result.max_genus = std::max(result.max_genus, genus);
    int v = 0;
    for (; v < g.vertex_count(); ++v) {
      auto& r = rot.order[v];
      if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (v == g.vertex_count()) break;
  }
  return result;
}

std::int64_t euler_bound(std::int64_t v, bool triangle_free) {
  if (v < 3) return v * (v - 1) / 2;
  return triangle_free ? 2 * v - 4 : 3 * v - 6;
}

}  // namespace rgp
