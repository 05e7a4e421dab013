#include "rgplanar/minors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "rgplanar/errors.hpp"

namespace rgp {

namespace {

void sorted_insert(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void sorted_erase(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

TraceBuilder::TraceBuilder(const SimpleGraph& host)
    : host_(host), parent_(host.vertex_count()), alive_(host.vertex_count(), true), adj_(host.vertex_count()) {
  for (int v = 0; v < host.vertex_count(); ++v) {
    parent_[v] = v;
    adj_[v] = host.neighbors(v);
  }
}

int TraceBuilder::representative(int host_vertex) const {
  int v = host_vertex;
  while (parent_[v] != v) v = parent_[v];
  return alive_[v] ? v : -1;
}

bool TraceBuilder::has_edge(int host_a, int host_b) const {
  const int a = representative(host_a);
  const int b = representative(host_b);
  if (a < 0 || b < 0 || a == b) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

void TraceBuilder::apply(const MinorStep& step) {
  const int n = host_.vertex_count();
  auto live = [&](int x) { return x >= 0 && x < n && parent_[x] == x && alive_[x]; };
  if (!live(step.u)) throw Error("trace step names a dead vertex");
  if (step.kind == MinorStep::Kind::kDeleteVertex) {
    for (int w : adj_[step.u]) sorted_erase(adj_[w], step.u);
    adj_[step.u].clear();
    alive_[step.u] = false;
    steps_.push_back(step);
    return;
  }
  if (!live(step.v) || step.u == step.v || !std::binary_search(adj_[step.u].begin(), adj_[step.u].end(), step.v))
    throw Error("trace step names a missing edge");
  if (step.kind == MinorStep::Kind::kDeleteEdge) {
    sorted_erase(adj_[step.u], step.v);
    sorted_erase(adj_[step.v], step.u);
  } else {
    const int keep = std::min(step.u, step.v);
    const int gone = std::max(step.u, step.v);
    for (int w : adj_[gone]) {
      sorted_erase(adj_[w], gone);
      if (w != keep) {
        sorted_insert(adj_[w], keep);
        sorted_insert(adj_[keep], w);
      }
    }
    adj_[gone].clear();
    parent_[gone] = keep;
  }
  steps_.push_back(step);
}

void TraceBuilder::delete_edge(int host_a, int host_b) {
  apply({MinorStep::Kind::kDeleteEdge, representative(host_a), representative(host_b)});
}

void TraceBuilder::contract(int host_a, int host_b) {
  apply({MinorStep::Kind::kContractEdge, representative(host_a), representative(host_b)});
}

void TraceBuilder::delete_vertex(int host_vertex) {
  apply({MinorStep::Kind::kDeleteVertex, representative(host_vertex), 0});
}

MinorTrace TraceBuilder::finish() const {
  MinorTrace t;
  t.host = host_;
  t.steps = steps_;
  const int n = host_.vertex_count();
  std::vector<int> index(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (parent_[v] == v && alive_[v]) index[v] = next++;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    if (index[v] >= 0)
      for (int w : adj_[v])
        if (v < w) edges.push_back({index[v], index[w]});
  t.result = SimpleGraph(next, std::move(edges));
  t.merge_map.resize(n);
  for (int v = 0; v < n; ++v) {
    const int r = representative(v);
    t.merge_map[v] = r < 0 ? -1 : index[r];
  }
  return t;
}

MinorTrace apply_trace(const SimpleGraph& host, const std::vector<MinorStep>& steps) {
  TraceBuilder b(host);
  for (const auto& s : steps) b.apply(s);
  return b.finish();
}

bool verify_trace(const MinorTrace& t) {
  try {
    const auto replay = apply_trace(t.host, t.steps);
    return replay.result == t.result && replay.merge_map == t.merge_map;
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Joint colour refinement on the disjoint union of a and b.
std::vector<int> refine_colors(const SimpleGraph& a, const SimpleGraph& b) {
  const int na = a.vertex_count();
  const int n = na + b.vertex_count();
  auto neighbors = [&](int x) -> const std::vector<int>& { return x < na ? a.neighbors(x) : b.neighbors(x - na); };
  auto offset = [&](int x) { return x < na ? 0 : na; };
  std::vector<int> color(n);
  for (int x = 0; x < n; ++x) color[x] = static_cast<int>(neighbors(x).size());
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> sig{color[x]};
      std::vector<int> around;
      for (int y : neighbors(x)) around.push_back(color[y + offset(x)]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      next[x] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    const int now = static_cast<int>(ids.size());
    color = std::move(next);
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& a, const SimpleGraph& b, std::vector<int> color, std::int64_t budget)
      : a_(a), b_(b), color_(std::move(color)), budget_(budget), n_(a.vertex_count()),
        map_(n_, -1), used_(n_, false), position_(n_, -1), parent_(n_, -1) {
    // BFS order per component, each component started from its rarest colour.
    std::map<int, int> freq;
    for (int x = 0; x < n_; ++x) ++freq[color_[x]];
    std::vector<bool> queued(n_, false);
    while (static_cast<int>(order_.size()) < n_) {
      int start = -1;
      for (int x = 0; x < n_; ++x)
        if (!queued[x] && (start < 0 || freq[color_[x]] < freq[color_[start]])) start = x;
      std::deque<int> queue{start};
      queued[start] = true;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        position_[x] = static_cast<int>(order_.size());
        order_.push_back(x);
        for (int y : a_.neighbors(x))
          if (!queued[y]) {
            queued[y] = true;
            parent_[y] = x;
            queue.push_back(y);
          }
      }
    }
  }

  bool run() { return extend(0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  bool feasible(int u, int v) const {
    if (used_[v] || color_[u] != color_[n_ + v]) return false;
    int mapped = 0;
    for (int w : a_.neighbors(u))
      if (map_[w] >= 0) {
        if (!b_.has_edge(v, map_[w])) return false;
        ++mapped;
      }
    int image = 0;
    for (int w : b_.neighbors(v))
      if (used_[w]) ++image;
    return image == mapped;
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    if (++nodes_ > budget_) throw CapExceeded("isomorphism search exceeded its node budget");
    const int u = order_[depth];
    auto attempt = [&](int v) {
      if (!feasible(u, v)) return false;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      map_[u] = -1;
      used_[v] = false;
      return false;
    };
    if (parent_[u] >= 0) {
      for (int v : b_.neighbors(map_[parent_[u]]))
        if (attempt(v)) return true;
    } else {
      for (int v = 0; v < n_; ++v)
        if (attempt(v)) return true;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::vector<int> color_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  int n_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<int> parent_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b, std::int64_t node_budget,
                                                 int vertex_cap) {
  if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap)
    throw CapExceeded("graph exceeds the isomorphism size cap");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto color = refine_colors(a, b);
  const int n = a.vertex_count();
  std::vector<int> ca(color.begin(), color.begin() + n);
  std::vector<int> cb(color.begin() + n, color.end());
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;
  IsoSearch search(a, b, std::move(color), node_budget);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b, std::int64_t node_budget, int vertex_cap) {
  return find_isomorphism(a, b, node_budget, vertex_cap).has_value();
}

// ---------------------------------------------------------------------------
// Babai contraction

BabaiResult babai_contract(const RightGroupTable& s, const ElementSet& c) {
  if (!generates_right_group(s, c)) throw Error("connection set does not generate the right group");
  const auto& g = s.group();
  const int k = s.k();
  const SimpleGraph host = underlying_graph(s, c);

  // Lift a spanning tree of the band quotient, starting at (e, r1).
  std::vector<int> band_rep(k, -1);
  std::vector<std::pair<int, int>> tree;
  const int start = s.index(g.identity(), 0);
  band_rep[0] = g.identity();
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : host.neighbors(x))
      if (band_rep[s.band(y)] < 0) {
        band_rep[s.band(y)] = s.group_part(y);
        tree.push_back({x, y});
        queue.push_back(y);
      }
  }
  if (std::find(band_rep.begin(), band_rep.end(), -1) != band_rep.end())
    throw Error("band quotient is disconnected");

  TraceBuilder builder(host);
  for (int h = 0; h < g.order(); ++h)
    for (const auto& [x, y] : tree) {
      const int hx = s.index(g.mul(h, s.group_part(x)), s.band(x));
      const int hy = s.index(g.mul(h, s.group_part(y)), s.band(y));
      builder.contract(hx, hy);
    }
  BabaiResult out;
  out.trace = builder.finish();

  // Host vertex (x, r_b) lies in the translate indexed by x * g_b^-1.
  auto translate = [&](int v) { return g.mul(s.group_part(v), g.inverse(band_rep[s.band(v)])); };
  out.group_label.assign(out.trace.result.vertex_count(), -1);
  for (int v = 0; v < s.size(); ++v) out.group_label[out.trace.merge_map[v]] = translate(v);

  std::vector<int> connection;
  for (int v = 0; v < s.size(); ++v)
    for (int x : c) {
      const int g1 = translate(v);
      const int g2 = translate(s.mul(v, x));
      if (g1 != g2) connection.push_back(g.mul(g.inverse(g1), g2));
    }
  out.group_connection = ElementSet(connection);

  std::vector<Edge> relabelled;
  for (const auto& e : out.trace.result.edges())
    relabelled.push_back(make_edge(out.group_label[e.u], out.group_label[e.v]));
  const SimpleGraph target = out.group_connection.empty() ? SimpleGraph(g.order())
                                                          : underlying_graph(g, out.group_connection);
  out.matches_group_cayley = SimpleGraph(g.order(), relabelled) == target;
  out.isomorphic = graph_isomorphic(out.trace.result, target);
  return out;
}

// ---------------------------------------------------------------------------
// Factor minors

namespace {

bool conjugation_fixes_up_to_inverse(const GroupTable& g, int conj, const std::vector<int>& elements) {
  const int inv = g.inverse(conj);
  for (int h : elements) {
    const int image = g.mul(g.mul(inv, h), conj);
    if (image != h && image != g.inverse(h)) return false;
  }
  return true;
}

struct FactorSplit {
  std::vector<int> in_band;     // pi_G(C)_j
  std::vector<int> complement;  // pi_G(C) \ pi_G(C)_j
};

FactorSplit split_for(const RightGroupTable& s, const ElementSet& c, int candidate) {
  if (!c.contains(candidate)) throw Error("candidate is not in the connection set");
  const auto p = projections(s, c);
  FactorSplit split;
  const auto& band = p.per_band[s.band(candidate)];
  split.in_band.assign(band.begin(), band.end());
  for (int a : p.group_part)
    if (!band.contains(a)) split.complement.push_back(a);
  return split;
}

}  // namespace

FactorPrecondition factor_precondition_detail(const RightGroupTable& s, const ElementSet& c, int candidate) {
  const auto split = split_for(s, c, candidate);
  const int conj = s.group_part(candidate);
  FactorPrecondition out;
  out.band_alternative = conjugation_fixes_up_to_inverse(s.group(), conj, split.in_band);
  out.complement_alternative = conjugation_fixes_up_to_inverse(s.group(), conj, split.complement);
  out.complement_empty = split.complement.empty();
  return out;
}

bool check_factor_precondition(const RightGroupTable& s, const ElementSet& c, int candidate) {
  const auto p = factor_precondition_detail(s, c, candidate);
  return p.band_alternative || p.complement_alternative;
}

FactorResult factor_minor(const RightGroupTable& s, const ElementSet& c, int candidate) {
  const auto split = split_for(s, c, candidate);
  const auto& g = s.group();
  const int conj = s.group_part(candidate);
  const int j = s.band(candidate);
  const bool complement_ok = conjugation_fixes_up_to_inverse(g, conj, split.complement);
  const bool band_ok = conjugation_fixes_up_to_inverse(g, conj, split.in_band);
  if (!complement_ok && !band_ok) throw Error("factor precondition fails for this candidate");

  const SimpleGraph host = underlying_graph(s, c);
  // Per undirected edge: 2 contract, 1 keep, 0 delete; the strongest arc wins.
  std::map<Edge, int> fate;
  for (int v = 0; v < s.size(); ++v)
    for (int x : c) {
      const int w = s.mul(v, x);
      if (v == w) continue;
      const int f = s.group_part(x);
      const int i = s.band(v);
      const int l = s.band(x);
      int cls = 1;
      if (f == conj && l == j && i != j)
        cls = 2;
      else if (f != conj && i != l)
        cls = 0;
      auto [it, fresh] = fate.emplace(make_edge(v, w), cls);
      if (!fresh) it->second = std::max(it->second, cls);
    }
  TraceBuilder builder(host);
  for (const auto& [e, cls] : fate)
    if (cls == 0) builder.delete_edge(e.u, e.v);
  for (const auto& [e, cls] : fate)
    if (cls == 2) builder.contract(e.u, e.v);

  // Label surviving vertices by their element of band j.
  auto label = [&](int v) { return s.band(v) == j ? s.group_part(v) : g.mul(s.group_part(v), conj); };
  std::vector<int> host_of(g.order(), -1);
  for (int y = 0; y < g.order(); ++y) host_of[y] = s.index(y, j);

  FactorResult out;
  out.conjugated = !complement_ok;
  std::vector<int> target_gens;
  for (int a : projections(s, c).group_part)
    target_gens.push_back(out.conjugated ? g.mul(g.mul(g.inverse(conj), a), conj) : a);
  const SimpleGraph target = underlying_graph(g, ElementSet(target_gens));

  std::set<Edge> present;
  for (const auto& e : host.edges()) {
    if (builder.representative(e.u) < 0 || !builder.has_edge(e.u, e.v)) continue;
    present.insert(make_edge(label(e.u), label(e.v)));
  }
  for (const auto& e : target.edges())
    if (!present.count(e)) throw Error("factor script lost a required edge");
  for (const auto& e : present)
    if (!target.has_edge(e.u, e.v)) builder.delete_edge(host_of[e.u], host_of[e.v]);
  out.trace = builder.finish();
  out.isomorphic = graph_isomorphic(out.trace.result, underlying_graph(g, projections(s, c).group_part));
  return out;
}

// ---------------------------------------------------------------------------
// Coxeter systems

namespace {

// Todd-Coxeter enumeration over the trivial subgroup for a presentation with
// involutive generators. Returns -1 when the coset cap is reached.
class CosetEnumerator {
 public:
  CosetEnumerator(int gens, std::vector<std::vector<int>> relators, std::int64_t cap)
      : gens_(gens), relators_(std::move(relators)), cap_(cap) {}

  std::int64_t run() {
    new_coset();
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (overflow_) return -1;
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int s = 0; s < gens_; ++s)
        if (table_[c][s] < 0) {
          const int d = new_coset();
          if (overflow_) return -1;
          table_[c][s] = d;
          table_[d][s] = c;
        }
    }
    std::int64_t count = 0;
    for (int c = 0; c < static_cast<int>(table_.size()); ++c)
      if (live(c)) ++count;
    return count;
  }

 private:
  bool live(int c) const { return parent_[c] == c; }

  int find(int c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  int new_coset() {
    if (static_cast<std::int64_t>(table_.size()) >= cap_) {
      overflow_ = true;
      return 0;
    }
    table_.emplace_back(gens_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c;
    int b = c;
    size_t i = 0;
    size_t j = w.size();
    while (true) {
      while (i < j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][w[j - 1]] >= 0) b = table_[b][w[--j]];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][w[i]] = f;
        return;
      }
      const int d = new_coset();
      if (overflow_) return;
      table_[f][w[i]] = d;
      table_[d][w[i]] = f;
    }
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int s = 0; s < gens_; ++s) {
        const int f = table_[e][s];
        if (f < 0) continue;
        if (table_[f][s] == e) table_[f][s] = -1;
        const int e1 = find(e);
        const int f1 = find(f);
        if (table_[e1][s] >= 0)
          merge(f1, table_[e1][s], queue);
        else if (table_[f1][s] >= 0)
          merge(e1, table_[f1][s], queue);
        else {
          table_[e1][s] = f1;
          table_[f1][s] = e1;
        }
      }
    }
  }

  int gens_;
  std::vector<std::vector<int>> relators_;
  std::int64_t cap_;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

CoxeterDiagnosis coxeter_diagnose(const GroupTable& g, const ElementSet& gens, std::int64_t coset_cap) {
  CoxeterDiagnosis d;
  const int n = static_cast<int>(gens.size());
  d.all_involutions = n > 0 && std::all_of(gens.begin(), gens.end(), [&](int x) { return g.element_order(x) == 2; });
  d.orders.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) d.orders[i][j] = g.element_order(g.mul(gens[i], gens[j]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.orders[i][j] >= 3) d.dynkin_edges.push_back({i, j});

  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  auto root = [&](int x) {
    while (comp[x] != x) x = comp[x];
    return x;
  };
  bool cycle = false;
  int components = n;
  for (const auto& [a, b] : d.dynkin_edges) {
    const int ra = root(a);
    const int rb = root(b);
    if (ra == rb) {
      cycle = true;
    } else {
      comp[rb] = ra;
      --components;
    }
  }
  d.is_tree = !cycle;
  d.is_connected = components <= 1;

  if (!d.all_involutions) return d;
  // A Coxeter group is finite exactly when its cosine form is positive definite.
  std::vector<std::vector<double>> form(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) form[i][j] = -std::cos(M_PI / d.orders[i][j]);
  for (int p = 0; p < n; ++p) {
    if (form[p][p] <= 1e-9) return d;  // infinite, so it cannot present a finite group
    for (int i = p + 1; i < n; ++i) {
      const double f = form[i][p] / form[p][p];
      for (int j = p; j < n; ++j) form[i][j] -= f * form[p][j];
    }
  }
  std::vector<std::vector<int>> relators;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> word;
      for (int r = 0; r < d.orders[i][j]; ++r) {
        word.push_back(i);
        word.push_back(j);
      }
      relators.push_back(std::move(word));
    }
  CosetEnumerator enumerator(n, std::move(relators), coset_cap);
  d.presentation_order = enumerator.run();
  if (d.presentation_order < 0) {
    d.undetermined = true;
    return d;
  }
  std::int64_t subgroup = 0;
  for (bool in : generated_subgroup(g, gens.members()))
    if (in) ++subgroup;
  d.is_coxeter = d.presentation_order == subgroup;
  return d;
}

}  // namespace rgp
