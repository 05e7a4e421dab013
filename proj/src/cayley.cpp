#include "rgplanar/cayley.hpp"

#include <algorithm>
#include <deque>

namespace rgp {

namespace {

std::vector<std::string> element_names(const RightGroupTable& s) {
  std::vector<std::string> names;
  names.reserve(s.size());
  for (int x = 0; x < s.size(); ++x) names.push_back(s.name(x));
  return names;
}

void check_connection(int size, const ElementSet& c) {
  if (c.empty()) throw Error("connection set must be nonempty");
  for (int x : c)
    if (x < 0 || x >= size) throw Error("connection element out of range");
}

}  // namespace

CayleyDigraph cayley_digraph(const RightGroupTable& s, const ElementSet& c) {
  check_connection(s.size(), c);
  CayleyDigraph d;
  d.vertex_count = s.size();
  d.connection = c;
  d.vertex_names = element_names(s);
  for (int x : c) d.label_names.push_back(s.name(x));
  d.arcs.reserve(static_cast<size_t>(s.size()) * c.size());
  for (int v = 0; v < s.size(); ++v)
    for (size_t i = 0; i < c.size(); ++i) d.arcs.push_back({v, s.mul(v, c[i]), static_cast<int>(i)});
  return d;
}

CayleyDigraph cayley_digraph(const GroupTable& g, const ElementSet& c) {
  check_connection(g.order(), c);
  CayleyDigraph d;
  d.vertex_count = g.order();
  d.connection = c;
  d.vertex_names = g.names();
  for (int x : c) d.label_names.push_back(g.name(x));
  for (int v = 0; v < g.order(); ++v)
    for (size_t i = 0; i < c.size(); ++i) d.arcs.push_back({v, g.mul(v, c[i]), static_cast<int>(i)});
  return d;
}

SimpleGraph underlying_graph(const CayleyDigraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arcs.size());
  for (const auto& a : d.arcs)
    if (a.source != a.target) edges.push_back(make_edge(a.source, a.target));
  return SimpleGraph(d.vertex_count, std::move(edges));
}

SimpleGraph underlying_graph(const RightGroupTable& s, const ElementSet& c) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(s.size()) * c.size());
  for (int v = 0; v < s.size(); ++v)
    for (int x : c) {
      const int w = s.mul(v, x);
      if (w != v) edges.push_back(make_edge(v, w));
    }
  return SimpleGraph(s.size(), std::move(edges));
}

SimpleGraph underlying_graph(const GroupTable& g, const ElementSet& c) {
  std::vector<Edge> edges;
  for (int v = 0; v < g.order(); ++v)
    for (int x : c) {
      const int w = g.mul(v, x);
      if (w != v) edges.push_back(make_edge(v, w));
    }
  return SimpleGraph(g.order(), std::move(edges));
}

bool is_strongly_connected(const CayleyDigraph& d) {
  if (d.vertex_count == 0) return true;
  std::vector<std::vector<int>> fwd(d.vertex_count);
  std::vector<std::vector<int>> bwd(d.vertex_count);
  for (const auto& a : d.arcs) {
    fwd[a.source].push_back(a.target);
    bwd[a.target].push_back(a.source);
  }
  auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(d.vertex_count, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          queue.push_back(y);
        }
    }
    return count == d.vertex_count;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

Rational edge_count_formula(int m, int k, const std::vector<int>& multiplicities,
                            const std::vector<int>& inverse_map, int identity) {
  Rational inner(0);
  for (size_t a = 0; a < multiplicities.size(); ++a) {
    if (multiplicities[a] == 0) continue;
    inner += Rational(multiplicities[a] * k) - Rational(multiplicities[inverse_map[a]], 2);
  }
  inner -= Rational(multiplicities[identity], 2);
  return Rational(m) * inner;
}

Rational edge_count_formula(const RightGroupTable& s, const ElementSet& c) {
  const auto p = projections(s, c);
  std::vector<int> inverse(s.group_order());
  for (int a = 0; a < s.group_order(); ++a) inverse[a] = s.group().inverse(a);
  return edge_count_formula(s.group_order(), s.k(), p.multiplicity, inverse, s.group().identity());
}

Rational printed_edge_lower_bound(int m, int k, const std::vector<int>& multiplicities, int identity) {
  std::int64_t total = 0;
  for (int c : multiplicities) total += c;
  return Rational(m, 2) * Rational((2 * k - 1) * total - multiplicities[identity]);
}

Rational safe_edge_lower_bound(int m, int k, const std::vector<int>& multiplicities, int identity) {
  std::int64_t non_identity = 0;
  for (size_t a = 0; a < multiplicities.size(); ++a)
    if (static_cast<int>(a) != identity) non_identity += multiplicities[a];
  return Rational(m, 2) * Rational(k * non_identity + (k - 1) * multiplicities[identity]);
}

Rational safe_edge_lower_bound(const RightGroupTable& s, const ElementSet& c) {
  const auto p = projections(s, c);
  return safe_edge_lower_bound(s.group_order(), s.k(), p.multiplicity, s.group().identity());
}

GenerationOracle::GenerationOracle(const GroupTable& g) : group_(g) {}

bool GenerationOracle::generates(const std::vector<int>& elements) {
  std::string key(static_cast<size_t>(group_.order() + 7) / 8, '\0');
  for (int x : elements) key[x / 8] = static_cast<char>(key[x / 8] | (1 << (x % 8)));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const bool result = generates_group(group_, elements);
  cache_.emplace(std::move(key), result);
  return result;
}

bool GenerationOracle::generates(const RightGroupTable& s, const ElementSet& c) {
  std::vector<bool> band_hit(s.k(), false);
  std::vector<int> parts;
  for (int x : c) {
    band_hit[s.band(x)] = true;
    parts.push_back(s.group_part(x));
  }
  if (!std::all_of(band_hit.begin(), band_hit.end(), [](bool b) { return b; })) return false;
  return generates(parts);
}

namespace {

// Orders per-band group parts so that the sorted index sequence (band-major)
// is lexicographically least: a sequence ending early compares greater.
int compare_band_blocks(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? -1 : 1;
}

}  // namespace

bool is_band_canonical(const RightGroupTable& s, const ElementSet& c) {
  std::vector<std::vector<int>> blocks(s.k());
  for (int x : c) blocks[s.band(x)].push_back(s.group_part(x));
  for (int j = 0; j + 1 < s.k(); ++j)
    if (compare_band_blocks(blocks[j], blocks[j + 1]) > 0) return false;
  return true;
}

bool is_minimal_generating(const RightGroupTable& s, const ElementSet& c, GenerationOracle& oracle) {
  if (!oracle.generates(s, c)) return false;
  std::vector<int> rest;
  for (size_t skip = 0; skip < c.size(); ++skip) {
    rest.clear();
    for (size_t i = 0; i < c.size(); ++i)
      if (i != skip) rest.push_back(c[i]);
    if (!rest.empty() && oracle.generates(s, ElementSet(rest))) return false;
  }
  return true;
}

namespace {

class GeneratingSetWalker {
 public:
  GeneratingSetWalker(const RightGroupTable& s, const EnumerationOptions& options,
                      const std::function<bool(const ElementSet&)>& callback)
      : s_(s), options_(options), callback_(callback), oracle_(s.group()),
        band_count_(s.k(), 0) {}

  EnumerationSummary run() {
    EnumerationSummary summary;
    if (options_.max_size < s_.k()) {
      summary.size_below_band_count = true;
      return summary;
    }
    for (int target = s_.k(); target <= options_.max_size && !stop_; ++target) {
      target_ = target;
      chosen_.clear();
      descend(0);
    }
    summary.yielded = yielded_;
    summary.stopped_early = stop_;
    return summary;
  }

 private:
  int uncovered_bands_from(int band) const {
    int n = 0;
    for (int j = band; j < s_.k(); ++j)
      if (band_count_[j] == 0) ++n;
    return n;
  }

  bool band_block_ok(int band) const {
    if (!options_.band_relabel_pruning || band == 0) return true;
    std::vector<int> prev;
    std::vector<int> cur;
    for (int x : chosen_) {
      if (s_.band(x) == band - 1) prev.push_back(s_.group_part(x));
      if (s_.band(x) == band) cur.push_back(s_.group_part(x));
    }
    // cur is a prefix of its final block; prune once it is already smaller.
    for (size_t i = 0; i < cur.size(); ++i) {
      if (i >= prev.size()) return false;
      if (cur[i] != prev[i]) return cur[i] > prev[i];
    }
    return true;
  }

  void descend(int next) {
    if (stop_) return;
    const int remaining = target_ - static_cast<int>(chosen_.size());
    if (remaining == 0) {
      ElementSet c(chosen_);
      if (options_.band_relabel_pruning && !is_band_canonical(s_, c)) return;
      const bool ok = options_.mode == EnumerationMode::kMinimal ? is_minimal_generating(s_, c, oracle_)
                                                                 : oracle_.generates(s_, c);
      if (ok) {
        ++yielded_;
        if (!callback_(c)) stop_ = true;
      }
      return;
    }
    for (int x = next; x < s_.size() && !stop_; ++x) {
      const int band = s_.band(x);
      bool gap = false;
      for (int j = 0; j < band; ++j)
        if (band_count_[j] == 0) gap = true;
      if (gap) return;  // later candidates sit in even higher bands
      const int need = uncovered_bands_from(band) - (band_count_[band] == 0 ? 1 : 0);
      if (need > remaining - 1) continue;
      chosen_.push_back(x);
      ++band_count_[band];
      bool prune = !band_block_ok(band);
      if (!prune && options_.mode == EnumerationMode::kMinimal &&
          static_cast<int>(chosen_.size()) < target_ && oracle_.generates(s_, ElementSet(chosen_)))
        prune = true;  // every extension contains a generating proper subset
      if (!prune) descend(x + 1);
      --band_count_[band];
      chosen_.pop_back();
    }
  }

  const RightGroupTable& s_;
  const EnumerationOptions& options_;
  const std::function<bool(const ElementSet&)>& callback_;
  GenerationOracle oracle_;
  std::vector<int> band_count_;
  std::vector<int> chosen_;
  int target_ = 0;
  std::int64_t yielded_ = 0;
  bool stop_ = false;
};

}  // namespace

EnumerationSummary for_each_generating_set(const RightGroupTable& s, const EnumerationOptions& options,
                                           const std::function<bool(const ElementSet&)>& callback) {
  GeneratingSetWalker walker(s, options, callback);
  return walker.run();
}

std::vector<ElementSet> enumerate_generating_sets(const RightGroupTable& s, const EnumerationOptions& options,
                                                  EnumerationSummary* summary) {
  std::vector<ElementSet> out;
  auto result = for_each_generating_set(s, options, [&](const ElementSet& c) {
    out.push_back(c);
    return true;
  });
  if (summary) *summary = result;
  return out;
}

CayleyDigraph left_group_cayley(int k, const GroupTable& g, const ElementSet& c) {
  if (k < 1) throw Error("left group needs k >= 1");
  check_connection(g.order(), c);
  const int m = g.order();
  CayleyDigraph d;
  d.vertex_count = k * m;
  std::vector<int> conn;
  for (int i = 0; i < k; ++i)
    for (int x : c) conn.push_back(i * m + x);
  d.connection = ElementSet(conn);
  for (int v = 0; v < k * m; ++v)
    d.vertex_names.push_back("(l" + std::to_string(v / m + 1) + "," + g.name(v % m) + ")");
  for (int x : d.connection) d.label_names.push_back(d.vertex_names[x]);
  for (int v = 0; v < k * m; ++v) {
    const int band = v / m;
    const int gv = v % m;
    for (size_t i = 0; i < d.connection.size(); ++i) {
      const int gx = d.connection[i] % m;
      d.arcs.push_back({v, band * m + g.mul(gv, gx), static_cast<int>(i)});
    }
  }
  return d;
}

bool has_triangle(const SimpleGraph& g) {
  for (const auto& e : g.edges()) {
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    size_t i = 0;
    size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i; else ++j;
    }
  }
  return false;
}

}  // namespace rgp
