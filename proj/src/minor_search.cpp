#include <algorithm>
#include <cstdint>
#include <deque>

#include "rgplanar/errors.hpp"
#include "rgplanar/minors.hpp"

namespace rgp {

std::optional<MinorTrace> trace_from_branch_sets(const SimpleGraph& host, const SimpleGraph& pattern,
                                                 const std::vector<int>& branch_of) {
  const int n = host.vertex_count();
  const int np = pattern.vertex_count();
  if (static_cast<int>(branch_of.size()) != n) return std::nullopt;
  std::vector<std::vector<int>> sets(np);
  for (int v = 0; v < n; ++v) {
    if (branch_of[v] >= np) return std::nullopt;
    if (branch_of[v] >= 0) sets[branch_of[v]].push_back(v);
  }
  TraceBuilder builder(host);
  for (int v = 0; v < n; ++v)
    if (branch_of[v] < 0) builder.delete_vertex(v);
  std::vector<bool> linked(static_cast<size_t>(np) * np, false);
  for (const auto& e : host.edges()) {
    const int p = branch_of[e.u];
    const int q = branch_of[e.v];
    if (p < 0 || q < 0 || p == q) continue;
    if (pattern.has_edge(p, q))
      linked[static_cast<size_t>(p) * np + q] = linked[static_cast<size_t>(q) * np + p] = true;
    else
      builder.delete_edge(e.u, e.v);
  }
  for (const auto& e : pattern.edges())
    if (!linked[static_cast<size_t>(e.u) * np + e.v]) return std::nullopt;
  for (int p = 0; p < np; ++p) {
    if (sets[p].empty()) return std::nullopt;
    std::vector<bool> seen(n, false);
    std::deque<int> queue{sets[p][0]};
    seen[sets[p][0]] = true;
    size_t reached = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : host.neighbors(x))
        if (!seen[y] && branch_of[y] == p) {
          seen[y] = true;
          ++reached;
          builder.contract(x, y);
          queue.push_back(y);
        }
    }
    if (reached != sets[p].size()) return std::nullopt;
  }
  auto trace = builder.finish();
  std::vector<Edge> relabelled;
  std::vector<int> pattern_of(trace.result.vertex_count(), -1);
  for (int p = 0; p < np; ++p) pattern_of[trace.merge_map[sets[p][0]]] = p;
  for (const auto& e : trace.result.edges()) relabelled.push_back(make_edge(pattern_of[e.u], pattern_of[e.v]));
  if (!(SimpleGraph(np, relabelled) == pattern)) return std::nullopt;
  return trace;
}

namespace {

class BranchSetSearch {
 public:
  BranchSetSearch(const SimpleGraph& host, const SimpleGraph& pattern, std::int64_t budget)
      : host_(host), pattern_(pattern), budget_(budget), n_(host.vertex_count()), np_(pattern.vertex_count()),
        assign_(n_, -1), allowed_(n_, (np_ == 64 ? ~0ULL : ((1ULL << np_) - 1))), size_(np_, 0) {
    for (int p = 0; p < np_; ++p) pattern_order_.push_back(p);
    std::stable_sort(pattern_order_.begin(), pattern_order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    for (int v = 0; v < n_; ++v) host_order_.push_back(v);
    std::stable_sort(host_order_.begin(), host_order_.end(),
                     [&](int a, int b) { return host.degree(a) > host.degree(b); });
  }

  SearchStatus run() {
    const bool found = search();
    if (exceeded_) return SearchStatus::kExceeded;
    return found ? SearchStatus::kFound : SearchStatus::kNone;
  }
  const std::vector<int>& assignment() const { return assign_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  bool allowed(int v, int p) const { return (allowed_[v] >> p) & 1ULL; }

  bool touches(int p, int q) const {
    for (int v = 0; v < n_; ++v)
      if (assign_[v] == p)
        for (int w : host_.neighbors(v))
          if (assign_[w] == q) return true;
    return false;
  }

  // Some path from B_p to B_q through free vertices that may join p or q.
  bool can_link(int p, int q) const {
    std::vector<bool> seen(n_, false);
    std::deque<int> queue;
    for (int v = 0; v < n_; ++v)
      if (assign_[v] == p) {
        seen[v] = true;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : host_.neighbors(x)) {
        if (seen[y]) continue;
        if (assign_[y] == q) return true;
        if (assign_[y] < 0 && (allowed(y, p) || allowed(y, q))) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  bool feasible() const {
    int free_slots = 0;
    for (int v = 0; v < n_; ++v)
      if (assign_[v] < 0 && allowed_[v] != 0) ++free_slots;
    int unseeded = 0;
    for (int p = 0; p < np_; ++p) {
      if (size_[p] > 0) continue;
      ++unseeded;
      bool any = false;
      for (int v = 0; v < n_ && !any; ++v) any = assign_[v] < 0 && allowed(v, p);
      if (!any) return false;
    }
    if (unseeded > free_slots) return false;
    for (const auto& e : pattern_.edges())
      if (size_[e.u] > 0 && size_[e.v] > 0 && !touches(e.u, e.v) && !can_link(e.u, e.v)) return false;
    return true;
  }

  void place(int v, int p) {
    assign_[v] = p;
    ++size_[p];
  }
  void unplace(int v) {
    --size_[assign_[v]];
    assign_[v] = -1;
  }

  bool search() {
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    if (!feasible()) return false;

    for (int p : pattern_order_) {
      if (size_[p] > 0) continue;
      std::vector<int> forbidden;
      bool found = false;
      for (int v : host_order_) {
        if (assign_[v] >= 0 || !allowed(v, p)) continue;
        place(v, p);
        found = search();
        if (found || exceeded_) break;
        unplace(v);
        allowed_[v] &= ~(1ULL << p);
        forbidden.push_back(v);
      }
      for (int v : forbidden) allowed_[v] |= 1ULL << p;
      return found;
    }

    // All branch sets seeded: grow one towards an unsatisfied pattern edge.
    for (const auto& e : pattern_.edges()) {
      if (touches(e.u, e.v)) continue;
      int grow = -1;
      int grow_into = -1;
      for (int side = 0; side < 2 && grow < 0; ++side) {
        const int p = side == 0 ? e.u : e.v;
        const int q = side == 0 ? e.v : e.u;
        int fallback = -1;
        for (int v = 0; v < n_ && grow < 0; ++v) {
          if (assign_[v] != p) continue;
          for (int w : host_.neighbors(v)) {
            if (assign_[w] >= 0 || !allowed(w, p)) continue;
            bool next_to_q = false;
            for (int x : host_.neighbors(w)) next_to_q = next_to_q || assign_[x] == q;
            if (next_to_q) {
              grow = w;
              break;
            }
            if (fallback < 0) fallback = w;
          }
        }
        if (grow < 0) grow = fallback;
        if (grow >= 0) grow_into = p;
      }
      if (grow < 0) return false;
      place(grow, grow_into);
      if (search()) return true;
      unplace(grow);
      if (exceeded_) return false;
      allowed_[grow] &= ~(1ULL << grow_into);
      const bool found = search();
      allowed_[grow] |= 1ULL << grow_into;
      return found;
    }
    return true;
  }

  const SimpleGraph& host_;
  const SimpleGraph& pattern_;
  std::int64_t budget_;
  int n_;
  int np_;
  std::vector<int> assign_;
  std::vector<std::uint64_t> allowed_;
  std::vector<int> size_;
  std::vector<int> pattern_order_;
  std::vector<int> host_order_;
  std::int64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

MinorSearch minor_contains(const SimpleGraph& host, const SimpleGraph& pattern, std::int64_t node_budget,
                           int host_cap) {
  if (host.vertex_count() > host_cap) throw CapExceeded("host exceeds the minor search size cap");
  if (pattern.vertex_count() > 64) throw CapExceeded("pattern exceeds 64 vertices");
  MinorSearch out;
  if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count()) return out;
  if (pattern.vertex_count() == 0) {
    out.status = SearchStatus::kFound;
    out.branch_of.assign(host.vertex_count(), -1);
    out.trace = trace_from_branch_sets(host, pattern, out.branch_of);
    return out;
  }
  BranchSetSearch search(host, pattern, node_budget);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SearchStatus::kFound) {
    out.branch_of = search.assignment();
    out.trace = trace_from_branch_sets(host, pattern, out.branch_of);
    if (!out.trace) throw Error("minor search produced inconsistent branch sets");
  }
  return out;
}

}  // namespace rgp
