#include "rgplanar/characterize.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

#include "rgplanar/cayley.hpp"
#include "rgplanar/errors.hpp"

namespace rgp {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPlanar: return "planar";
    case Verdict::kNonPlanar: return "non_planar";
    case Verdict::kCapExceeded: return "cap_exceeded";
  }
  return "?";
}

const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::kProjection: return "projection";
    case Rejection::kEdgeBound: return "edge_bound";
    case Rejection::kKuratowski: return "kuratowski";
  }
  return "?";
}

SizeBound derive_size_bound(int m, int k) {
  SizeBound out;
  out.vertex_count = static_cast<std::int64_t>(m) * k;
  out.euler_limit = euler_bound(out.vertex_count, false);
  std::ostringstream why;
  why << "|V| = " << out.vertex_count << ", planar edge limit " << out.euler_limit
      << "; minimal lower bound per |C| (identity copies first, c_a <= k):";
  for (int s = 1; s <= m * k; ++s) {
    // The bound only sees c_e and the total elsewhere; spread the rest so
    // that every c_a stays at most k.
    std::vector<int> mult(m, 0);
    int left = s;
    mult[0] = std::min(left, k);
    left -= mult[0];
    for (int a = 1; a < m && left > 0; ++a) {
      mult[a] = std::min(left, k);
      left -= mult[a];
    }
    // Slot 0 stands in for the identity.
    const Rational lb = safe_edge_lower_bound(m, k, mult, 0);
    out.lower_bounds.emplace_back(s, lb);
    why << " " << s << ":" << lb;
    if (lb > Rational(out.euler_limit)) break;
    out.max_size = s;
  }
  why << "; |C|max = " << out.max_size;
  out.derivation = why.str();
  return out;
}

namespace {

bool prefix_block_ok(const RightGroupTable& s, const std::vector<int>& chosen, int band) {
  if (band == 0) return true;
  std::vector<int> prev;
  std::vector<int> cur;
  for (int x : chosen) {
    if (s.band(x) == band - 1) prev.push_back(s.group_part(x));
    if (s.band(x) == band) cur.push_back(s.group_part(x));
  }
  for (size_t i = 0; i < cur.size(); ++i) {
    if (i >= prev.size()) return false;
    if (cur[i] != prev[i]) return cur[i] > prev[i];
  }
  return true;
}

class CandidateSearch {
 public:
  CandidateSearch(const RightGroupTable& s, PlanarityVerdict& out)
      : s_(s), out_(out), oracle_(s.group()), band_count_(s.k(), 0) {}

  void run() {
    if (out_.bound.max_size >= s_.k()) descend(0);
    if (found_) return;
    out_.verdict = exceeded_ ? Verdict::kCapExceeded : Verdict::kNonPlanar;
  }

 private:
  void record(const ElementSet& c, Rejection why, bool prefix) {
    if (out_.log.size() < out_.caps.log_limit) out_.log.push_back({c, why, prefix});
  }

  // Rejection reason when the graph of c cannot be planar.
  std::optional<Rejection> reject_graph(const SimpleGraph& g) const {
    if (g.edge_count() > euler_bound(g.vertex_count(), !has_triangle(g))) return Rejection::kEdgeBound;
    return std::nullopt;
  }

  void evaluate(const ElementSet& c) {
    ++out_.tested;
    if (!generates_right_group(s_, c)) {
      ++out_.rejected_projection;
      record(c, Rejection::kProjection, false);
      return;
    }
    const SimpleGraph g = underlying_graph(s_, c);
    if (reject_graph(g)) {
      ++out_.rejected_edge_bound;
      record(c, Rejection::kEdgeBound, false);
      return;
    }
    auto result = test_planarity(g);
    if (!result.planar) {
      ++out_.rejected_kuratowski;
      record(c, Rejection::kKuratowski, false);
      return;
    }
    found_ = true;
    out_.verdict = Verdict::kPlanar;
    out_.connection = c;
    out_.embedding = std::move(result.embedding);
  }

  bool prune_prefix(const ElementSet& p) {
    const SimpleGraph g = underlying_graph(s_, p);
    Rejection why;
    if (reject_graph(g))
      why = Rejection::kEdgeBound;
    else if (!is_planar(g))
      why = Rejection::kKuratowski;
    else
      return false;
    ++out_.pruned_prefixes;
    record(p, why, true);
    return true;
  }

  void descend(int next) {
    const int limit = out_.bound.max_size;
    const int remaining = limit - static_cast<int>(chosen_.size());
    for (int x = next; x < s_.size() && !found_ && !exceeded_; ++x) {
      const int band = s_.band(x);
      for (int j = 0; j < band; ++j)
        if (band_count_[j] == 0) return;  // band-major order: nothing later fills band j
      int uncovered = 0;
      for (int j = band + 1; j < s_.k(); ++j)
        if (band_count_[j] == 0) ++uncovered;
      if (uncovered > remaining - 1) continue;
      chosen_.push_back(x);
      ++band_count_[band];
      if (!out_.caps.band_relabel_pruning || prefix_block_ok(s_, chosen_, band)) visit();
      --band_count_[band];
      chosen_.pop_back();
    }
  }

  void visit() {
    if (++out_.nodes > out_.caps.node_budget) {
      exceeded_ = true;
      return;
    }
    const ElementSet p(chosen_);
    if (oracle_.generates(s_, p)) {
      // Extensions are not minimal; p itself is a candidate when minimal.
      if (is_minimal_generating(s_, p, oracle_) &&
          (!out_.caps.band_relabel_pruning || is_band_canonical(s_, p)))
        evaluate(p);
      return;
    }
    if (static_cast<int>(chosen_.size()) >= out_.bound.max_size) return;
    if (out_.caps.prefix_pruning && chosen_.size() >= 2 && prune_prefix(p)) return;
    descend(chosen_.back() + 1);
  }

  const RightGroupTable& s_;
  PlanarityVerdict& out_;
  GenerationOracle oracle_;
  std::vector<int> band_count_;
  std::vector<int> chosen_;
  bool found_ = false;
  bool exceeded_ = false;
};

bool isomorphic_to(const GroupTable& g, const GroupTable& h) {
  return g.order() == h.order() && group_isomorphic(g, h);
}

bool is_cyclic(const GroupTable& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool is_dihedral(const GroupTable& g) {
  const int m = g.order();
  return m >= 4 && m % 2 == 0 && isomorphic_to(g, group_dihedral(m / 2));
}

bool is_polyhedral(const GroupTable& g) {
  const int m = g.order();
  return (m == 12 && isomorphic_to(g, group_alternating(4))) || (m == 24 && isomorphic_to(g, group_symmetric(4))) ||
         (m == 60 && isomorphic_to(g, group_alternating(5)));
}

// Z2 x H with H cyclic, dihedral or polyhedral.
bool is_z2_extension(const GroupTable& g) {
  const int m = g.order();
  if (m % 2 != 0 || m < 4) return false;
  const GroupTable z2 = group_cyclic(2);
  const int h = m / 2;
  if (isomorphic_to(g, direct_product(z2, group_cyclic(h)))) return true;
  if (h >= 4 && h % 2 == 0 && isomorphic_to(g, direct_product(z2, group_dihedral(h / 2)))) return true;
  if (h == 12 && isomorphic_to(g, direct_product(z2, group_alternating(4)))) return true;
  if (h == 24 && isomorphic_to(g, direct_product(z2, group_symmetric(4)))) return true;
  if (h == 60 && isomorphic_to(g, direct_product(z2, group_alternating(5)))) return true;
  return false;
}

ElementSet group_parts(const RightGroupTable& s, const ElementSet& c) {
  std::vector<int> parts;
  for (int x : c) parts.push_back(s.group_part(x));
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return ElementSet(parts);
}

}  // namespace

PlanarityVerdict decide_right_group_planarity(const GroupTable& g, int k, const DecisionCaps& caps) {
  if (k < 1) throw Error("k must be at least 1");
  if (static_cast<std::int64_t>(g.order()) * k > caps.subject_cap)
    throw CapExceeded("|G| * k = " + std::to_string(g.order() * k) + " exceeds the subject cap " +
                      std::to_string(caps.subject_cap));
  PlanarityVerdict out;
  out.group_spec = g.label();
  out.k = k;
  out.caps = caps;
  out.bound = derive_size_bound(g.order(), k);
  if (caps.max_size_override > 0) out.bound.max_size = std::min(out.bound.max_size, caps.max_size_override);
  const RightGroupTable s = right_group(g, k);
  CandidateSearch search(s, out);
  search.run();
  return out;
}

bool verify_certificate(const GroupTable& g, const PlanarityVerdict& v) {
  if (v.verdict != Verdict::kPlanar || !v.connection || !v.embedding) return false;
  const RightGroupTable s = right_group(g, v.k);
  if (!generates_right_group(s, *v.connection)) return false;
  if (!(v.embedding->graph == underlying_graph(s, *v.connection))) return false;
  return verify_embedding(*v.embedding);
}

bool characterization_predicts_planar(const GroupTable& g, int k) {
  if (k < 1) throw Error("k must be at least 1");
  const bool base = g.order() == 1 || is_cyclic(g) || is_dihedral(g) || is_polyhedral(g);
  if (k == 1) return base || is_z2_extension(g);
  if (g.order() == 1) return k <= 4;
  return base && k <= 3;
}

CharacterizationReport verify_characterization(const std::vector<std::pair<std::string, int>>& subjects,
                                               const DecisionCaps& caps) {
  CharacterizationReport report;
  for (const auto& [spec, k] : subjects) {
    const GroupTable g = parse_group_spec(spec);
    CharacterizationRow row;
    row.group_spec = spec;
    row.k = k;
    row.verdict = decide_right_group_planarity(g, k, caps);
    row.predicted_planar = characterization_predicts_planar(g, k);
    if (row.verdict.verdict == Verdict::kCapExceeded) {
      ++report.cap_exceeded;
      row.agrees = false;
    } else {
      const bool planar = row.verdict.verdict == Verdict::kPlanar;
      row.agrees = planar == row.predicted_planar && (!planar || verify_certificate(g, row.verdict));
    }
    if (!row.agrees) ++report.disagreements;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<std::pair<std::string, int>> characterization_subjects(int cap) {
  std::vector<std::string> groups{"E"};
  for (int n = 2; n <= 8; ++n) groups.push_back("Z" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) groups.push_back("D" + std::to_string(n));
  for (const char* s : {"A4", "S4", "A5", "Z2xZ4", "Z2xD2", "Z2xA4"}) groups.emplace_back(s);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& spec : groups) {
    const int m = parse_group_spec(spec).order();
    for (int k = 2; k <= 4; ++k)
      if (m * k <= cap) out.emplace_back(spec, k);
  }
  return out;
}

ProjectionCheck check_projection_theorem(const RightGroupTable& s, const ElementSet& c, std::int64_t minor_budget) {
  ProjectionCheck out;
  if (!generates_right_group(s, c)) return out;
  const SimpleGraph host = underlying_graph(s, c);
  if (!is_planar(host)) return out;
  const ElementSet pi = group_parts(s, c);
  const SimpleGraph pattern = underlying_graph(s.group(), pi);
  out.group_graph_planar = is_planar(pattern);
  if (!out.group_graph_planar) {
    out.status = ProjectionStatus::kCounterexample;
    return out;
  }
  if (s.k() == 1) {
    out.trace = TraceBuilder(host).finish();
    out.route = "identity";
    out.status = out.trace->result == pattern ? ProjectionStatus::kOk : ProjectionStatus::kCounterexample;
    return out;
  }
  for (int x : c) {
    if (!check_factor_precondition(s, c, x)) continue;
    auto f = factor_minor(s, c, x);
    if (verify_trace(f.trace) && f.isomorphic) {
      out.status = ProjectionStatus::kOk;
      out.route = "factor_minor";
      out.candidate = x;
      out.conjugated = f.conjugated;
      out.trace = std::move(f.trace);
      return out;
    }
  }
  if (host.vertex_count() > kMinorHostCap) {
    out.status = ProjectionStatus::kExceeded;
    return out;
  }
  auto search = minor_contains(host, pattern, minor_budget);
  out.route = "minor_search";
  if (search.status == SearchStatus::kFound && search.trace && verify_trace(*search.trace)) {
    out.status = ProjectionStatus::kOk;
    out.trace = std::move(search.trace);
  } else if (search.status == SearchStatus::kNone) {
    out.status = ProjectionStatus::kCounterexample;
  } else {
    out.status = ProjectionStatus::kExceeded;
  }
  return out;
}

std::vector<std::string> conjecture_groups(int max_order) {
  // One spec per isomorphism type the grammar reaches.
  static const std::vector<std::string> all{
      "E",      "Z2",      "Z3",  "Z4",     "Z2xZ2",  "Z5",     "Z6",       "D3",        "Z7",
      "Z8",     "Z2xZ4",   "Z2xZ2xZ2",      "D4",     "Z9",     "Z3xZ3",    "Z10",       "D5",
      "Z11",    "Z12",     "Z2xZ6",         "D6",     "A4",     "Z13",      "Z14",       "D7",
      "Z15",    "Z16",     "Z2xZ8",         "Z4xZ4",  "Z2xZ2xZ4",           "Z2xZ2xZ2xZ2", "D8",
      "Z2xD4"};
  std::vector<std::string> out;
  for (const auto& spec : all)
    if (parse_group_spec(spec).order() <= max_order) out.push_back(spec);
  return out;
}

ConjectureReport check_conjecture(int size_cap, std::int64_t minor_budget) {
  ConjectureReport report;
  report.size_cap = size_cap;
  report.groups = conjecture_groups(size_cap);
  for (const auto& spec : report.groups) {
    const GroupTable g = parse_group_spec(spec);
    for (int k = 1; g.order() * k <= size_cap; ++k) {
      const RightGroupTable s = right_group(g, k);
      EnumerationOptions options;
      options.max_size = s.size();
      options.mode = EnumerationMode::kMinimal;
      options.band_relabel_pruning = true;
      for_each_generating_set(s, options, [&](const ElementSet& c) {
        ConjectureCase item{spec, k, c, ConjectureStatus::kVerified, ""};
        const SimpleGraph host = underlying_graph(s, c);
        const SimpleGraph pattern = underlying_graph(g, group_parts(s, c));
        bool done = false;
        if (k == 1) {
          item.route = "identity";
          done = host == pattern;
          if (done) ++report.by_identity;
        }
        for (int x : c) {
          if (done) break;
          if (!check_factor_precondition(s, c, x)) continue;
          auto f = factor_minor(s, c, x);
          if (verify_trace(f.trace) && f.isomorphic) {
            item.route = "factor_minor";
            done = true;
            ++report.by_factor;
          }
        }
        if (!done) {
          item.route = "minor_search";
          auto search = minor_contains(host, pattern, minor_budget);
          if (search.status == SearchStatus::kFound && search.trace && verify_trace(*search.trace)) {
            done = true;
            ++report.by_search;
          } else {
            item.status = search.status == SearchStatus::kNone ? ConjectureStatus::kCounterexample
                                                                : ConjectureStatus::kUnresolved;
          }
        }
        if (done) {
          ++report.verified;
        } else {
          if (item.status == ConjectureStatus::kCounterexample)
            ++report.counterexamples;
          else
            ++report.unresolved;
          report.failures.push_back(std::move(item));
        }
        return true;
      });
    }
  }
  return report;
}

SubsetScan scan_all_subsets(const RightGroupTable& s, double witness_sample, std::uint64_t seed) {
  const int n = s.size();
  if (n > 24) throw CapExceeded("subset scan is limited to 24 elements");
  SubsetScan out;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(witness_sample);
  std::vector<int> members;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    ++out.subsets;
    members.clear();
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1ULL) members.push_back(i);
    const ElementSet c(members);
    if (c.empty() || !generates_right_group(s, c)) {
      ++out.rejected_projection;
      continue;
    }
    ++out.generating;
    const SimpleGraph g = underlying_graph(s, c);
    if (safe_edge_lower_bound(s, c) > Rational(g.edge_count())) ++out.safe_bound_violations;
    const bool sampled = pick(rng);
    const bool over = g.edge_count() > euler_bound(g.vertex_count(), !has_triangle(g));
    if (over) ++out.rejected_edge_bound;
    if (over && !sampled) continue;
    const auto result = test_planarity(g);
    if (result.planar) {
      ++out.planar;
      continue;
    }
    if (!over) ++out.rejected_kuratowski;
    if (sampled) {
      ++out.witnesses_checked;
      if (result.witness && verify_kuratowski(g, *result.witness)) ++out.witnesses_verified;
    }
  }
  return out;
}

}  // namespace rgp
