#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgplanar/algebra.hpp"
#include "rgplanar/cayley.hpp"
#include "rgplanar/graph.hpp"

namespace rgp {

/// One deletion/contraction step. Vertices are named by host indices: after
/// contracting {u,v} the merged vertex keeps the smaller index, so steps
/// always refer to the surviving representative.
struct MinorStep {
  enum class Kind { kDeleteEdge, kContractEdge, kDeleteVertex };
  Kind kind = Kind::kDeleteEdge;
  int u = 0;
  int v = 0;  // unused for kDeleteVertex
  bool operator==(const MinorStep&) const = default;
};

struct MinorTrace {
  SimpleGraph host;
  std::vector<MinorStep> steps;
  SimpleGraph result;  // survivors relabelled 0.. in increasing host index
  std::vector<int> merge_map;  // host vertex -> result vertex, -1 when deleted
};

/// Replays the steps. Throws Error when a step names a vertex or edge that
/// is no longer present.
MinorTrace apply_trace(const SimpleGraph& host, const std::vector<MinorStep>& steps);
bool verify_trace(const MinorTrace& t);

/// Incremental trace construction addressed by host vertex indices.
class TraceBuilder {
 public:
  explicit TraceBuilder(const SimpleGraph& host);
  /// Current representative of a host vertex, or -1 if deleted.
  int representative(int host_vertex) const;
  bool has_edge(int host_a, int host_b) const;
  void delete_edge(int host_a, int host_b);
  void contract(int host_a, int host_b);
  void delete_vertex(int host_vertex);
  MinorTrace finish() const;

 private:
  friend MinorTrace apply_trace(const SimpleGraph&, const std::vector<MinorStep>&);
  void apply(const MinorStep& step);

  SimpleGraph host_;
  std::vector<int> parent_;
  std::vector<bool> alive_;
  std::vector<std::vector<int>> adj_;  // sorted, over live representatives
  std::vector<MinorStep> steps_;
};

/// VF2-style matcher with colour refinement. Throws CapExceeded when the
/// search exceeds `node_budget` nodes or a graph exceeds `vertex_cap`.
bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b, std::int64_t node_budget = 50'000'000,
                      int vertex_cap = 4096);
/// Same search, returning a bijection a -> b when one exists.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                                                 std::int64_t node_budget = 50'000'000, int vertex_cap = 4096);

struct BabaiResult {
  MinorTrace trace;
  ElementSet group_connection;     // C' in G
  std::vector<int> group_label;    // result vertex -> group element
  bool matches_group_cayley = false;  // result equals Cay(G, C') under group_label
  bool isomorphic = false;            // checked by graph_isomorphic as well
};

/// Contracts the G-translates of a lifted spanning tree of the band quotient.
/// Requires a generating C (equivalently a strongly connected digraph).
BabaiResult babai_contract(const RightGroupTable& s, const ElementSet& c);

struct FactorPrecondition {
  bool band_alternative = false;        // g^-1 h g = h^{+-1} on the candidate's band
  bool complement_alternative = false;  // same on the elements outside that band
  bool complement_empty = false;        // the second alternative then holds vacuously
};

/// Candidate is an index into S that must belong to C.
FactorPrecondition factor_precondition_detail(const RightGroupTable& s, const ElementSet& c, int candidate);
bool check_factor_precondition(const RightGroupTable& s, const ElementSet& c, int candidate);

struct FactorResult {
  MinorTrace trace;
  bool conjugated = false;  // result labelled by g^-1 pi_G(C) g rather than pi_G(C)
  bool isomorphic = false;  // against the underlying Cay(G, pi_G(C))
};

/// Delete the cross-band arcs not labelled by the candidate's group part,
/// contract the candidate's cross-band arcs into its band, then remove the
/// surplus edges left when an element sits in several bands. Throws Error
/// when the precondition fails.
FactorResult factor_minor(const RightGroupTable& s, const ElementSet& c, int candidate);

struct CoxeterDiagnosis {
  bool all_involutions = false;
  bool is_coxeter = false;
  bool undetermined = false;  // coset enumeration hit its cap
  std::vector<std::vector<int>> orders;          // m_ij from product orders
  std::vector<std::pair<int, int>> dynkin_edges;  // positions into gens with m_ij >= 3
  bool is_tree = false;       // diagram has no cycle
  bool is_connected = false;
  std::int64_t presentation_order = -1;  // order of the Coxeter group on m_ij, when enumerated
};

/// Compares |G| with the order of the abstract Coxeter group defined by the
/// measured m_ij (Todd-Coxeter enumeration).
CoxeterDiagnosis coxeter_diagnose(const GroupTable& g, const ElementSet& gens, std::int64_t coset_cap = 200000);

enum class SearchStatus { kFound, kNone, kExceeded };

struct MinorSearch {
  SearchStatus status = SearchStatus::kNone;
  std::optional<MinorTrace> trace;
  std::vector<int> branch_of;  // host vertex -> pattern vertex or -1
  std::int64_t nodes = 0;
};

inline constexpr int kMinorHostCap = 24;

/// Exhaustive branch-set search for `pattern` as a minor of `host`.
MinorSearch minor_contains(const SimpleGraph& host, const SimpleGraph& pattern, std::int64_t node_budget,
                           int host_cap = kMinorHostCap);

/// Builds the trace for given branch sets (host vertex -> pattern vertex or
/// -1). Returns nullopt when a set is disconnected or a pattern edge is missing.
std::optional<MinorTrace> trace_from_branch_sets(const SimpleGraph& host, const SimpleGraph& pattern,
                                                 const std::vector<int>& branch_of);

}  // namespace rgp
