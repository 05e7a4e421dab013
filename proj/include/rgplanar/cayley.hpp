#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "rgplanar/algebra.hpp"
#include "rgplanar/graph.hpp"

namespace rgp {

using Rational = boost::rational<std::int64_t>;

struct Arc {
  int source = 0;
  int target = 0;
  int label = 0;  // position of the connection element in `connection`
  bool operator==(const Arc&) const = default;
};

/// Directed right Cayley graph: one arc (s, s*c) per vertex s and connection
/// element c, loops included.
struct CayleyDigraph {
  int vertex_count = 0;
  std::vector<Arc> arcs;
  ElementSet connection;
  std::vector<std::string> vertex_names;
  std::vector<std::string> label_names;
};

CayleyDigraph cayley_digraph(const RightGroupTable& s, const ElementSet& c);
CayleyDigraph cayley_digraph(const GroupTable& g, const ElementSet& c);

SimpleGraph underlying_graph(const CayleyDigraph& d);
/// Builds the underlying graph directly, without materialising arcs.
SimpleGraph underlying_graph(const RightGroupTable& s, const ElementSet& c);
SimpleGraph underlying_graph(const GroupTable& g, const ElementSet& c);

bool is_strongly_connected(const CayleyDigraph& d);

/// The closed edge-count expression m((sum_{a in pi_G(C)} c_a k - c_{a^-1}/2) - c_e/2),
/// evaluated verbatim. It agrees with the true underlying edge count when
/// every c_a <= 1; with repeated band copies it can overshoot.
Rational edge_count_formula(int m, int k, const std::vector<int>& multiplicities,
                            const std::vector<int>& inverse_map, int identity);
Rational edge_count_formula(const RightGroupTable& s, const ElementSet& c);

/// The companion lower bound (m/2)((2k-1) sum c_a - c_e), also verbatim and
/// carrying the same validity caveat.
Rational printed_edge_lower_bound(int m, int k, const std::vector<int>& multiplicities, int identity);

/// (m/2)(k * sum_{a != e} c_a + (k-1) c_e). Each connection element emits
/// |S| arcs, only e-elements emit loops (m each), and an undirected edge
/// absorbs at most two arcs, so this never exceeds the exact count.
Rational safe_edge_lower_bound(int m, int k, const std::vector<int>& multiplicities, int identity);
Rational safe_edge_lower_bound(const RightGroupTable& s, const ElementSet& c);

/// Memoised "does this subset of G generate G" oracle keyed by bitmask.
class GenerationOracle {
 public:
  explicit GenerationOracle(const GroupTable& g);
  bool generates(const std::vector<int>& elements);
  bool generates(const RightGroupTable& s, const ElementSet& c);

 private:
  const GroupTable& group_;
  std::unordered_map<std::string, bool> cache_;
};

/// True when C is the lexicographically least member of its orbit under
/// relabelling the bands (Sym(R_k) acting on band indices).
bool is_band_canonical(const RightGroupTable& s, const ElementSet& c);

/// C generates S and no single-element removal still generates.
bool is_minimal_generating(const RightGroupTable& s, const ElementSet& c, GenerationOracle& oracle);

enum class EnumerationMode { kAll, kMinimal };

struct EnumerationOptions {
  int max_size = 0;
  EnumerationMode mode = EnumerationMode::kMinimal;
  bool band_relabel_pruning = false;
};

struct EnumerationSummary {
  std::int64_t yielded = 0;
  bool size_below_band_count = false;  // max_size < k: nothing can generate
  bool stopped_early = false;
};

/// Streams generating sets ordered by size, then lexicographically by sorted
/// indices. Return false from the callback to stop.
EnumerationSummary for_each_generating_set(const RightGroupTable& s, const EnumerationOptions& options,
                                           const std::function<bool(const ElementSet&)>& callback);

std::vector<ElementSet> enumerate_generating_sets(const RightGroupTable& s, const EnumerationOptions& options,
                                                  EnumerationSummary* summary = nullptr);

/// Right Cayley graph of the left group L_k x G on L_k x C. Vertex (l_i, g)
/// has index i * |G| + g.
CayleyDigraph left_group_cayley(int k, const GroupTable& g, const ElementSet& c);

bool has_triangle(const SimpleGraph& g);

}  // namespace rgp
