#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgplanar/algebra.hpp"
#include "rgplanar/minors.hpp"
#include "rgplanar/planarity.hpp"

namespace rgp {

inline constexpr int kDefaultSubjectCap = 100;

struct DecisionCaps {
  int subject_cap = kDefaultSubjectCap;     // |G| * k
  std::int64_t node_budget = 200'000'000;   // search nodes before giving up
  int max_size_override = 0;                // 0: use the derived bound
  bool band_relabel_pruning = true;
  /// Drop every extension of a subset whose own graph is already non-planar.
  bool prefix_pruning = true;
  size_t log_limit = 10'000;                // candidate records kept (counts stay exact)
};

/// Largest |C| a minimal generating set with a planar graph can have.
struct SizeBound {
  int max_size = 0;
  std::int64_t vertex_count = 0;
  std::int64_t euler_limit = 0;
  /// safe_edge_lower_bound minimised over multiplicities, for sizes 1..max_size+1.
  std::vector<std::pair<int, Rational>> lower_bounds;
  std::string derivation;
};

SizeBound derive_size_bound(int m, int k);

enum class Verdict { kPlanar, kNonPlanar, kCapExceeded };
enum class Rejection { kProjection, kEdgeBound, kKuratowski };

struct CandidateRecord {
  ElementSet connection;
  Rejection reason = Rejection::kKuratowski;
  /// A rejected proper subset: the record covers every extension of it.
  bool prefix = false;
};

struct PlanarityVerdict {
  std::string group_spec;
  int k = 0;
  Verdict verdict = Verdict::kNonPlanar;
  DecisionCaps caps;
  SizeBound bound;
  std::int64_t nodes = 0;
  std::int64_t tested = 0;  // complete minimal generating sets examined
  std::int64_t rejected_projection = 0;
  std::int64_t rejected_edge_bound = 0;
  std::int64_t rejected_kuratowski = 0;
  std::int64_t pruned_prefixes = 0;
  std::vector<CandidateRecord> log;
  std::optional<ElementSet> connection;
  std::optional<PlanarEmbedding> embedding;
};

const char* to_string(Verdict v);
const char* to_string(Rejection r);

/// Exhaustive certified search over minimal generating sets within the
/// derived size bound. Throws CapExceeded when |G| * k is above the cap; a
/// search that runs out of nodes reports kCapExceeded.
PlanarityVerdict decide_right_group_planarity(const GroupTable& g, int k, const DecisionCaps& caps = {});

/// Replays a planar certificate: C generates and the embedding verifies on
/// the underlying graph of Cay(G x R_k, C).
bool verify_certificate(const GroupTable& g, const PlanarityVerdict& v);

/// Planar right groups with k >= 2 are {e} x R_k for k <= 4 and G x R_k for
/// k <= 3 with G trivial, cyclic, dihedral, A4, S4 or A5. For k = 1 the
/// answer is the list of finite planar groups.
bool characterization_predicts_planar(const GroupTable& g, int k);

struct CharacterizationRow {
  std::string group_spec;
  int k = 0;
  PlanarityVerdict verdict;
  bool predicted_planar = false;
  bool agrees = false;
};

struct CharacterizationReport {
  std::vector<CharacterizationRow> rows;
  int disagreements = 0;
  int cap_exceeded = 0;
};

CharacterizationReport verify_characterization(const std::vector<std::pair<std::string, int>>& subjects,
                                               const DecisionCaps& caps = {});

/// Atoms E, Z_n (n <= 8), D_n (n <= 6), A4, S4, A5 and Z2 x H for
/// H in {Z4, D2, A4}, paired with 2 <= k <= 4 and |G| * k <= cap.
std::vector<std::pair<std::string, int>> characterization_subjects(int cap = kDefaultSubjectCap);

enum class ProjectionStatus { kOk, kCounterexample, kExceeded, kNotApplicable };

struct ProjectionCheck {
  ProjectionStatus status = ProjectionStatus::kNotApplicable;
  bool group_graph_planar = false;
  std::string route;  // "identity", "factor_minor" or "minor_search"
  int candidate = -1;
  bool conjugated = false;
  std::optional<MinorTrace> trace;
};

/// For generating C with planar underlying Cay(S,C): Cay(G, pi_G(C)) is
/// planar and a replayed minor of it. kNotApplicable when the precondition
/// fails; kExceeded when no factor candidate applies and the minor search
/// is over its caps.
ProjectionCheck check_projection_theorem(const RightGroupTable& s, const ElementSet& c,
                                         std::int64_t minor_budget = 5'000'000);

enum class ConjectureStatus { kVerified, kUnresolved, kCounterexample };

struct ConjectureCase {
  std::string group_spec;
  int k = 0;
  ElementSet connection;
  ConjectureStatus status = ConjectureStatus::kVerified;
  std::string route;
};

struct ConjectureReport {
  int size_cap = 0;
  std::vector<std::string> groups;
  std::int64_t verified = 0;
  std::int64_t unresolved = 0;
  std::int64_t counterexamples = 0;
  std::vector<ConjectureCase> failures;  // unresolved or counterexample cases
  std::int64_t by_identity = 0;
  std::int64_t by_factor = 0;
  std::int64_t by_search = 0;
};

/// Group specs of every order up to `max_order` that the grammar can build,
/// one per isomorphism type.
std::vector<std::string> conjecture_groups(int max_order);

/// For each right group with |S| <= size_cap and each minimal generating C:
/// is the underlying Cay(G, pi_G(C)) a minor of the underlying Cay(S, C)?
ConjectureReport check_conjecture(int size_cap, std::int64_t minor_budget = 5'000'000);

/// Every subset of a small right group: projection test, edge bound,
/// planarity. Kuratowski witnesses are re-verified on a sample.
struct SubsetScan {
  std::int64_t subsets = 0;
  std::int64_t generating = 0;
  std::int64_t rejected_projection = 0;
  std::int64_t rejected_edge_bound = 0;
  std::int64_t rejected_kuratowski = 0;
  std::int64_t planar = 0;
  std::int64_t witnesses_checked = 0;
  std::int64_t witnesses_verified = 0;
  std::int64_t safe_bound_violations = 0;  // safe_edge_lower_bound above the exact count
};

SubsetScan scan_all_subsets(const RightGroupTable& s, double witness_sample, std::uint64_t seed);

}  // namespace rgp
