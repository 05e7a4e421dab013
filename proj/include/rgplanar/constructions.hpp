#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rgplanar/algebra.hpp"
#include "rgplanar/cayley.hpp"
#include "rgplanar/planarity.hpp"

namespace rgp {

/// One row of the table of planar groups with their planar generating sets.
struct CatalogEntry {
  std::string group_spec;               // parse_group_spec input
  std::vector<std::string> generators;  // element names
  int expected_vertices = 0;
  int expected_edges = 0;
  std::string solid;
  int family_n = 0;  // polygon or cycle parameter for family rows, 0 otherwise
  /// False for a row whose listed counts hold but whose Cayley graph is not
  /// planar; such a row is kept as listed and followed by a planar repair.
  bool planar = true;
};

inline constexpr int kDefaultFamilyCap = 8;

/// Fixed rows plus the families Z_n, Z2 x Z_n, D_n and Z2 x D_n for
/// parameters up to `family_cap`.
std::vector<CatalogEntry> maschke_catalog(int family_cap = kDefaultFamilyCap);

/// Resolves an entry's generator names in its group.
ElementSet catalog_generators(const GroupTable& g, const CatalogEntry& entry);

/// A right-group Cayley graph together with a planar rotation system.
struct BandConstruction {
  RightGroupTable group;
  ElementSet connection;
  CayleyDigraph digraph;
  PlanarEmbedding embedding;
  /// Straight-line coordinates when the construction comes from a drawing.
  std::vector<std::pair<double, double>> positions;
};

enum class CycleFamily { kCyclic, kDihedral };

/// Concentric-ring constructions for Z_n x R_k with {(1,r1),(0,r2),(0,r3)}
/// and D_n x R_k with {(<13>,r1),(<12>,r2),(e,r3)}, truncated to the first k
/// bands (k = 2 or 3).
BandConstruction build_cycle_band_embedding(CycleFamily family, int n, int k);

/// Rotation at x lists (a, b, b^-1) counter-clockwise: +1; (a, b^-1, b): -1.
/// Throws Error when x does not have exactly these three distinct neighbors.
int local_rotation_type(const GroupTable& g, const RotationSystem& rot, int x, int a, int b);

/// Around every a-edge the four b-arcs alternate in/out, i.e. both ends of
/// each a-edge carry the same local rotation type. Throws Error unless a is
/// an involution, b is not, and {a, b} generates G.
bool alternation_check(const GroupTable& g, const PlanarEmbedding& e, int a, int b);

enum class BlowUpVariant { kR3, kR2Prime, kR2DoublePrime };

/// Builds Cay(G x R_k, D) for D = {(a,r1),(b,r2),(e,r3)}, {(a,r1),(b,r2)} or
/// {(e,r1),(a,r2),(b,r2)} from a plane embedding of Cay(G,{a,b}), replacing
/// each a-edge by a hexagon. An involutive b is accepted (the dihedral ring).
/// Throws Error when the types do not alternate.
BandConstruction blow_up(const GroupTable& g, const PlanarEmbedding& base, int a, int b, BlowUpVariant variant);

RotationSystem mirror(const RotationSystem& rot);

}  // namespace rgp
