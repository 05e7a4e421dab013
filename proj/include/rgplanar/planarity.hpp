#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgplanar/graph.hpp"

namespace rgp {

/// Cyclic neighbor order per vertex. In a simple graph an edge-end at v is
/// identified by the neighbor it leads to.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

/// A closed walk listed by the tails of its darts.
using Face = std::vector<int>;

struct PlanarEmbedding {
  SimpleGraph graph;
  RotationSystem rotation;
  std::vector<Face> faces;
};

enum class KuratowskiKind { kK5, kK33 };

/// Subdivision of K5 or K3,3. For K3,3 the first three branch vertices form
/// one side. Each path runs between two branch vertices and lists every
/// vertex on it, endpoints included.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::kK5;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;
  std::optional<KuratowskiWitness> witness;
};

/// True when every vertex lists exactly its neighbors, once each.
bool is_rotation_of(const SimpleGraph& g, const RotationSystem& rot);

/// Face orbits: from dart (u,v) the next dart is (v, w) with w the successor
/// of u in the rotation at v. Isolated vertices contribute no walk.
std::vector<Face> trace_faces(const SimpleGraph& g, const RotationSystem& rot);

PlanarityResult test_planarity(const SimpleGraph& g);
bool is_planar(const SimpleGraph& g);

/// Re-traces faces and checks Euler's relation with genus 0. Throws Error on
/// a disconnected graph.
bool verify_embedding(const PlanarEmbedding& e);
/// Componentwise variant accepting disconnected graphs.
bool verify_embedding_componentwise(const PlanarEmbedding& e);

bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w);

/// Throws Error on a disconnected graph or an invalid rotation.
int genus_of_embedding(const SimpleGraph& g, const RotationSystem& rot);

struct GenusSearch {
  bool exceeded = false;       // rotation count above budget; fields below unset
  int min_genus = -1;
  int max_genus = -1;
  std::int64_t rotations = 0;  // number of rotation systems examined
  std::optional<RotationSystem> best;
};

/// Exhaustive enumeration of the prod (deg(v)-1)! rotation systems.
GenusSearch min_genus_bruteforce(const SimpleGraph& g, std::int64_t budget);

/// Largest edge count a planar simple graph on v vertices can have.
std::int64_t euler_bound(std::int64_t v, bool triangle_free);

}  // namespace rgp
