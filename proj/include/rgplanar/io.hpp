#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "rgplanar/cayley.hpp"
#include "rgplanar/characterize.hpp"
#include "rgplanar/constructions.hpp"
#include "rgplanar/minors.hpp"
#include "rgplanar/planarity.hpp"

namespace rgp {

using Json = nlohmann::json;
using ExactRational = boost::multiprecision::cpp_rational;

struct ExactPoint {
  ExactRational x;
  ExactRational y;
};

/// One arc record per arc, loops included, labelled "c=<index>".
std::string to_dot(const CayleyDigraph& d);
std::string to_graphml(const CayleyDigraph& d);
Json digraph_to_json(const CayleyDigraph& d);
/// Throws Error on malformed documents.
CayleyDigraph digraph_from_json(const Json& j);

Json embedding_to_json(const PlanarEmbedding& e);
Json witness_to_json(const KuratowskiWitness& w);
Json trace_to_json(const MinorTrace& t);
Json verdict_to_json(const PlanarityVerdict& v, const RightGroupTable& s);
Json catalog_to_json(const std::vector<CatalogEntry>& rows);

/// Barycentric layout of a 3-connected plane graph: the longest face goes
/// on the parabola y = x^2 (convex position), every other vertex at the
/// average of its neighbours, solved exactly. nullopt when the graph is not
/// 3-connected.
std::optional<std::vector<ExactPoint>> tutte_layout(const PlanarEmbedding& e);

/// Exact check that no two edges meet away from a shared endpoint, no
/// vertex lies on another edge and no two vertices coincide.
bool straight_line_crossing_free(const SimpleGraph& g, const std::vector<ExactPoint>& pos);

std::vector<ExactPoint> exact_points(const std::vector<std::pair<double, double>>& pos);

/// Exact coordinates travel in data-x / data-y attributes as "p/q".
std::string to_svg(const SimpleGraph& g, const std::vector<ExactPoint>& pos, const std::vector<std::string>& names);

/// Plain-text listing of the rotation and the face walks.
std::string face_walk_dump(const PlanarEmbedding& e, const std::vector<std::string>& names);

/// Reads back the data-x / data-y circle attributes and line endpoints.
struct ParsedSvg {
  std::vector<ExactPoint> points;
  std::vector<Edge> edges;
};
ParsedSvg parse_svg(const std::string& svg);

}  // namespace rgp
