#include "rgplanar/io.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <regex>
#include <sstream>

#include "rgplanar/errors.hpp"

namespace rgp {

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string rational_text(const ExactRational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

ExactRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(boost::multiprecision::cpp_int(text));
  return ExactRational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                       boost::multiprecision::cpp_int(text.substr(slash + 1)));
}

// Sign of the cross product (b - a) x (c - a).
int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  const ExactRational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// c lies on the closed segment ab, given a, b, c collinear.
bool within(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

bool segments_touch(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c, const ExactPoint& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  return (o1 == 0 && within(a, b, c)) || (o2 == 0 && within(a, b, d)) || (o3 == 0 && within(c, d, a)) ||
         (o4 == 0 && within(c, d, b));
}

constexpr std::array<const char*, 8> kPalette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

bool same_point(const ExactPoint& a, const ExactPoint& b) { return a.x == b.x && a.y == b.y; }

}  // namespace

std::string to_dot(const CayleyDigraph& d) {
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (int v = 0; v < d.vertex_count; ++v)
    os << "  " << v << " [label=\"" << escape_dot(d.vertex_names.at(v)) << "\"];\n";
  for (const auto& a : d.arcs)
    os << "  " << a.source << " -> " << a.target << " [label=\"c=" << a.label << "\", color=\""
       << kPalette[a.label % kPalette.size()] << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_graphml(const CayleyDigraph& d) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
     << "  <key id=\"c\" for=\"edge\" attr.name=\"c\" attr.type=\"int\"/>\n"
     << "  <graph id=\"cayley\" edgedefault=\"directed\">\n";
  for (int v = 0; v < d.vertex_count; ++v)
    os << "    <node id=\"n" << v << "\"><data key=\"name\">" << escape_xml(d.vertex_names.at(v))
       << "</data></node>\n";
  for (size_t i = 0; i < d.arcs.size(); ++i)
    os << "    <edge id=\"e" << i << "\" source=\"n" << d.arcs[i].source << "\" target=\"n" << d.arcs[i].target
       << "\"><data key=\"c\">" << d.arcs[i].label << "</data></edge>\n";
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

Json digraph_to_json(const CayleyDigraph& d) {
  Json arcs = Json::array();
  for (const auto& a : d.arcs) arcs.push_back({{"src", a.source}, {"dst", a.target}, {"label", a.label}});
  return Json{{"vertex_count", d.vertex_count},
              {"vertices", d.vertex_names},
              {"connection", d.connection.members()},
              {"connection_names", d.label_names},
              {"arcs", arcs}};
}

CayleyDigraph digraph_from_json(const Json& j) {
  try {
    CayleyDigraph d;
    d.vertex_count = j.at("vertex_count").get<int>();
    d.vertex_names = j.at("vertices").get<std::vector<std::string>>();
    d.connection = ElementSet(j.at("connection").get<std::vector<int>>());
    d.label_names = j.at("connection_names").get<std::vector<std::string>>();
    if (static_cast<int>(d.vertex_names.size()) != d.vertex_count) throw Error("vertex name count mismatch");
    for (const auto& a : j.at("arcs")) {
      Arc arc{a.at("src").get<int>(), a.at("dst").get<int>(), a.at("label").get<int>()};
      if (arc.source < 0 || arc.source >= d.vertex_count || arc.target < 0 || arc.target >= d.vertex_count ||
          arc.label < 0 || arc.label >= static_cast<int>(d.connection.size()))
        throw Error("arc out of range");
      d.arcs.push_back(arc);
    }
    return d;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed digraph JSON: ") + e.what());
  }
}

Json embedding_to_json(const PlanarEmbedding& e) {
  Json edges = Json::array();
  for (const auto& edge : e.graph.edges()) edges.push_back({edge.u, edge.v});
  return Json{{"vertex_count", e.graph.vertex_count()},
              {"edges", edges},
              {"rotation", e.rotation.order},
              {"faces", e.faces}};
}

Json witness_to_json(const KuratowskiWitness& w) {
  return Json{{"kind", w.kind == KuratowskiKind::kK5 ? "K5" : "K33"},
              {"branch_vertices", w.branch_vertices},
              {"paths", w.paths}};
}

Json trace_to_json(const MinorTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    switch (s.kind) {
      case MinorStep::Kind::kDeleteEdge: steps.push_back({{"op", "delete_edge"}, {"u", s.u}, {"v", s.v}}); break;
      case MinorStep::Kind::kContractEdge: steps.push_back({{"op", "contract"}, {"u", s.u}, {"v", s.v}}); break;
      case MinorStep::Kind::kDeleteVertex: steps.push_back({{"op", "delete_vertex"}, {"u", s.u}}); break;
    }
  }
  Json result_edges = Json::array();
  for (const auto& e : t.result.edges()) result_edges.push_back({e.u, e.v});
  return Json{{"host_vertices", t.host.vertex_count()},
              {"steps", steps},
              {"result_vertices", t.result.vertex_count()},
              {"result_edges", result_edges},
              {"merge_map", t.merge_map}};
}

Json verdict_to_json(const PlanarityVerdict& v, const RightGroupTable& s) {
  auto names = [&](const ElementSet& c) {
    std::vector<std::string> out;
    for (int x : c) out.push_back(s.name(x));
    return out;
  };
  Json log = Json::array();
  for (const auto& rec : v.log)
    log.push_back({{"connection", names(rec.connection)}, {"reason", to_string(rec.reason)}, {"prefix", rec.prefix}});
  Json bounds = Json::array();
  for (const auto& [size, lb] : v.bound.lower_bounds) {
    std::ostringstream os;
    os << lb;
    bounds.push_back({{"size", size}, {"lower_bound", os.str()}});
  }
  Json out{{"subject", {{"group", v.group_spec}, {"k", v.k}, {"order", s.size()}}},
           {"verdict", to_string(v.verdict)},
           {"caps",
            {{"subject_cap", v.caps.subject_cap},
             {"node_budget", v.caps.node_budget},
             {"band_relabel_pruning", v.caps.band_relabel_pruning},
             {"prefix_pruning", v.caps.prefix_pruning},
             {"log_limit", v.caps.log_limit}}},
           {"size_bound",
            {{"max_size", v.bound.max_size},
             {"vertex_count", v.bound.vertex_count},
             {"euler_limit", v.bound.euler_limit},
             {"lower_bounds", bounds},
             {"derivation", v.bound.derivation}}},
           {"nodes", v.nodes},
           {"tested", v.tested},
           {"rejected_by",
            {{"projection", v.rejected_projection},
             {"edge_bound", v.rejected_edge_bound},
             {"kuratowski", v.rejected_kuratowski}}},
           {"pruned_prefixes", v.pruned_prefixes},
           {"log", log},
           {"log_truncated", v.log.size() >= v.caps.log_limit}};
  if (v.connection && v.embedding)
    out["certificate"] = {{"connection", names(*v.connection)}, {"embedding", embedding_to_json(*v.embedding)}};
  return out;
}

Json catalog_to_json(const std::vector<CatalogEntry>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"group", r.group_spec},
                   {"generators", r.generators},
                   {"vertices", r.expected_vertices},
                   {"edges", r.expected_edges},
                   {"solid", r.solid},
                   {"family_n", r.family_n},
                   {"planar", r.planar}});
  return out;
}

std::optional<std::vector<ExactPoint>> tutte_layout(const PlanarEmbedding& e) {
  const SimpleGraph& g = e.graph;
  const int n = g.vertex_count();
  if (!is_three_connected(g) || e.faces.empty()) return std::nullopt;
  size_t outer = 0;
  for (size_t i = 1; i < e.faces.size(); ++i)
    if (e.faces[i].size() > e.faces[outer].size()) outer = i;
  std::vector<ExactPoint> pos(n);
  std::vector<int> interior_index(n, -1);
  std::vector<bool> on_outer(n, false);
  const auto& face = e.faces[outer];
  for (size_t i = 0; i < face.size(); ++i) {
    on_outer[face[i]] = true;
    pos[face[i]] = {ExactRational(static_cast<long>(i)), ExactRational(static_cast<long>(i * i))};
  }
  std::vector<int> interior;
  for (int v = 0; v < n; ++v)
    if (!on_outer[v]) {
      interior_index[v] = static_cast<int>(interior.size());
      interior.push_back(v);
    }
  const size_t q = interior.size();
  // Laplacian rows with two right-hand sides (x and y).
  std::vector<std::vector<ExactRational>> a(q, std::vector<ExactRational>(q + 2));
  for (size_t r = 0; r < q; ++r) {
    const int v = interior[r];
    a[r][r] = g.degree(v);
    for (int w : g.neighbors(v)) {
      if (on_outer[w]) {
        a[r][q] += pos[w].x;
        a[r][q + 1] += pos[w].y;
      } else {
        a[r][interior_index[w]] -= 1;
      }
    }
  }
  // The matrix is diagonally dominant, so pivots stay nonzero in order.
  for (size_t col = 0; col < q; ++col) {
    const ExactRational pivot = a[col][col];
    if (pivot == 0) throw Error("singular barycentric system");
    for (size_t r = col + 1; r < q; ++r) {
      if (a[r][col] == 0) continue;
      const ExactRational f = a[r][col] / pivot;
      for (size_t c = col; c < q + 2; ++c)
        if (a[col][c] != 0) a[r][c] -= f * a[col][c];
    }
  }
  for (size_t r = q; r-- > 0;) {
    ExactRational x = a[r][q];
    ExactRational y = a[r][q + 1];
    for (size_t c = r + 1; c < q; ++c) {
      if (a[r][c] == 0) continue;
      x -= a[r][c] * pos[interior[c]].x;
      y -= a[r][c] * pos[interior[c]].y;
    }
    pos[interior[r]] = {x / a[r][r], y / a[r][r]};
  }
  return pos;
}

bool straight_line_crossing_free(const SimpleGraph& g, const std::vector<ExactPoint>& pos) {
  const int n = g.vertex_count();
  if (static_cast<int>(pos.size()) != n) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (same_point(pos[u], pos[v])) return false;
  const auto& edges = g.edges();
  for (const auto& e : edges)
    for (int w = 0; w < n; ++w)
      if (w != e.u && w != e.v && orientation(pos[e.u], pos[e.v], pos[w]) == 0 && within(pos[e.u], pos[e.v], pos[w]))
        return false;
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const bool shared = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
      if (shared) {
        // Two edges from a common endpoint overlap only when collinear and
        // pointing the same way; the vertex-on-edge pass catches that.
        continue;
      }
      if (segments_touch(pos[e.u], pos[e.v], pos[f.u], pos[f.v])) return false;
    }
  return true;
}

std::vector<ExactPoint> exact_points(const std::vector<std::pair<double, double>>& pos) {
  std::vector<ExactPoint> out;
  for (const auto& [x, y] : pos) out.push_back({ExactRational(x), ExactRational(y)});
  return out;
}

std::string to_svg(const SimpleGraph& g, const std::vector<ExactPoint>& pos, const std::vector<std::string>& names) {
  const int n = g.vertex_count();
  if (static_cast<int>(pos.size()) != n) throw Error("one position per vertex needed");
  std::vector<double> xs(n), ys(n);
  for (int v = 0; v < n; ++v) {
    xs[v] = static_cast<double>(pos[v].x);
    ys[v] = static_cast<double>(pos[v].y);
  }
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (n > 0) {
    min_x = *std::min_element(xs.begin(), xs.end());
    max_x = *std::max_element(xs.begin(), xs.end());
    min_y = *std::min_element(ys.begin(), ys.end());
    max_y = *std::max_element(ys.begin(), ys.end());
  }
  const double size = 800;
  const double margin = 40;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  auto sx = [&](double x) { return margin + (x - min_x) / span * (size - 2 * margin); };
  auto sy = [&](double y) { return size - margin - (y - min_y) / span * (size - 2 * margin); };
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  for (const auto& e : g.edges())
    os << "  <line data-u=\"" << e.u << "\" data-v=\"" << e.v << "\" x1=\"" << sx(xs[e.u]) << "\" y1=\""
       << sy(ys[e.u]) << "\" x2=\"" << sx(xs[e.v]) << "\" y2=\"" << sy(ys[e.v])
       << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  for (int v = 0; v < n; ++v) {
    os << "  <circle data-id=\"" << v << "\" data-x=\"" << rational_text(pos[v].x) << "\" data-y=\""
       << rational_text(pos[v].y) << "\" cx=\"" << sx(xs[v]) << "\" cy=\"" << sy(ys[v])
       << "\" r=\"4\" fill=\"#c33\">";
    if (v < static_cast<int>(names.size())) os << "<title>" << escape_xml(names[v]) << "</title>";
    os << "</circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

ParsedSvg parse_svg(const std::string& svg) {
  ParsedSvg out;
  const std::regex circle(R"re(<circle data-id="(\d+)" data-x="([-0-9/]+)" data-y="([-0-9/]+)")re");
  const std::regex line(R"re(<line data-u="(\d+)" data-v="(\d+)")re");
  std::map<int, ExactPoint> points;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it)
    points[std::stoi((*it)[1])] = {parse_rational((*it)[2]), parse_rational((*it)[3])};
  for (const auto& [id, p] : points) {
    if (id != static_cast<int>(out.points.size())) throw Error("svg vertex ids are not contiguous");
    out.points.push_back(p);
  }
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it)
    out.edges.push_back(make_edge(std::stoi((*it)[1]), std::stoi((*it)[2])));
  return out;
}

std::string face_walk_dump(const PlanarEmbedding& e, const std::vector<std::string>& names) {
  auto name = [&](int v) { return v < static_cast<int>(names.size()) ? names[v] : std::to_string(v); };
  std::ostringstream os;
  os << "rotation\n";
  for (int v = 0; v < e.graph.vertex_count(); ++v) {
    os << "  " << name(v) << ":";
    for (int w : e.rotation.order[v]) os << " " << name(w);
    os << "\n";
  }
  os << "faces " << e.faces.size() << "\n";
  for (const auto& f : e.faces) {
    os << " ";
    for (int v : f) os << " " << name(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace rgp
