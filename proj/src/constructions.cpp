#include "rgplanar/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>

#include "rgplanar/errors.hpp"

namespace rgp {

namespace {

CatalogEntry row(std::string spec, std::vector<std::string> gens, int v, int e, std::string solid, int n = 0) {
  return CatalogEntry{std::move(spec), std::move(gens), v, e, std::move(solid), n};
}

std::string cycle_word(int n) {
  std::string s = "(";
  for (int i = 1; i <= n; ++i) s += std::to_string(i);
  return s + ")";
}

BandConstruction assemble(const GroupTable& g, int k, const std::vector<int>& connection_members,
                          RotationSystem rotation) {
  auto group = std::make_shared<const GroupTable>(g);
  RightGroupTable s(group, k);
  ElementSet c(connection_members);
  BandConstruction out{s, c, cayley_digraph(s, c), {}, {}};
  out.embedding.graph = underlying_graph(out.digraph);
  out.embedding.rotation = std::move(rotation);
  if (!is_rotation_of(out.embedding.graph, out.embedding.rotation))
    throw Error("construction produced a rotation that does not match the graph");
  out.embedding.faces = trace_faces(out.embedding.graph, out.embedding.rotation);
  return out;
}

// Restricts a rotation to the kept vertices, renumbering them in order.
RotationSystem restrict_rotation(const RotationSystem& rot, const std::vector<bool>& keep) {
  std::vector<int> index(rot.order.size(), -1);
  int next = 0;
  for (size_t v = 0; v < rot.order.size(); ++v)
    if (keep[v]) index[v] = next++;
  RotationSystem out;
  out.order.resize(next);
  for (size_t v = 0; v < rot.order.size(); ++v) {
    if (!keep[v]) continue;
    for (int w : rot.order[v])
      if (keep[w]) out.order[index[v]].push_back(index[w]);
  }
  return out;
}

RotationSystem rotation_from_positions(const SimpleGraph& g, const std::vector<std::pair<double, double>>& pos) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& order = rot.order[v];
    order = g.neighbors(v);
    auto angle = [&](int w) { return std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return rot;
}

void drop_repeats(std::vector<int>& order) {
  std::vector<int> out;
  for (int w : order)
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  order = std::move(out);
}

BandConstruction cyclic_rings(int n, int k) {
  GroupTable g = group_cyclic(n);
  const int m = n;
  std::vector<int> members;
  for (int band = 0; band < k; ++band) members.push_back(band * m + (band == 0 ? 1 % n : 0));
  const int size = m * k;
  std::vector<std::pair<double, double>> pos(size);
  for (int x = 0; x < m; ++x) {
    const double theta = 2 * std::numbers::pi * x / m;
    const double half = theta + std::numbers::pi / m;
    pos[x] = {std::cos(theta), std::sin(theta)};
    if (k >= 2) pos[m + x] = {2 * std::cos(half), 2 * std::sin(half)};
    if (k >= 3) pos[2 * m + x] = {3 * std::cos(half), 3 * std::sin(half)};
  }
  auto group = std::make_shared<const GroupTable>(g);
  RightGroupTable s(group, k);
  ElementSet c(members);
  BandConstruction out{s, c, cayley_digraph(s, c), {}, {}};
  out.embedding.graph = underlying_graph(out.digraph);
  if (n >= 3) {
    out.embedding.rotation = rotation_from_positions(out.embedding.graph, pos);
    out.positions = pos;
  } else {
    // Too few ring positions for the drawing; the rotation space is tiny.
    auto search = min_genus_bruteforce(out.embedding.graph, 1'000'000);
    if (search.exceeded || search.min_genus != 0 || !search.best)
      throw Error("no plane rotation found for a small cyclic ring");
    out.embedding.rotation = *search.best;
  }
  out.embedding.faces = trace_faces(out.embedding.graph, out.embedding.rotation);
  return out;
}

}  // namespace

std::vector<CatalogEntry> maschke_catalog(int family_cap) {
  std::vector<CatalogEntry> rows;
  for (int n = 3; n <= family_cap; ++n)
    rows.push_back(row("Z" + std::to_string(n), {"1"}, n, n, std::to_string(n) + "-gon", n));
  rows.push_back(row("Z2xZ2", {"(1,0)", "(0,1)"}, 4, 4, "2-prism"));
  rows.push_back(row("Z2xZ4", {"(1,0)", "(0,1)"}, 8, 12, "cube"));
  for (int n = 3; n <= family_cap; ++n)
    rows.push_back(row("Z2xZ" + std::to_string(n), {"(1,0)", "(0,1)"}, 2 * n, 3 * n,
                       std::to_string(n) + "-prism", n));
  rows.push_back(row("D3", {"(123)", "(12)"}, 6, 9, "3-prism"));
  rows.push_back(row("D3", {"(123)", "(12)", "(23)"}, 6, 12, "octahedron"));
  rows.push_back(row("D4", {"(1234)", "(13)"}, 8, 12, "cube"));
  for (int n = 2; n <= family_cap; ++n)
    rows.push_back(row("D" + std::to_string(n), {"<12>", "<13>"}, 2 * n, 2 * n,
                       std::to_string(2 * n) + "-gon", n));
  for (int n = 3; n <= family_cap; ++n)
    rows.push_back(row("D" + std::to_string(n), {cycle_word(n), "<12>"}, 2 * n, 3 * n,
                       std::to_string(n) + "-prism", n));
  // Z2 x (symmetries of the n-gon): 4n vertices, 6n edges.
  for (int n = 2; n <= family_cap; ++n)
    rows.push_back(row("Z2xD" + std::to_string(n), {"(1,e)", "(0,<12>)", "(0,<13>)"}, 4 * n, 6 * n,
                       std::to_string(2 * n) + "-prism", n));
  rows.push_back(row("A4", {"(123)", "(12)(34)"}, 12, 18, "truncated tetrahedron"));
  rows.push_back(row("A4", {"(123)", "(234)"}, 12, 24, "cuboctahedron"));
  rows.push_back(row("A4", {"(123)", "(234)", "(13)(24)"}, 12, 30, "icosahedron"));
  rows.push_back(row("Z2xA4", {"(0,(123))", "(1,(12)(34))"}, 24, 36, "truncated cube"));
  rows.push_back(row("S4", {"(123)", "(34)"}, 24, 36, "truncated cube"));
  rows.push_back(row("S4", {"(12)", "(23)", "(34)"}, 24, 36, "truncated octahedron"));
  rows.push_back(row("S4", {"(12)", "(1234)"}, 24, 36, "truncated octahedron"));
  rows.push_back(row("S4", {"(123)", "(1234)"}, 24, 48, "rhombicuboctahedron"));
  rows.push_back(row("S4", {"(1234)", "(123)", "(34)"}, 24, 60, "snub cuboctahedron"));
  // As listed, (1,(12))(0,(23)) has order 6: the product orders are (6,3,2),
  // an affine triangle group quotient, and the graph only embeds on the torus.
  rows.push_back(row("Z2xS4", {"(1,(12))", "(0,(23))", "(0,(34))"}, 48, 72, "truncated cuboctahedron"));
  rows.back().planar = false;
  // Three reflections of the cube with product orders (4,3,2).
  rows.push_back(row("Z2xS4", {"(1,(12))", "(1,(23))", "(1,(12)(34))"}, 48, 72, "truncated cuboctahedron"));
  rows.push_back(row("A5", {"(124)", "(23)(45)"}, 60, 90, "truncated dodecahedron"));
  rows.push_back(row("A5", {"(12345)", "(23)(45)"}, 60, 90, "truncated icosahedron"));
  rows.push_back(row("A5", {"(12345)", "(124)"}, 60, 120, "rhombicosidodecahedron"));
  rows.push_back(row("A5", {"(12345)", "(124)", "(23)(45)"}, 60, 150, "snub icosidodecahedron"));
  rows.push_back(row("Z2xA5", {"(1,(12)(35))", "(1,(24)(35))", "(1,(23)(45))"}, 120, 180,
                     "truncated icosidodecahedron"));
  return rows;
}

ElementSet catalog_generators(const GroupTable& g, const CatalogEntry& entry) {
  std::vector<int> members;
  for (const auto& name : entry.generators) members.push_back(g.at(name));
  return ElementSet(members);
}

BandConstruction build_cycle_band_embedding(CycleFamily family, int n, int k) {
  if (k != 2 && k != 3) throw Error("ring constructions need k = 2 or 3");
  if (family == CycleFamily::kCyclic) {
    if (n < 1) throw Error("Z_n needs n >= 1");
    return cyclic_rings(n, k);
  }
  if (n < 2) throw Error("D_n needs n >= 2");
  GroupTable g = group_dihedral(n);
  const int a = g.at("<13>");
  const int b = g.at("<12>");
  auto base = test_planarity(underlying_graph(g, ElementSet({a, b})));
  if (!base.embedding) throw Error("Cay(D_n, {<12>,<13>}) should be a cycle");
  return blow_up(g, *base.embedding, a, b, k == 3 ? BlowUpVariant::kR3 : BlowUpVariant::kR2Prime);
}

int local_rotation_type(const GroupTable& g, const RotationSystem& rot, int x, int a, int b) {
  const int xa = g.mul(x, a);
  const int xb = g.mul(x, b);
  const int xbi = g.mul(x, g.inverse(b));
  const auto& order = rot.order.at(x);
  if (order.size() != 3 || xa == xb || xb == xbi || xa == xbi)
    throw Error("local rotation type needs three distinct a/b neighbors");
  auto pos = [&](int w) {
    auto it = std::find(order.begin(), order.end(), w);
    if (it == order.end()) throw Error("rotation misses an a/b neighbor");
    return static_cast<int>(it - order.begin());
  };
  const int pa = pos(xa);
  if (pos(xb) == (pa + 1) % 3) return 1;
  if (pos(xbi) == (pa + 1) % 3) return -1;
  throw Error("unreachable rotation type");
}

bool alternation_check(const GroupTable& g, const PlanarEmbedding& e, int a, int b) {
  if (a == g.identity() || g.mul(a, a) != g.identity()) throw Error("a must be an involution");
  if (g.mul(b, b) == g.identity()) throw Error("b must not be an involution");
  if (!generates_group(g, {a, b})) throw Error("{a, b} must generate the group");
  if (e.graph.vertex_count() != g.order()) throw Error("embedding is not on the group's vertices");
  for (int x = 0; x < g.order(); ++x)
    if (local_rotation_type(g, e.rotation, x, a, b) != local_rotation_type(g, e.rotation, g.mul(x, a), a, b))
      return false;
  return true;
}

RotationSystem mirror(const RotationSystem& rot) {
  RotationSystem out = rot;
  for (auto& order : out.order) std::reverse(order.begin(), order.end());
  return out;
}

BandConstruction blow_up(const GroupTable& g, const PlanarEmbedding& base, int a, int b, BlowUpVariant variant) {
  const int m = g.order();
  if (a == g.identity() || g.mul(a, a) != g.identity()) throw Error("a must be an involution");
  if (b == g.identity() || b == a) throw Error("b must differ from e and a");
  if (!generates_group(g, {a, b})) throw Error("{a, b} must generate the group");
  if (base.graph.vertex_count() != m || !is_rotation_of(base.graph, base.rotation))
    throw Error("base embedding does not match Cay(G, {a, b})");
  const bool b_involution = g.mul(b, b) == g.identity();

  std::vector<int> type(m, 1);
  if (!b_involution) {
    if (!alternation_check(g, base, a, b)) throw Error("b-arcs do not alternate around every a-edge");
    for (int x = 0; x < m; ++x) type[x] = local_rotation_type(g, base.rotation, x, a, b);
  }

  auto vtx = [m](int x, int band) { return band * m + x; };  // band 0..2 for r1..r3
  // Counter-clockwise order along a gadget side.
  auto side = [&](int x) {
    return type[x] == 1 ? std::array<int, 3>{vtx(x, 0), vtx(x, 2), vtx(x, 1)}
                        : std::array<int, 3>{vtx(x, 1), vtx(x, 2), vtx(x, 0)};
  };

  if (variant == BlowUpVariant::kR2DoublePrime) {
    // Band 2 carries Cay(G,{a,b}); (x,r1) sits in the face corner at x
    // between the a-dart and the b-out-dart.
    const auto& rot = base.rotation.order;
    std::vector<std::vector<std::vector<int>>> after(m), before(m);
    for (int x = 0; x < m; ++x) {
      after[x].resize(rot[x].size());
      before[x].resize(rot[x].size());
    }
    auto pos = [&](int v, int w) {
      return static_cast<int>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
    };
    auto succ = [&](int v, int w) { return rot[v][(pos(v, w) + 1) % rot[v].size()]; };
    std::vector<std::array<int, 3>> ear_walk(m);
    for (int x = 0; x < m; ++x) {
      const int xa = g.mul(x, a);
      const int xb = g.mul(x, b);
      // The corner runs from u to w counter-clockwise at x.
      int u = xa, w = xb;
      if (succ(x, xa) != xb) std::swap(u, w);
      if (succ(x, u) != w) throw Error("a-dart and b-out-dart are not consecutive");
      const int ear = vtx(x, 0);
      ear_walk[x] = {u, x, w};
      after[x][pos(x, u)].push_back(ear);
      before[u][pos(u, x)].push_back(ear);  // walk t -> u -> x: ear hugs x
      after[w][pos(w, x)].push_back(ear);   // walk x -> w -> t: ear hugs x
    }
    auto build = [&](bool flip) {
      RotationSystem out;
      out.order.resize(2 * m);
      for (int x = 0; x < m; ++x) {
        auto& order = out.order[vtx(x, 1)];
        const int d = static_cast<int>(rot[x].size());
        for (int i = 0; i < d; ++i) {
          order.push_back(vtx(rot[x][i], 1));
          for (int ear : after[x][i]) order.push_back(ear);
          for (int ear : before[x][(i + 1) % d]) order.push_back(ear);
        }
        drop_repeats(order);
        const auto& [u, c, w] = ear_walk[x];
        out.order[vtx(x, 0)] = flip ? std::vector<int>{vtx(u, 1), vtx(c, 1), vtx(w, 1)}
                                    : std::vector<int>{vtx(u, 1), vtx(w, 1), vtx(c, 1)};
        drop_repeats(out.order[vtx(x, 0)]);
      }
      return out;
    };
    const std::vector<int> members{g.identity(), m + a, m + b};
    auto out = assemble(g, 2, members, build(false));
    if (!verify_embedding(out.embedding)) out = assemble(g, 2, members, build(true));
    return out;
  }

  // Hexagon gadget per a-edge {x, xa}, counter-clockwise.
  RotationSystem rot;
  rot.order.resize(3 * m);
  for (int x = 0; x < m; ++x) {
    const int y = g.mul(x, a);
    if (y < x) continue;
    std::array<int, 6> hex;
    if (type[x] == 1)
      hex = {vtx(x, 0), vtx(x, 2), vtx(x, 1), vtx(y, 0), vtx(y, 2), vtx(y, 1)};
    else
      hex = {vtx(y, 1), vtx(y, 2), vtx(y, 0), vtx(x, 1), vtx(x, 2), vtx(x, 0)};
    std::multimap<int, int> chords;
    const std::array<std::pair<int, int>, 3> chord_list{
        {{vtx(x, 0), vtx(y, 0)}, {vtx(x, 2), vtx(y, 0)}, {vtx(x, 0), vtx(y, 2)}}};
    for (const auto& [p, q] : chord_list) {
      chords.emplace(p, q);
      chords.emplace(q, p);
    }
    auto hpos = [&](int v) { return static_cast<int>(std::find(hex.begin(), hex.end(), v) - hex.begin()); };
    for (int i = 0; i < 6; ++i) {
      const int v = hex[i];
      auto& order = rot.order[v];
      order.push_back(hex[(i + 1) % 6]);
      std::vector<int> inner;
      auto [lo, hi] = chords.equal_range(v);
      for (auto it = lo; it != hi; ++it) inner.push_back(it->second);
      std::sort(inner.begin(), inner.end(),
                [&](int p, int q) { return (hpos(p) - i + 6) % 6 < (hpos(q) - i + 6) % 6; });
      order.insert(order.end(), inner.begin(), inner.end());
      order.push_back(hex[(i + 5) % 6]);
    }
  }
  // Exterior: every side vertex of x reaches X* = (xb, r2); (x, r2) also
  // receives the fan from the side of u = x b^-1.
  for (int x = 0; x < m; ++x) {
    const int star = vtx(g.mul(x, b), 1);
    const int u = g.mul(x, g.inverse(b));
    auto fan = side(u);
    std::reverse(fan.begin(), fan.end());
    rot.order[vtx(x, 0)].push_back(star);
    rot.order[vtx(x, 2)].push_back(star);
    auto& corner = rot.order[vtx(x, 1)];
    if (type[x] == 1) {
      corner.push_back(star);
      corner.insert(corner.end(), fan.begin(), fan.end());
    } else {
      corner.insert(corner.end(), fan.begin(), fan.end());
      corner.push_back(star);
    }
  }
  for (auto& order : rot.order) drop_repeats(order);

  std::vector<int> members{a, m + b, 2 * m + g.identity()};
  if (variant == BlowUpVariant::kR3) return assemble(g, 3, members, std::move(rot));
  std::vector<bool> keep(3 * m, true);
  for (int x = 0; x < m; ++x) keep[vtx(x, 2)] = false;
  members.pop_back();
  return assemble(g, 2, members, restrict_rotation(rot, keep));
}

}  // namespace rgp
