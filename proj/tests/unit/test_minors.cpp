#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "rgplanar/minors.hpp"
#include "rgplanar/planarity.hpp"

using namespace rgp;

namespace {

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return SimpleGraph(g.vertex_count(), edges);
}

using Step = MinorStep::Kind;

}  // namespace

TEST_CASE("trace replay") {
  const auto k3 = apply_trace(complete_graph(4), {{Step::kContractEdge, 0, 1}});
  CHECK(k3.result == complete_graph(3));
  CHECK(k3.merge_map == std::vector<int>{0, 0, 1, 2});
  CHECK(verify_trace(k3));

  const auto k5e = apply_trace(complete_graph(5), {{Step::kDeleteEdge, 0, 1}});
  CHECK(k5e.result.edge_count() == 9);
  CHECK(test_planarity(k5e.result).planar);

  CHECK_THROWS_AS(apply_trace(complete_graph(4), {{Step::kContractEdge, 0, 1}, {Step::kDeleteEdge, 1, 2}}), Error);
  CHECK_THROWS_AS(apply_trace(cycle_graph(4), {{Step::kDeleteEdge, 0, 2}}), Error);

  auto tampered = k3;
  tampered.steps[0].v = 2;
  CHECK_FALSE(verify_trace(tampered));
}

TEST_CASE("graph isomorphism") {
  const auto k33 = complete_bipartite(3, 3);
  CHECK(graph_isomorphic(k33, relabel(k33, {5, 0, 3, 1, 4, 2})));
  CHECK_FALSE(graph_isomorphic(complete_graph(4), cycle_graph(4)));
  const auto d3 = group_dihedral(3);
  CHECK(graph_isomorphic(underlying_graph(d3, ElementSet{d3.at("(123)"), d3.at("(12)")}), prism_graph(3)));
  CHECK_FALSE(graph_isomorphic(prism_graph(4), petersen_graph()));
  CHECK_THROWS_AS(graph_isomorphic(cycle_graph(10), cycle_graph(10), 1000, 5), CapExceeded);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const auto a = oracle::random_graph(rng, n, 0.5);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = trial % 2 ? relabel(a, perm) : oracle::random_graph(rng, n, 0.5);
    const auto mapping = find_isomorphism(a, b);
    CHECK(mapping.has_value() == oracle::isomorphic_bruteforce(a, b));
    if (mapping) CHECK(relabel(a, *mapping) == b);
  }
}

TEST_CASE("babai contraction examples") {
  const auto z6 = group_cyclic(6);
  const auto k1 = right_group(z6, 1);
  const auto single = babai_contract(k1, ElementSet{1});
  CHECK(single.trace.steps.empty());
  CHECK(single.matches_group_cayley);
  CHECK(single.trace.result == underlying_graph(z6, ElementSet{1}));

  const auto z2r2 = right_group(group_cyclic(2), 2);
  const auto small = babai_contract(z2r2, ElementSet{z2r2.index(1, 0), z2r2.index(0, 1)});
  CHECK(small.matches_group_cayley);
  CHECK(small.isomorphic);
  CHECK(small.trace.result.vertex_count() == 2);
  CHECK(verify_trace(small.trace));

  const auto s = right_group(z6, 3);
  const auto ring = babai_contract(s, ElementSet{s.index(1, 0), s.index(0, 1), s.index(0, 2)});
  CHECK(ring.matches_group_cayley);
  CHECK(ring.isomorphic);
  CHECK(generates_group(z6, ring.group_connection.members()));
  CHECK(test_planarity(ring.trace.result).planar);
  CHECK_THROWS_AS(babai_contract(s, ElementSet{s.index(1, 0)}), Error);
}

TEST_CASE("babai contraction on sampled strongly connected right groups") {
  std::mt19937_64 rng(8);
  const std::vector<std::pair<const char*, int>> cases{{"Z2", 2}, {"Z3", 3}, {"Z2xZ2", 3}, {"D3", 3}, {"Z6", 3},
                                                      {"Z4", 4}, {"Z8", 2}, {"D4", 2}, {"Z9", 2}, {"E", 4}};
  int checked = 0;
  for (const auto& [spec, k] : cases) {
    const auto s = right_group(parse_group_spec(spec), k);
    REQUIRE(s.size() <= 18);
    std::uniform_int_distribution<int> element(0, s.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> members;
      for (int i = 0; i < k + 2; ++i) members.push_back(element(rng));
      const ElementSet c(members);
      if (!is_strongly_connected(cayley_digraph(s, c))) continue;
      const auto r = babai_contract(s, c);
      CHECK(r.matches_group_cayley);
      CHECK(r.isomorphic);
      CHECK(verify_trace(r.trace));
      if (s.group_order() > 1) CHECK(generates_group(s.group(), r.group_connection.members()));
      if (is_planar(underlying_graph(s, c))) CHECK(is_planar(r.trace.result));
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("factor precondition") {
  const auto s4 = group_symmetric(4);
  const auto s = right_group(s4, 2);
  const int a = s4.at("(1234)");
  const int b = s4.at("(123)");
  const ElementSet c{s.index(a, 0), s.index(b, 0), s.index(a, 1), s.index(b, 1)};
  // Conjugation moves (123) out of {(123)^{+-1}} for every candidate, but both
  // bands carry the same elements, so the complement alternative holds vacuously.
  for (int x : c) {
    const auto p = factor_precondition_detail(s, c, x);
    CHECK_FALSE(p.band_alternative);
    CHECK(p.complement_empty);
    CHECK(check_factor_precondition(s, c, x));
  }
  CHECK(s4.mul(s4.mul(s4.inverse(a), b), a) == s4.at("(124)"));
  CHECK(factor_minor(s, c, s.index(a, 0)).isomorphic);
  // Give the second band different elements so no alternative is vacuous.
  std::optional<ElementSet> strict;
  for (int x = 0; x < s4.order() && !strict; ++x)
    for (int y = x + 1; y < s4.order() && !strict; ++y) {
      const ElementSet trial{s.index(a, 0), s.index(b, 0), s.index(x, 1), s.index(y, 1)};
      if (trial.size() != 4 || !generates_right_group(s, trial)) continue;
      bool any = false;
      for (int z : trial) any = any || check_factor_precondition(s, trial, z);
      if (!any) strict = trial;
    }
  REQUIRE(strict);
  CHECK_THROWS_AS(factor_minor(s, *strict, s.index(a, 0)), Error);

  const auto z4 = right_group(group_cyclic(4), 2);
  const ElementSet zc{z4.index(1, 0), z4.index(1, 1)};
  for (int x : zc) CHECK(check_factor_precondition(z4, zc, x));

  // Singleton band {g}; complement made of involutions commuting with g.
  const auto z2z2 = parse_group_spec("Z2xZ2xZ2");
  const auto t = right_group(z2z2, 2);
  const ElementSet tc{t.index(z2z2.at("((1,0),0)"), 0), t.index(z2z2.at("((0,1),0)"), 1),
                      t.index(z2z2.at("((0,0),1)"), 1)};
  CHECK(check_factor_precondition(t, tc, tc[0]));
}

TEST_CASE("factor minor examples") {
  const auto d3 = group_dihedral(3);
  const auto s = right_group(d3, 2);
  const ElementSet c{s.index(d3.at("<12>"), 0), s.index(d3.at("<13>"), 1)};
  const auto r = factor_minor(s, c, c[0]);
  CHECK(r.isomorphic);
  CHECK(graph_isomorphic(r.trace.result, cycle_graph(6)));
  CHECK(verify_trace(r.trace));

  const auto z4 = right_group(group_cyclic(4), 2);
  const ElementSet zc{z4.index(1, 0), z4.index(1, 1)};
  const auto rz = factor_minor(z4, zc, zc[1]);
  CHECK(graph_isomorphic(rz.trace.result, cycle_graph(4)));

  const auto k1 = right_group(group_alternating(4), 1);
  const auto a4 = group_alternating(4);
  const ElementSet ac{a4.at("(123)"), a4.at("(12)(34)")};
  const auto r1 = factor_minor(k1, ac, ac[0]);
  CHECK(r1.trace.steps.empty());
  CHECK(r1.trace.result == underlying_graph(a4, ac));
}

TEST_CASE("factor minor whenever the precondition holds") {
  const std::vector<std::pair<const char*, int>> cases{{"Z2", 2}, {"Z3", 2}, {"Z2xZ2", 2}, {"Z4", 2}, {"S3", 2},
                                                      {"Z2", 4}, {"Z4", 3}, {"Z2xZ2", 4}, {"D4", 2}, {"Z8", 2},
                                                      {"Z2xZ4", 2}, {"Z2xZ2xZ2", 2}, {"S3", 2}};
  int applied = 0;
  for (const auto& [spec, k] : cases) {
    CAPTURE(spec);
    const auto s = right_group(parse_group_spec(spec), k);
    REQUIRE(s.size() <= 16);
    EnumerationOptions opts;
    opts.max_size = std::min(s.size(), k + 2);
    opts.mode = EnumerationMode::kAll;
    for (const auto& c : enumerate_generating_sets(s, opts))
      for (int x : c) {
        if (!check_factor_precondition(s, c, x)) continue;
        const auto r = factor_minor(s, c, x);
        CHECK(r.isomorphic);
        CHECK(verify_trace(r.trace));
        if (is_planar(underlying_graph(s, c))) CHECK(is_planar(r.trace.result));
        ++applied;
      }
  }
  CHECK(applied > 1000);
}

TEST_CASE("coxeter diagnosis") {
  const auto s4 = group_symmetric(4);
  const auto cox = coxeter_diagnose(s4, ElementSet{s4.at("(12)"), s4.at("(23)"), s4.at("(34)")});
  CHECK(cox.is_coxeter);
  CHECK(cox.presentation_order == 24);
  CHECK(cox.dynkin_edges.size() == 2);
  CHECK(cox.is_tree);
  CHECK(cox.is_connected);

  const auto d3 = group_dihedral(3);
  const auto dd = coxeter_diagnose(d3, ElementSet{d3.at("<12>"), d3.at("<13>")});
  CHECK(dd.is_coxeter);
  CHECK(dd.dynkin_edges.size() == 1);
  CHECK(dd.orders[0][1] == 3);

  const auto z3 = group_cyclic(3);
  const auto zd = coxeter_diagnose(z3, ElementSet{1});
  CHECK_FALSE(zd.all_involutions);
  CHECK_FALSE(zd.is_coxeter);

  // Three involutions of Z2 x A5 with products of orders 2, 3 and 5.
  const auto z2a5 = parse_group_spec("Z2xA5");
  const ElementSet ic{z2a5.at("(1,(12)(35))"), z2a5.at("(1,(24)(35))"), z2a5.at("(1,(23)(45))")};
  const auto a5d = coxeter_diagnose(z2a5, ic);
  CHECK(a5d.all_involutions);
  CHECK(a5d.presentation_order == 120);
  CHECK(a5d.is_coxeter);
  CHECK(a5d.is_tree);
}

TEST_CASE("coxeter systems from the catalog have tree diagrams") {
  for (const char* spec : {"Z2", "Z2xZ2", "D3", "D4", "D5", "D6", "S3", "S4", "Z2xD3", "Z2xD4", "Z2xS4", "Z2xA5"}) {
    const auto g = parse_group_spec(spec);
    std::vector<int> involutions;
    for (int x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 2) involutions.push_back(x);
    int systems = 0;
    std::vector<std::vector<int>> candidates;
    for (size_t i = 0; i < involutions.size(); ++i) candidates.push_back({involutions[i]});
    for (size_t i = 0; i < involutions.size(); ++i)
      for (size_t j = i + 1; j < involutions.size(); ++j) {
        candidates.push_back({involutions[i], involutions[j]});
        for (size_t l = j + 1; l < involutions.size(); ++l)
          candidates.push_back({involutions[i], involutions[j], involutions[l]});
      }
    for (const auto& gens : candidates) {
      if (systems >= 40) break;
      if (!generates_group(g, gens)) continue;
      const auto d = coxeter_diagnose(g, ElementSet(gens));
      CHECK_FALSE(d.undetermined);
      if (d.is_coxeter) {
        CHECK(d.is_tree);
        ++systems;
      }
    }
    CAPTURE(spec);
    CHECK(systems > 0);
  }
}

TEST_CASE("minor containment") {
  const auto k4 = minor_contains(complete_graph(5), complete_graph(4), 100000);
  REQUIRE(k4.status == SearchStatus::kFound);
  CHECK(verify_trace(*k4.trace));
  CHECK(graph_isomorphic(k4.trace->result, complete_graph(4)));

  const auto pet = minor_contains(petersen_graph(), complete_graph(5), 1000000);
  REQUIRE(pet.status == SearchStatus::kFound);
  CHECK(verify_trace(*pet.trace));
  CHECK(graph_isomorphic(pet.trace->result, complete_graph(5)));

  CHECK(minor_contains(cycle_graph(6), complete_graph(3), 100000).status == SearchStatus::kFound);
  CHECK(minor_contains(cycle_graph(6), complete_graph(4), 100000).status == SearchStatus::kNone);
  CHECK(minor_contains(petersen_graph(), complete_graph(5), 2).status == SearchStatus::kExceeded);
  CHECK_THROWS_AS(minor_contains(SimpleGraph(30), complete_graph(3), 10), CapExceeded);

  // The local non-planarity argument on Z2 x Z4 x R2 with {(a,r1),(b,r2)}.
  const auto g = parse_group_spec("Z2xZ4");
  const auto s = right_group(g, 2);
  const auto host = underlying_graph(s, ElementSet{s.index(g.at("(1,0)"), 0), s.index(g.at("(0,1)"), 1)});
  const auto k33 = minor_contains(host, complete_bipartite(3, 3), 5000000);
  REQUIRE(k33.status == SearchStatus::kFound);
  CHECK(verify_trace(*k33.trace));
  CHECK(graph_isomorphic(k33.trace->result, complete_bipartite(3, 3)));
}

TEST_CASE("minor search agrees with planarity on small random graphs") {
  std::mt19937_64 rng(123);
  int nonplanar = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, 8, 0.5);
    const auto k5 = minor_contains(g, complete_graph(5), 2000000);
    const auto k33 = minor_contains(g, complete_bipartite(3, 3), 2000000);
    REQUIRE(k5.status != SearchStatus::kExceeded);
    REQUIRE(k33.status != SearchStatus::kExceeded);
    for (const auto* r : {&k5, &k33})
      if (r->status == SearchStatus::kFound) CHECK(verify_trace(*r->trace));
    const bool has_minor = k5.status == SearchStatus::kFound || k33.status == SearchStatus::kFound;
    CHECK(has_minor == !is_planar(g));
    if (has_minor) ++nonplanar;
  }
  CHECK(nonplanar > 5);
}
