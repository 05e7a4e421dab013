#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "rgplanar/algebra.hpp"

using namespace rgp;

TEST_CASE("cyclic groups") {
  const auto z6 = group_cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.element_order(z6.at("1")) == 6);
  CHECK(z6.name(z6.identity()) == "0");
  CHECK(group_cyclic(1).order() == 1);
  CHECK(group_cyclic(4).element_order(2) == 2);
}

TEST_CASE("dihedral groups") {
  const auto d3 = group_dihedral(3);
  CHECK(d3.order() == 6);
  CHECK(group_isomorphic(group_dihedral(2), direct_product(group_cyclic(2), group_cyclic(2))));
  const auto d4 = group_dihedral(4);
  CHECK(d4.element_order(d4.at("<13>")) == 2);
  CHECK(d4.element_order(d4.at("(1234)")) == 4);
  CHECK(d4.element_order(d4.at("<12>")) == 2);
  CHECK_THROWS_AS(group_dihedral(1), Error);
  // <12> swaps 1 and 2, <13> fixes 2.
  CHECK(d4.at("<12>") == d4.at("(12)(34)"));
  CHECK(d4.at("<13>") == d4.at("(13)"));
}

TEST_CASE("permutation groups") {
  CHECK(group_alternating(4).order() == 12);
  CHECK(group_symmetric(4).order() == 24);
  CHECK(group_alternating(5).order() == 60);
  CHECK_THROWS_AS(group_symmetric(6), Error);
  const auto a4 = group_alternating(4);
  CHECK(a4.element_order(a4.at("(123)")) == 3);
  CHECK(a4.element_order(a4.identity()) == 1);
  // Right-to-left composition: (1234)^-1 (123) (1234) = (124).
  const auto s4 = group_symmetric(4);
  const int c = s4.at("(1234)");
  CHECK(s4.mul(s4.mul(s4.inverse(c), s4.at("(123)")), c) == s4.at("(124)"));
}

TEST_CASE("direct products and isomorphism") {
  CHECK(direct_product(group_cyclic(2), group_alternating(4)).order() == 24);
  CHECK(group_isomorphic(direct_product(group_cyclic(2), group_cyclic(3)), group_cyclic(6)));
  CHECK(group_isomorphic(direct_product(group_trivial(), group_dihedral(4)), group_dihedral(4)));
  CHECK(group_isomorphic(direct_product(group_cyclic(2), group_dihedral(3)), group_dihedral(6)));
  CHECK_FALSE(group_isomorphic(group_cyclic(4), direct_product(group_cyclic(2), group_cyclic(2))));
  CHECK_FALSE(group_isomorphic(group_symmetric(4), direct_product(group_cyclic(2), group_alternating(4))));
  CHECK_FALSE(group_isomorphic(group_dihedral(6), group_alternating(4)));
}

TEST_CASE("catalog groups satisfy the axioms") {
  for (const char* spec : {"E", "Z1", "Z6", "D2", "D3", "D4", "D8", "S3", "S4", "A4", "A5", "Z2xA4", "Z2xD4",
                           "Z2xZ2xZ2", "Z2xS4"}) {
    CAPTURE(spec);
    const auto g = parse_group_spec(spec);
    CHECK(g.verify_axioms());
    CHECK(group_isomorphic(g, g));
  }
  CHECK(parse_group_spec("Z2xA4").order() == 24);
  CHECK_THROWS_AS(parse_group_spec("Q8"), Error);
}

TEST_CASE("isomorphism is symmetric on random catalog pairs") {
  std::vector<GroupTable> catalog;
  for (const char* spec : {"Z6", "D3", "Z2xZ3", "S3", "Z4", "Z2xZ2", "D2", "D6", "Z2xD3", "A4", "Z12", "Z2xZ6",
                           "D4", "Z8", "Z2xZ4"})
    catalog.push_back(parse_group_spec(spec));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<size_t> pick(0, catalog.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& a = catalog[pick(rng)];
    const auto& b = catalog[pick(rng)];
    CHECK(group_isomorphic(a, b) == group_isomorphic(b, a));
  }
}

TEST_CASE("right groups") {
  const auto e4 = right_group(group_trivial(), 4);
  CHECK(e4.size() == 4);
  CHECK(e4.verify_law());
  CHECK(semigroup_closure(e4, {0, 1}) == ElementSet{0, 1});
  CHECK(right_group(group_cyclic(6), 3).size() == 18);
  CHECK(right_group(parse_group_spec("Z2xA4"), 2).size() == 48);
  CHECK(right_group(group_alternating(4), 3).verify_law());

  const auto z2r2 = right_group(group_cyclic(2), 2);
  CHECK(semigroup_closure(z2r2, {z2r2.index(1, 0), z2r2.index(0, 1)}).size() == 4);
  CHECK(semigroup_closure(z2r2, {z2r2.index(0, 0), z2r2.index(0, 1)}) ==
        ElementSet{z2r2.index(0, 0), z2r2.index(0, 1)});
  CHECK_THROWS_AS(semigroup_closure(z2r2, ElementSet{}), Error);
  CHECK(z2r2.parse_element("(1,r2)") == z2r2.index(1, 1));
  CHECK(z2r2.parse_element("1@r1") == z2r2.index(1, 0));
  CHECK(z2r2.name(z2r2.index(0, 1)) == "(0,r2)");
}

TEST_CASE("projections") {
  const auto s = right_group(group_cyclic(6), 3);
  const ElementSet c{s.index(1, 0), s.index(0, 1), s.index(0, 2)};
  const auto p = projections(s, c);
  CHECK(p.group_part == ElementSet{0, 1});
  CHECK(p.bands == ElementSet{0, 1, 2});
  CHECK(p.multiplicity[0] == 2);
  CHECK(p.multiplicity[1] == 1);
  CHECK(p.per_band[0] == ElementSet{1});
  const auto empty = projections(s, ElementSet{});
  CHECK(empty.group_part.empty());
  CHECK(empty.bands.empty());
}

TEST_CASE("closure agrees with brute-force saturation on every subset of small right groups") {
  for (const auto& [spec, k] : std::vector<std::pair<const char*, int>>{{"Z2", 2}, {"Z3", 2}, {"E", 4}, {"Z2", 3}}) {
    const auto s = right_group(parse_group_spec(spec), k);
    for (int mask = 1; mask < (1 << s.size()); ++mask) {
      std::vector<int> members;
      std::set<oracle::Pair> raw;
      for (int x = 0; x < s.size(); ++x)
        if (mask >> x & 1) {
          members.push_back(x);
          raw.insert({s.group_part(x), s.band(x)});
        }
      const ElementSet t(members);
      const auto closed = semigroup_closure(s, t);
      std::set<oracle::Pair> got;
      for (int x : closed) got.insert({s.group_part(x), s.band(x)});
      CHECK(got == oracle::closure(s.group(), raw));
      CHECK(semigroup_closure(s, closed) == closed);
      // Band elements of {e} x R_k are idempotent: a subset generates itself only.
      const auto p = projections(s, t);
      for (int a = 0; a < s.group_order(); ++a) CHECK(p.multiplicity[a] <= k);
      if (closed.size() == static_cast<size_t>(s.size())) CHECK(p.bands.size() == static_cast<size_t>(k));
    }
  }
}

TEST_CASE("closure is monotone") {
  const auto s = right_group(group_cyclic(3), 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(1, (1 << s.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = pick(rng);
    const int b = a | pick(rng);
    auto to_set = [&](int mask) {
      std::vector<int> v;
      for (int x = 0; x < s.size(); ++x)
        if (mask >> x & 1) v.push_back(x);
      return ElementSet(v);
    };
    CHECK(semigroup_closure(s, to_set(a)).is_subset_of(semigroup_closure(s, to_set(b))));
  }
}
