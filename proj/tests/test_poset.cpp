#include <doctest.h>

#include "bandposet/enumerate.hpp"
#include "bandposet/fixtures.hpp"
#include "bandposet/poset.hpp"
#include "oracles.hpp"

using namespace bandposet;

namespace {

Relation rows(unsigned n, std::initializer_list<std::pair<Element, Element>> pairs) {
  Relation r(n);
  for (auto [a, b] : pairs) r[a].insert(b);
  return r;
}

ElementSet set_of(std::initializer_list<Element> xs) {
  ElementSet s;
  for (auto x : xs) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("from_relation accepts the identity as an antichain") {
  const auto p = Poset::from_relation(rows(3, {{0, 0}, {1, 1}, {2, 2}}));
  CHECK(p == Poset::antichain(3));
  CHECK(p.minimals() == p.all());
}

TEST_CASE("from_relation reports the first violated axiom") {
  SUBCASE("antisymmetry") {
    try {
      Poset::from_relation(rows(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
      FAIL("accepted a symmetric pair");
    } catch (const AxiomError& e) {
      CHECK(e.violation().axiom == AxiomViolation::Axiom::kAntisymmetry);
      CHECK(e.violation().witness == std::vector<Element>{0, 1});
    }
  }
  SUBCASE("transitivity") {
    try {
      Poset::from_relation(rows(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}));
      FAIL("accepted a non-transitive relation");
    } catch (const AxiomError& e) {
      CHECK(e.violation().axiom == AxiomViolation::Axiom::kTransitivity);
      CHECK(e.violation().witness == std::vector<Element>{0, 1, 2});
    }
  }
  SUBCASE("reflexivity") {
    CHECK_THROWS_AS(Poset::from_relation(rows(2, {{0, 0}})), AxiomError);
  }
}

TEST_CASE("down-sets and minimal elements of the catalog") {
  const auto hb = named_poset("hummingbird").poset;
  CHECK(hb.down_set(3).size() == 3);
  CHECK(hb.down_set(4).size() == 4);
  CHECK_FALSE(are_isomorphic(hb.induced(hb.down(3)), hb.induced(hb.down(4))));
  for (Element m : hb.minimals()) CHECK(hb.down(m) == ElementSet::singleton(m));
  CHECK_THROWS_AS(hb.down_set(9), InputError);

  const auto c = crown(3);
  CHECK(c.down_set(0) == set_of({0, 3, 4}));
  CHECK(c.minimals() == set_of({3, 4, 5}));
  CHECK(Poset::chain(3).minimals() == set_of({0}));
  CHECK(Poset::antichain(4).minimals().size() == 4);
}

TEST_CASE("crown covers follow the cyclic pattern") {
  const auto c = crown(3);
  CHECK(c.cover_pairs() ==
        std::vector<Cover>{{3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2}});
  for (unsigned k = 2; k <= 6; ++k) {
    const auto p = crown(k);
    CHECK(p.size() == 2 * k);
    CHECK(p.cover_pairs().size() == 2 * k);
    CHECK(automorphisms(p).size() >= 2);
  }
  CHECK_THROWS_AS(crown(1), InputError);
}

TEST_CASE("trees and forests") {
  CHECK(is_foliated_tree(named_poset("foliated-tree").poset));
  CHECK(named_poset("foliated-tree").poset.size() == 13);
  CHECK_FALSE(is_forest(crown(3)));
  CHECK(is_tree(Poset::chain(4)));
  CHECK(is_forest(named_poset("non-normal").poset));
  CHECK_FALSE(is_tree(named_poset("non-normal").poset));
  CHECK(is_tree(named_poset("transversal").poset));
}

TEST_CASE("meet-semilattice predicates") {
  const auto tulip = named_poset("tulip").poset;
  CHECK(is_relative_meet_semilattice(tulip));
  CHECK_FALSE(is_meet_semilattice(tulip));
  CHECK_FALSE(is_relative_meet_semilattice(named_poset("hummingbird").poset));
  CHECK(is_meet_semilattice(Poset::chain(5)));
  CHECK(is_relative_meet_semilattice(Poset::chain(5)));
  CHECK(meet(crown(3), 3, 4) == std::nullopt);
  CHECK(meet(crown(3), 0, 3) == std::optional<Element>(3));
}

TEST_CASE("isomorphism search") {
  const auto tulip = named_poset("tulip").poset;
  const auto iso = are_isomorphic(tulip, tulip);
  REQUIRE(iso);
  for (Element x = 0; x < tulip.size(); ++x) CHECK((*iso)(x) == x);
  CHECK_FALSE(are_isomorphic(Poset::chain(2), Poset::antichain(2)));
  const std::vector<Element> perm = {2, 0, 1, 4, 3};
  const auto hb = named_poset("hummingbird").poset;
  CHECK(are_isomorphic(hb, relabel(hb, perm)));
}

TEST_CASE("catalog sizes") {
  CHECK(crown(3).size() == 6);
  CHECK(named_poset("hummingbird").poset.size() == 5);
  CHECK(named_poset("hummingbird").poset.cover_pairs().size() == 5);
  const auto tulip = named_poset("tulip").poset;
  CHECK(tulip.size() == 8);
  CHECK(tulip.bottom() == std::optional<Element>(0));
  CHECK_THROWS_AS(named_poset("no-such-poset"), InputError);
}

TEST_CASE("enumeration matches the brute-force relation oracle") {
  CHECK(collect_posets(1, false).size() == 1);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto classes = oracle::poset_classes(n);
    const auto posets = collect_posets(n, false);
    CAPTURE(n);
    CHECK(posets.size() == classes.size());
    std::set<std::string> got;
    for (const auto& p : posets) got.insert(oracle::canonical_string(oracle::matrix_of(p)));
    CHECK(got == classes);
    CHECK(collect_posets(n, true).size() == oracle::all_partial_orders(n).size());
  }
  CHECK(oracle::poset_classes(3).size() == 5);
  CHECK(oracle::poset_classes(4).size() == 16);
  CHECK(collect_posets(5, false).size() == 63);
  CHECK_THROWS_AS(collect_posets(8, false), InputError);
}

TEST_CASE("structural operations") {
  const auto two = Poset::chain(2);
  const std::vector<Poset> parts = {two, Poset::antichain(2)};
  const auto sum = ordered_sum(parts);
  CHECK(sum.size() == 4);
  CHECK(sum.leq(1, 2));
  CHECK(sum.leq(0, 3));
  CHECK_FALSE(sum.comparable(2, 3));
  const auto u = disjoint_union(parts);
  CHECK_FALSE(u.comparable(1, 2));
  const auto sq = product(two, two);
  CHECK(sq.leq(0, 3));
  CHECK_FALSE(sq.comparable(1, 2));
  const auto t = adjoin_top(Poset::antichain(3));
  CHECK(t.top() == std::optional<Element>(3));
}

TEST_CASE("poset maps validate order preservation") {
  CHECK_THROWS_AS(PosetMap(Poset::chain(2), Poset::antichain(2), {0, 1}),
                  InputError);
  const PosetMap f(Poset::chain(2), Poset::chain(1), {0, 0});
  CHECK(f.is_surjective());
  CHECK_FALSE(f.is_injective());
  CHECK(f.fiber(0).size() == 2);
}
