#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "rootgate/parabolic.hpp"

using namespace rootgate;

TEST_CASE("a parabolic holds every positive root space and the kept negatives") {
  auto b2 = build(Family::B, 2);
  Parabolic q = make_parabolic(b2, IndexSet::of({2}));
  for (const Root& r : b2->all_roots()) {
    const bool expected = r.positive() || (r.coords == std::vector<int>{0, -1});
    INFO("coords " << r.coords[0] << "," << r.coords[1]);
    CHECK(contains_root_space(q, r) == expected);
  }
  CHECK(root_set(q).size() == 5);  // 4 positives + one kept negative
  CHECK(resonant_codimension(q) == 3);
}

TEST_CASE("keeping everything excludes nothing; keeping nothing excludes all negatives") {
  for (RootSystemType t :
       {make_type(Family::A, 3), make_type(Family::BC, 3), make_type(Family::G2, 2)}) {
    auto rs = build(t);
    CHECK(resonant_codimension(make_parabolic(rs, IndexSet::full(t.rank))) == 0);
    CHECK(static_cast<std::size_t>(
              resonant_codimension(make_parabolic(rs, IndexSet{}))) ==
          positive_class_count(*rs));
  }
}

TEST_CASE("contains_root_space rejects foreign roots") {
  auto a2 = build(Family::A, 2);
  auto b2 = build(Family::B, 2);
  Parabolic q = make_parabolic(b2, IndexSet::of({1}));
  CHECK_THROWS_AS(contains_root_space(q, a2->all_roots().front()), RootNotInSystemError);
}

TEST_CASE("make_parabolic validates its inputs") {
  auto a2 = build(Family::A, 2);
  CHECK_THROWS_AS(make_parabolic(nullptr, IndexSet{}), Error);
  CHECK_THROWS_AS(make_parabolic(a2, IndexSet::of({3})), Error);
  CHECK(make_parabolic(a2, IndexSet::of({1, 2})).proper() == false);
  CHECK(make_parabolic(a2, IndexSet::of({1})).proper() == true);
  CHECK(make_parabolic(a2, IndexSet::of({1})).corank() == 1);
  CHECK(make_parabolic(a2, IndexSet{}).corank() == 2);
}

TEST_CASE("every parabolic root set is closed under addition of roots") {
  for (RootSystemType t :
       {make_type(Family::B, 3), make_type(Family::BC, 3), make_type(Family::D, 4)}) {
    auto rs = build(t);
    const std::uint32_t full = IndexSet::full(t.rank).mask();
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      INFO(type_label(t) << " mask " << mask);
      CHECK(verify_closure(make_parabolic(rs, IndexSet::from_mask(mask))));
    }
  }
}

TEST_CASE("bracket_closed flags genuinely unclosed subsets") {
  auto b2 = build(Family::B, 2);

  // positives plus an unsupported negative: -(a1+a2) + a1 = -a2 is missing
  std::vector<Root> bad = enumerate_positive_roots(*b2);
  bad.push_back(b2->find({1, 1})->negated());
  CHECK_FALSE(bracket_closed(*b2, bad));

  // positives minus the long root: a2 + (a1+a2) = a1+2a2 escapes the set
  std::vector<Root> gapped;
  for (const Root& r : enumerate_positive_roots(*b2))
    if (r.coords != std::vector<int>{1, 2}) gapped.push_back(r);
  CHECK_FALSE(bracket_closed(*b2, gapped));

  // the kept-negative pattern that actually is a parabolic passes
  std::vector<Root> good = enumerate_positive_roots(*b2);
  good.push_back(b2->find({0, 1})->negated());
  CHECK(bracket_closed(*b2, good));
}

TEST_CASE("corank-1 and corank-2 enumerations come in index order") {
  auto a4 = build(Family::A, 4);
  std::vector<std::vector<int>> omitted;
  for (const Parabolic& q : maximal_parabolics(a4)) omitted.push_back(q.omitted().indices());
  CHECK(omitted == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

  omitted.clear();
  for (const Parabolic& q : corank2_parabolics(a4)) omitted.push_back(q.omitted().indices());
  CHECK(omitted ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("corank-2 enumeration needs rank at least 2") {
  CHECK_THROWS_AS(corank2_parabolics(build(Family::A, 1)), RankTooSmallError);
  CHECK_THROWS_AS(corank2_parabolics(build(Family::BC, 1)), RankTooSmallError);
}

TEST_CASE("D4 corank-2 codimensions form the known multiset") {
  auto d4 = build(Family::D, 4);
  std::multiset<int> codims;
  for (const Parabolic& q : corank2_parabolics(d4)) codims.insert(resonant_codimension(q));
  CHECK(codims == std::multiset<int>{9, 9, 9, 10, 10, 10});
}

TEST_CASE("excluded classes are exactly the negative classes outside the kept support") {
  auto g2 = build(Family::G2, 2);
  Parabolic q = make_parabolic(g2, IndexSet::of({2}));
  std::vector<CoarseClass> excluded = excluded_classes(q);
  CHECK(excluded.size() == static_cast<std::size_t>(resonant_codimension(q)));
  for (const CoarseClass& c : excluded) {
    CHECK(c.sign == Sign::negative);
    CHECK_FALSE(contains_root_space(q, c.representative()));
  }
}

TEST_CASE("growing the kept set never increases the resonant codimension") {
  auto bc3 = build(Family::BC, 3);
  const std::uint32_t full = IndexSet::full(3).mask();
  for (std::uint32_t inner = 0; inner <= full; ++inner) {
    for (std::uint32_t outer = inner; outer <= full; ++outer) {
      if ((inner & outer) != inner) continue;  // inner must be a subset
      const int ci = resonant_codimension(make_parabolic(bc3, IndexSet::from_mask(inner)));
      const int co = resonant_codimension(make_parabolic(bc3, IndexSet::from_mask(outer)));
      CHECK(ci >= co);
    }
  }
}
