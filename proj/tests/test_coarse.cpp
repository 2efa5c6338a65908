#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "rootgate/coarse.hpp"

using namespace rootgate;

namespace {

std::vector<RootSystemType> sample_types() {
  return {make_type(Family::A, 1),  make_type(Family::A, 4),  make_type(Family::B, 3),
          make_type(Family::C, 3),  make_type(Family::D, 4),  make_type(Family::BC, 1),
          make_type(Family::BC, 4), make_type(Family::E6, 6), make_type(Family::F4, 4),
          make_type(Family::G2, 2)};
}

long long expected_positive_classes(Family f, int n) {
  switch (f) {
    case Family::A: return 1LL * n * (n + 1) / 2;
    case Family::B:
    case Family::C:
    case Family::BC: return 1LL * n * n;  // BC pairs {b, 2b} collapse to n^2
    case Family::D: return 1LL * n * (n - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("coarse classes partition the roots with coherent signs") {
  for (RootSystemType t : sample_types()) {
    auto rs = build(t);
    std::map<std::vector<int>, int> seen;
    std::size_t covered = 0;
    for (const CoarseClass& c : coarse_classes(*rs)) {
      REQUIRE(!c.members.empty());
      REQUIRE(c.members.size() <= 2);
      for (const Root& r : c.members) {
        ++seen[r.coords];
        ++covered;
        CHECK((c.sign == Sign::positive) == r.positive());
      }
      if (c.members.size() == 2) {
        // the doubled member is literally twice the representative
        for (std::size_t i = 0; i < c.members[0].coords.size(); ++i)
          CHECK(c.members[1].coords[i] == 2 * c.members[0].coords[i]);
      }
    }
    INFO(type_label(t));
    CHECK(covered == rs->all_roots().size());
    for (const auto& [coords, count] : seen) CHECK(count == 1);
  }
}

TEST_CASE("positive class counts follow the closed forms") {
  for (RootSystemType t : sample_types()) {
    INFO(type_label(t));
    CHECK(static_cast<long long>(positive_class_count(*build(t))) ==
          expected_positive_classes(t.family, t.rank));
  }
  for (int n = 1; n <= 12; ++n)
    CHECK(static_cast<long long>(positive_class_count(*build(Family::BC, n))) == 1LL * n * n);
}

TEST_CASE("reduced systems have only singleton classes") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G2}) {
    auto rs = build(f, f == Family::D ? 4 : (f == Family::G2 ? 2 : 3));
    for (const CoarseClass& c : coarse_classes(*rs)) CHECK(c.members.size() == 1);
  }
}

TEST_CASE("BC classes pair each e_i with 2e_i") {
  auto rs = build(Family::BC, 2);
  std::size_t pairs = 0;
  for (const CoarseClass& c : coarse_classes(*rs))
    if (c.members.size() == 2) ++pairs;
  CHECK(pairs == 4);  // ±e1, ±e2 each carry a double

  const Root* e1 = rs->find({1, 1});  // e1 = a1 + a2
  REQUIRE(e1 != nullptr);
  CoarseClass c = coarse_class_of(*rs, *e1);
  REQUIRE(c.members.size() == 2);
  CHECK(c.representative().coords == std::vector<int>{1, 1});
  CHECK(c.members[1].coords == std::vector<int>{2, 2});

  // querying by the doubled member lands in the same class
  const Root* doubled = rs->find({2, 2});
  REQUIRE(doubled != nullptr);
  CHECK(coarse_class_of(*rs, *doubled) == c);
}

TEST_CASE("coarse_class_of rejects roots from other systems") {
  auto a2 = build(Family::A, 2);
  auto b2 = build(Family::B, 2);
  CHECK_THROWS_AS(coarse_class_of(*b2, a2->all_roots().front()), RootNotInSystemError);

  // right coordinates, wrong ambient data: still rejected
  Root fake = *b2->find({1, 1});
  fake.ambient2[0] += 2;
  CHECK_THROWS_AS(coarse_class_of(*b2, fake), RootNotInSystemError);
}

TEST_CASE("class listing order is positives first, then negatives") {
  auto rs = build(Family::BC, 2);
  std::vector<CoarseClass> classes = coarse_classes(*rs);
  REQUIRE(classes.size() == 8);
  for (std::size_t i = 0; i < 4; ++i) CHECK(classes[i].sign == Sign::positive);
  for (std::size_t i = 4; i < 8; ++i) CHECK(classes[i].sign == Sign::negative);
}
