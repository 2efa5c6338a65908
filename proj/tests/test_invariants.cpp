#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "rootgate/invariants.hpp"

using namespace rootgate;

namespace {

AlgebraDescriptor of_type(Family f, int rank) {
  return parse_algebra(type_label(make_type(f, rank)));
}

int r_of(const std::string& name) { return r_invariant(parse_algebra(name)).value; }
int m_of(const std::string& name) { return m_invariant(parse_algebra(name)).value; }

}  // namespace

TEST_CASE("r follows the closed forms on every classical family up to rank 12") {
  for (int n = 1; n <= 12; ++n) CHECK(r_invariant(of_type(Family::A, n)).value == n);
  for (int n = 2; n <= 12; ++n) CHECK(r_invariant(of_type(Family::B, n)).value == 2 * n - 1);
  for (int n = 2; n <= 12; ++n) CHECK(r_invariant(of_type(Family::C, n)).value == 2 * n - 1);
  for (int n = 1; n <= 12; ++n) CHECK(r_invariant(of_type(Family::BC, n)).value == 2 * n - 1);
  for (int n = 4; n <= 12; ++n) CHECK(r_invariant(of_type(Family::D, n)).value == 2 * n - 2);
}

TEST_CASE("r on the exceptional types") {
  CHECK(r_invariant(of_type(Family::E6, 6)).value == 16);
  CHECK(r_invariant(of_type(Family::E7, 7)).value == 27);
  CHECK(r_invariant(of_type(Family::E8, 8)).value == 57);
  CHECK(r_invariant(of_type(Family::F4, 4)).value == 15);
  CHECK(r_invariant(of_type(Family::G2, 2)).value == 5);
}

TEST_CASE("m follows the closed forms on every classical family up to rank 12") {
  for (int n = 1; n <= 12; ++n) CHECK(m_invariant(of_type(Family::A, n)).value == 2 * n - 1);
  for (int n = 2; n <= 12; ++n) CHECK(m_invariant(of_type(Family::B, n)).value == 4 * n - 4);
  for (int n = 2; n <= 12; ++n) CHECK(m_invariant(of_type(Family::C, n)).value == 4 * n - 4);
  CHECK(m_invariant(of_type(Family::BC, 1)).value == 1);
  for (int n = 2; n <= 12; ++n) CHECK(m_invariant(of_type(Family::BC, n)).value == 4 * n - 4);
  CHECK(m_invariant(of_type(Family::D, 4)).value == 9);
  for (int n = 5; n <= 12; ++n) CHECK(m_invariant(of_type(Family::D, n)).value == 4 * n - 6);
}

TEST_CASE("m on the exceptional types") {
  CHECK(m_invariant(of_type(Family::E6, 6)).value == 24);
  CHECK(m_invariant(of_type(Family::E7, 7)).value == 43);
  CHECK(m_invariant(of_type(Family::E8, 8)).value == 84);
  CHECK(m_invariant(of_type(Family::F4, 4)).value == 20);
  CHECK(m_invariant(of_type(Family::G2, 2)).value == 6);
}

TEST_CASE("r witnesses of A3 omit an end node") {
  InvariantSlice s = r_invariant(of_type(Family::A, 3));
  CHECK(s.value == 3);
  std::set<std::vector<int>> omitted;
  for (const Parabolic& q : s.witnesses) omitted.insert(q.omitted().indices());
  CHECK(omitted == std::set<std::vector<int>>{{1}, {3}});
}

TEST_CASE("m witnesses of D4 omit pairwise non-adjacent nodes") {
  InvariantSlice s = m_invariant(of_type(Family::D, 4));
  CHECK(s.value == 9);
  REQUIRE(s.witnesses.size() == 3);
  const IntMatrix& cartan = s.witnesses.front().system->cartan_matrix();
  std::set<std::vector<int>> omitted;
  for (const Parabolic& q : s.witnesses) {
    std::vector<int> pair = q.omitted().indices();
    REQUIRE(pair.size() == 2);
    CHECK(cartan[pair[0] - 1][pair[1] - 1] == 0);  // the two nodes commute
    omitted.insert(pair);
  }
  CHECK(omitted == std::set<std::vector<int>>{{1, 3}, {1, 4}, {3, 4}});
}

TEST_CASE("rank-1 factors take m = 1 by definition, with no witnesses") {
  InvariantSlice s = m_invariant(parse_algebra("sl(2,R)"));
  CHECK(s.value == 1);
  CHECK(s.witnesses.empty());
  CHECK(r_of("sl(2,R)") == 1);
  CHECK(m_of("su(1,5)") == 1);  // restricted type BC1
}

TEST_CASE("semisimple invariants minimize over the non-compact factors") {
  CHECK(r_of("sl(3,R) x sp(3,R)") == 2);
  CHECK(m_of("sl(3,R) x sp(3,R)") == 3);
  CHECK(r_of("so(4,4) x sl(2,R)") == 1);
  CHECK(m_of("so(4,4) x sl(2,R)") == 1);
  CHECK(r_of("E8 x E6") == 16);
  CHECK(m_of("E8 x E6") == 24);

  // compact factors change nothing
  CHECK(r_of("sp(3,R)") == r_of("sp(3,R) x so(9) x su(4)"));
  CHECK(m_of("sp(3,R)") == m_of("sp(3,R) x so(9) x su(4)"));
}

TEST_CASE("tied factors contribute all their witnesses") {
  InvariantSlice s = r_invariant(parse_algebra("sl(3,R) x sl(3,R)"));
  CHECK(s.value == 2);
  CHECK(s.witnesses.size() == 4);  // both maximal parabolics of both factors
}

TEST_CASE("invariants demand a non-compact factor") {
  CHECK_THROWS_AS(r_invariant(parse_algebra("su(3)")), NoNoncompactFactorError);
  CHECK_THROWS_AS(m_invariant(parse_algebra("so(9) x sp(4)")), NoNoncompactFactorError);
  CHECK_THROWS_AS(classify_regime(parse_algebra("su(3)"), 2), NoNoncompactFactorError);
}

TEST_CASE("regime classification matches the reference examples") {
  CHECK(classify_regime(parse_algebra("sl(4,R)"), 2).regime == Regime::invariant_measure);
  CHECK(classify_regime(parse_algebra("sl(3,R)"), 2).regime == Regime::critical_dimension);
  CHECK(classify_regime(parse_algebra("sl(4,R)"), 5).regime == Regime::projective_factor);
  CHECK(classify_regime(parse_algebra("G2"), 7).regime == Regime::above_thresholds);
}

TEST_CASE("regime boundaries are exact") {
  const AlgebraDescriptor sl4 = parse_algebra("sl(4,R)");  // r = 3, m = 5
  CHECK(classify_regime(sl4, 2).regime == Regime::invariant_measure);
  CHECK(classify_regime(sl4, 3).regime == Regime::critical_dimension);
  CHECK(classify_regime(sl4, 4).regime == Regime::projective_factor);
  CHECK(classify_regime(sl4, 5).regime == Regime::projective_factor);  // dim = m included
  CHECK(classify_regime(sl4, 6).regime == Regime::above_thresholds);
  CHECK_THROWS_AS(classify_regime(sl4, 0), Error);
  CHECK_THROWS_AS(classify_regime(sl4, -3), Error);
}

TEST_CASE("verdicts carry the thresholds and a leading note") {
  RegimeVerdict v = classify_regime(parse_algebra("sp(4,R)"), 3);
  CHECK(v.dim == 3);
  CHECK(v.r_value == 7);
  CHECK(v.m_value == 12);
  REQUIRE(!v.notes.empty());
  CHECK(v.notes.front().rfind("dim(M)", 0) == 0);
}

TEST_CASE("the dimension-2 note fires only for split sl(n >= 4)") {
  auto has_surface_note = [](const std::string& name, int dim) {
    for (const std::string& n : classify_regime(parse_algebra(name), dim).notes)
      if (n.rfind("surface case", 0) == 0) return true;
    return false;
  };
  CHECK(has_surface_note("sl(4,R)", 2));
  CHECK(has_surface_note("sl(7,R) x su(3)", 2));
  CHECK_FALSE(has_surface_note("sl(3,R)", 2));
  CHECK_FALSE(has_surface_note("sl(4,C)", 2));
  CHECK_FALSE(has_surface_note("sl(4,R)", 3));
  CHECK_FALSE(has_surface_note("sp(4,R)", 2));
}

TEST_CASE("regime names render stably") {
  CHECK(regime_name(Regime::invariant_measure) == "InvariantMeasure");
  CHECK(regime_name(Regime::critical_dimension) == "CriticalDimension");
  CHECK(regime_name(Regime::projective_factor) == "ProjectiveFactor");
  CHECK(regime_name(Regime::above_thresholds) == "AboveThresholds");
}
