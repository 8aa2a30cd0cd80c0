#include <gtest/gtest.h>

#include "pdep/pdep.hpp"
#include "support/generators.hpp"

using namespace pdep;
using namespace pdep::testing;

namespace {

Atom q(DependencySet& sigma, const char* text) { return parse_atom(text, sigma.domain()); }

}  // namespace

TEST(Translate, Examples) {
  auto sigma = parse_dependency_file("x ~ y\ny -> z\n");
  auto star = translate(sigma);
  EXPECT_EQ(star.atoms(), (std::vector<Atom>{q(star, "x <= y"), q(star, "y <= x"), q(star, "y -> z")}));
  EXPECT_TRUE(translate(DependencySet{}).empty());
  auto self = parse_dependency_file("x ~ x\n");
  EXPECT_EQ(translate(self).atoms(), std::vector<Atom>{make_uind(0, 0)});
  EXPECT_THROW(translate(parse_dependency_file("x ~* y\n")), UnsupportedAtom);
}

TEST(DecideUind, Examples) {
  auto chain = parse_dependency_file("x <= y\ny <= z\n");
  EXPECT_TRUE(decide_uind(chain, q(chain, "x <= z")));
  EXPECT_FALSE(decide_uind(chain, q(chain, "z <= x")));

  auto cycle = parse_dependency_file("x0 -> x1\nx2 <= x1\nx2 -> x3\nx0 <= x3\n");
  EXPECT_TRUE(decide_uind(cycle, q(cycle, "x1 -> x0")));
  EXPECT_TRUE(decide_uind(cycle, q(cycle, "x3 -> x2")));
  EXPECT_TRUE(decide_uind(cycle, q(cycle, "x1 <= x2")));

  auto one = parse_dependency_file("x <= y\n");
  EXPECT_FALSE(decide_uind(one, q(one, "y <= x")));
  EXPECT_THROW(decide_uind(one, q(one, "x ~ y")), UnsupportedAtom);
  EXPECT_THROW(decide_uind(parse_dependency_file("x ~* y\n"), make_fd({0}, {1})), UnsupportedAtom);
}

TEST(DecideUind, ConstantPullsIncludedColumn) {
  auto sigma = parse_dependency_file("-> x\ny <= x\n");
  EXPECT_TRUE(decide_uind(sigma, q(sigma, "-> y")));
}

TEST(DecideViaSimulation, Examples) {
  auto chain = parse_dependency_file("x ~ y\ny ~ z\n");
  EXPECT_TRUE(decide_via_simulation(chain, q(chain, "x ~ z")));
  auto cycle = parse_dependency_file("x0 -> x1\nx1 ~ x2\nx2 -> x3\nx3 ~ x0\n");
  EXPECT_TRUE(decide_via_simulation(cycle, q(cycle, "x1 -> x0")));
  auto single = parse_dependency_file("x ~ y\n");
  EXPECT_FALSE(decide_via_simulation(single, q(single, "x -> y")));
  EXPECT_FALSE(decide(single, q(single, "x -> y")).implied);
  EXPECT_THROW(decide_via_simulation(single, q(single, "x ~* y")), UnsupportedAtom);
}

TEST(DecideUind, ReflectionOnTranslatedSets) {
  Rng rng(41);
  for (int round = 0; round < 200; ++round) {
    const auto sigma = random_sigma(rng, {2, 6, 10, true, true, false});
    const auto star = translate(sigma);
    const auto n = static_cast<VarId>(sigma.domain().size());
    for (VarId x = 0; x < n; ++x) {
      for (VarId y = 0; y < n; ++y) {
        EXPECT_EQ(decide_uind(star, make_uind(x, y)), decide_uind(star, make_uind(y, x)));
      }
    }
  }
}

// Random teams satisfying sigma* must satisfy every inclusion decided true.
TEST(DecideUind, SoundOnRandomTeams) {
  Rng rng(43);
  std::size_t satisfying = 0;
  for (int round = 0; round < 4000; ++round) {
    const std::size_t n = uniform(rng, 2, 4);
    DependencySet sigma(named_registry(n));
    for (std::size_t i = uniform(rng, 1, 4); i > 0; --i) {
      const auto a = static_cast<VarId>(uniform(rng, 0, n - 1));
      const auto b = static_cast<VarId>(uniform(rng, 0, n - 1));
      sigma.add(uniform(rng, 0, 1) ? make_uind(a, b) : make_fd({a}, {b}));
    }
    const auto team = random_team(rng, sigma.domain(), {1, 4, 2, true});
    if (!satisfies_set(team, sigma)) continue;
    ++satisfying;
    for (VarId x = 0; x < n; ++x) {
      for (VarId y = 0; y < n; ++y) {
        if (decide_uind(sigma, make_uind(x, y))) { EXPECT_TRUE(satisfies(team, make_uind(x, y))); }
        if (decide_uind(sigma, make_fd({x}, {y}))) { EXPECT_TRUE(satisfies(team, make_fd({x}, {y}))); }
      }
    }
  }
  EXPECT_GE(satisfying, 200u);
}
