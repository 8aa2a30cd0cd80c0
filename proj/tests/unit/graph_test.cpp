#include <gtest/gtest.h>

#include <set>

#include "pdep/pdep.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace pdep;
using namespace pdep::testing;

TEST(FdClosure, Basics) {
  // x=0 y=1 z=2
  EXPECT_EQ(fdclosure({0}, {make_fd({0}, {1}), make_fd({1}, {2})}, 3), (VarTuple{0, 1, 2}));
  EXPECT_EQ(fdclosure({0}, {}, 3), (VarTuple{0}));
  // seed empty, constancy fires: {=(x4), =(x4,x5)} over x4=0, x5=1
  EXPECT_EQ(fdclosure({}, {make_constancy(0), make_fd({0}, {1})}, 2), (VarTuple{0, 1}));
  EXPECT_EQ(fdclosure({0}, {make_fd({0, 1}, {2})}, 3), (VarTuple{0}));
  EXPECT_EQ(fdclosure({0, 1}, {make_fd({0, 1}, {2})}, 3), (VarTuple{0, 1, 2}));
}

TEST(FdClosure, IncrementalMatchesFromScratch) {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = uniform(rng, 1, 7);
    std::vector<Atom> fds;
    FdList list(n);
    const auto seed = random_subset(rng, n, uniform(rng, 0, 2));
    FdClosure closure(seed, n);
    for (int step = 0; step < 8; ++step) {
      const auto fd = make_fd(random_subset(rng, n, uniform(rng, 0, 3)),
                              random_subset(rng, n, uniform(rng, 1, 2)));
      fds.push_back(fd);
      list.add(fd);
      if (uniform(rng, 0, 1)) closure.advance(list);
    }
    closure.advance(list);
    const auto expected = naive_fd_closure(seed, fds);
    EXPECT_EQ(closure.sorted_members(), VarTuple(expected.begin(), expected.end()));
  }
}

TEST(Scc, AgreesWithReachabilityAndIsTopological) {
  Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = uniform(rng, 1, 9);
    Adjacency adj(n);
    const std::size_t edges = uniform(rng, 0, 2 * n);
    for (std::size_t e = 0; e < edges; ++e) {
      adj[uniform(rng, 0, n - 1)].push_back(static_cast<VarId>(uniform(rng, 0, n - 1)));
    }
    const auto scc = strongly_connected_components(adj);
    const auto reach = naive_reachability(adj);
    for (VarId a = 0; a < n; ++a) {
      for (VarId b = 0; b < n; ++b) {
        EXPECT_EQ(scc.same(a, b), same_naive_component(reach, a, b));
        if (reach[a][b]) { EXPECT_LE(scc.component_of[a], scc.component_of[b]); }
      }
    }
    for (std::size_t c = 0; c < scc.size(); ++c) {
      EXPECT_TRUE(std::is_sorted(scc.components[c].begin(), scc.components[c].end()));
      for (VarId v : scc.components[c]) EXPECT_EQ(scc.component_of[v], c);
    }
  }
}

TEST(Scc, TieBreakBySmallestMember) {
  // 2->0 and isolated 1: ready set {2} and {1}; {1} first, then {2}, then {0}.
  Adjacency adj(3);
  adj[2].push_back(0);
  const auto scc = strongly_connected_components(adj);
  EXPECT_EQ(scc.components, (std::vector<VarTuple>{{1}, {2}, {0}}));
  EXPECT_EQ(strongly_connected_components(Adjacency(3)).components,
            (std::vector<VarTuple>{{0}, {1}, {2}}));
  EXPECT_EQ(strongly_connected_components(Adjacency{{1}, {0}}).size(), 1u);
}

TEST(Scc, ColoredGraphIgnoresColours) {
  ColoredMultigraph g(4);
  g.add_red(0, 1);
  g.add_blue(1, 2);
  g.add_red(2, 0);
  g.add_black(3, 3);
  const auto scc = tarjan_scc(g);
  EXPECT_EQ(scc.components, (std::vector<VarTuple>{{0, 1, 2}, {3}}));
}
