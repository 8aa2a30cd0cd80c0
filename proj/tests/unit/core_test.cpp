#include <gtest/gtest.h>

#include "pdep/core_model.hpp"

using namespace pdep;

TEST(VariableRegistry, DenseIdsInFirstAppearanceOrder) {
  VariableRegistry reg;
  EXPECT_EQ(reg.intern("b"), 0u);
  EXPECT_EQ(reg.intern("a"), 1u);
  EXPECT_EQ(reg.intern("b"), 0u);
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.name(1), "a");
  EXPECT_EQ(reg.id("a"), 1u);
  EXPECT_THROW(reg.id("c"), UnknownVariable);
  EXPECT_THROW(reg.name(7), UnknownVariable);
}

TEST(Atom, CanonicalFdSortsAndDedupes) {
  // ids: x=0, y=1, z=2
  EXPECT_EQ(make_fd({1, 0, 0}, {2}), (Atom{AtomKind::fd, {0, 1}, {2}}));
  EXPECT_EQ(canonicalize_fd(Atom{AtomKind::fd, {0}, {1}}), (Atom{AtomKind::fd, {0}, {1}}));
  const auto constancy = make_fd({}, {1, 0});
  EXPECT_TRUE(constancy.lhs.empty());
  EXPECT_EQ(constancy.rhs, (VarTuple{0, 1}));
  EXPECT_TRUE(make_constancy(3).is_constancy());
}

TEST(Atom, PairedKindsNeedEqualSides) {
  EXPECT_THROW(make_mi({0, 1}, {2}), ArityError);
  EXPECT_THROW(make_mde({0}, {}), ArityError);
  EXPECT_THROW(make_ind({}, {1}), ArityError);
  EXPECT_TRUE(make_umde(0, 1).is_unary());
  EXPECT_FALSE(make_mi({0, 1}, {2, 3}).is_unary());
}

TEST(Atom, RendersSurfaceSyntax) {
  VariableRegistry reg;
  for (auto n : {"x", "y", "z"}) reg.intern(n);
  EXPECT_EQ(to_string(make_fd({0, 1}, {2}), reg), "x y -> z");
  EXPECT_EQ(to_string(make_constancy(2), reg), "-> z");
  EXPECT_EQ(to_string(make_umi(0, 1), reg), "x ~ y");
  EXPECT_EQ(to_string(make_umde(0, 1), reg), "x ~* y");
  EXPECT_EQ(to_string(make_uind(1, 0), reg), "y <= x");
}

TEST(DependencySet, SetSemanticsAndRegisteredIds) {
  VariableRegistry reg;
  reg.intern("x");
  reg.intern("y");
  DependencySet sigma(reg);
  EXPECT_TRUE(sigma.add(make_fd({1, 0}, {1})));
  EXPECT_FALSE(sigma.add(make_fd({0, 1}, {1})));
  EXPECT_TRUE(sigma.contains(make_fd({1, 0, 1}, {1})));
  EXPECT_EQ(sigma.size(), 1u);
  EXPECT_THROW(sigma.add(make_umi(0, 5)), UnknownVariable);
  sigma.add(make_umi(0, 1));
  EXPECT_EQ(sigma.without(0).atoms(), std::vector<Atom>{make_umi(0, 1)});
}

TEST(Partition, RoutesByKindAndArity) {
  VariableRegistry reg;
  for (auto n : {"x", "y", "z", "u", "v"}) reg.intern(n);
  DependencySet sigma(reg);
  sigma.add(make_fd({0}, {1}));
  sigma.add(make_umi(0, 1));
  sigma.add(make_umde(0, 2));
  sigma.add(make_mi({0, 1}, {3, 4}));
  sigma.add(make_uind(0, 1));
  const auto p = partition(sigma);
  EXPECT_EQ(p.fds, std::vector<Atom>{make_fd({0}, {1})});
  EXPECT_EQ(p.umis, std::vector<Atom>{make_umi(0, 1)});
  EXPECT_EQ(p.umdes, std::vector<Atom>{make_umde(0, 2)});
  EXPECT_EQ(p.others.size(), 2u);

  const auto empty = partition(DependencySet(reg));
  EXPECT_TRUE(empty.fds.empty() && empty.umis.empty() && empty.umdes.empty() && empty.others.empty());
}
