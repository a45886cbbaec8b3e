#include <gtest/gtest.h>

#include <random>

#include "semireg/fitting.hpp"
#include "semireg/module_structure.hpp"
#include "semireg/ring.hpp"
#include "test_support.hpp"

using namespace semireg;
using semireg::test::derived;
using semireg::test::derived_list;
using semireg::test::to_vec;

TEST(Determinant, Small) {
  const RingPtr z12 = build_zmod(12);
  EXPECT_EQ(determinant(*z12, Matrix(1, 1, {5})), 5u);
  EXPECT_EQ(determinant(*z12, Matrix(2, 2, {3, 4, 5, 6})), 10u);  // 18 - 20 = -2
  EXPECT_EQ(determinant(*z12, Matrix(3, 3, {1, 2, 0, 0, 1, 3, 4, 0, 1})), 1u);  // 1 + 24 = 25
}

TEST(FittingIdeals, Examples) {
  const RingPtr z6 = build_zmod(6), z4 = build_zmod(4);
  const FittingChain c6 = fitting_ideals(z6, Matrix(1, 1, {2}));
  ASSERT_EQ(c6.ideals.size(), 2u);
  EXPECT_EQ(c6.ideals[0], ideal_generated(z6, std::vector<Elem>{2}));
  EXPECT_TRUE(c6.ideals[1].is_whole());

  const FittingChain zero = fitting_ideals(z6, Matrix(1, 1, {0}));
  EXPECT_TRUE(zero.ideals[0].is_zero());
  EXPECT_TRUE(zero.ideals[1].is_whole());

  const FittingChain c4 = fitting_ideals(z4, Matrix(2, 3, {2, 1, 1, 0, 2, 2}));
  EXPECT_EQ(to_vec(c4.ideals[0].elements()), derived_list("fitting_z4_f0"));
  EXPECT_EQ(c4.ideals[1].size(), derived().at("fitting_z4_f1_size").get<std::size_t>());
  EXPECT_TRUE(c4.ideals[2].is_whole());
  EXPECT_TRUE(c4.at(-1).is_zero());
  EXPECT_TRUE(c4.at(7).is_whole());
}

TEST(FittingIdeals, MinorCap) {
  const RingPtr z2 = build_zmod(2);
  Matrix big(4, 4);
  EXPECT_THROW(fitting_ideals(z2, big, 3), CapExceeded);
  EXPECT_NO_THROW(fitting_ideals(z2, big, 4));
}

TEST(ConstantRank, Examples) {
  const RingPtr z4 = build_zmod(4), z6 = build_zmod(6);
  EXPECT_TRUE(is_projective_constant_rank(*present(z4, Matrix(2, 3, {2, 1, 1, 0, 2, 2})), 1));
  EXPECT_FALSE(is_projective_constant_rank(*present(z6, Matrix(1, 1, {2})), 1));
  EXPECT_TRUE(is_projective_constant_rank(*free_module(z6, 1), 1));
  EXPECT_FALSE(is_projective_constant_rank(*free_module(z6, 1), 2));
}

TEST(FittingProperties, ZeroColumnsChangeNothing) {
  std::mt19937 gen(3);
  for (std::size_t n : {6, 8, 12}) {
    const RingPtr r = build_zmod(n);
    std::uniform_int_distribution<Elem> e(0, static_cast<Elem>(n - 1));
    for (int k = 0; k < 30; ++k) {
      Matrix a(2, 2);
      for (Elem& x : a.data) x = e(gen);
      Matrix padded(2, 4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) padded.at(i, j + 1) = a.at(i, j);
      const FittingChain c1 = fitting_ideals(r, a), c2 = fitting_ideals(r, padded);
      EXPECT_EQ(c1.ideals, c2.ideals) << a.to_spec();
    }
  }
}

TEST(FittingProperties, PresentationIndependent) {
  // the presentation stored on a module and a fresh one from module_from_action
  std::mt19937 gen(5);
  for (std::size_t n : {6, 12}) {
    const RingPtr r = build_zmod(n);
    std::uniform_int_distribution<Elem> e(0, static_cast<Elem>(n - 1));
    for (int k = 0; k < 25; ++k) {
      Matrix a(2, 3);
      for (Elem& x : a.data) x = e(gen);
      const ModulePtr m = present(r, a);
      std::vector<Elem> add(m->size() * m->size()), act(n * m->size());
      for (Elem x = 0; x < m->size(); ++x) {
        for (Elem y = 0; y < m->size(); ++y) add[x * m->size() + y] = m->add(x, y);
        for (Elem s = 0; s < n; ++s) act[s * m->size() + x] = m->act(s, x);
      }
      const ModulePtr again = module_from_action(r, m->size(), std::move(add), std::move(act));
      const FittingChain c1 = fitting_ideals(*m), c2 = fitting_ideals(*again);
      for (long i = 0; i <= 3; ++i) EXPECT_EQ(c1.at(i), c2.at(i)) << a.to_spec();
    }
  }
}

TEST(FittingProperties, ConstantRankIffProjectiveWithThatRank) {
  std::mt19937 gen(17);
  for (std::size_t n : {4, 6, 12}) {
    const RingPtr r = build_zmod(n);
    std::uniform_int_distribution<Elem> e(0, static_cast<Elem>(n - 1));
    for (int trial = 0; trial < 40; ++trial) {
      Matrix a(1 + trial % 3, 1 + trial % 4);
      for (Elem& x : a.data) x = e(gen);
      const ModulePtr m = present(r, a);
      const auto ranks = local_ranks(m);
      for (long k = 0; k <= 3; ++k) {
        bool expected = is_projective(m);
        for (const auto& rk : ranks) expected = expected && rk == std::optional<std::size_t>(k);
        EXPECT_EQ(is_projective_constant_rank(*m, k), expected) << a.to_spec() << " k=" << k;
      }
    }
  }
}
