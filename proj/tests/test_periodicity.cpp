#include <gtest/gtest.h>

#include "semireg/classify.hpp"
#include "semireg/module_structure.hpp"
#include "semireg/periodicity.hpp"
#include "semireg/ring.hpp"
#include "test_support.hpp"

using namespace semireg;
using semireg::test::derived;
using semireg::test::derived_list;

namespace {

ModulePtr cyc(const RingPtr& r, std::vector<Elem> gens) { return cyclic_module(r, gens); }

std::vector<Elem> as_vec(const UvstWitness& w) { return {w.a, w.b, w.u, w.v, w.s, w.t}; }

ShortExact from_certificate(const PeriodicityCertificate& c) { return {c.maps[0], c.maps[1]}; }

}  // namespace

TEST(Projectives, Examples) {
  const auto z4 = enumerate_projectives_up_to_size(build_zmod(4), 16);
  ASSERT_EQ(z4.size(), derived().at("projectives_z4_cap16").get<std::size_t>());
  EXPECT_EQ(z4[0].module->size(), 1u);
  EXPECT_EQ(z4[1].module->size(), 4u);
  EXPECT_EQ(z4[2].module->size(), 16u);
  for (const auto& p : z4) EXPECT_TRUE(p.free);

  // 0, R e3, R e4, (R e3)^2, R; (R e3)^2 has 4 elements and fits under the cap
  const auto z6 = enumerate_projectives_up_to_size(build_zmod(6), 6);
  ASSERT_EQ(z6.size(), derived().at("projectives_z6_cap6").get<std::size_t>());
  std::vector<std::size_t> sizes;
  for (const auto& p : z6) sizes.push_back(p.module->size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3, 4, 6}));

  const auto f = enumerate_projectives_up_to_size(build_zmod(2), 4);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2].module->size(), 4u);
}

TEST(Projectives, AllEnumeratedAreProjectiveAndDistinct) {
  for (const RingPtr& r : test::small_corpus_rings()) {
    const auto ps = enumerate_projectives_up_to_size(r, 64);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_TRUE(is_projective(ps[i].module)) << r->spec();
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (ps[i].module->size() == ps[j].module->size())
          EXPECT_FALSE(is_isomorphic(ps[i].module, ps[j].module).isomorphic) << r->spec();
    }
  }
}

TEST(OneOracle, Examples) {
  const RingPtr z4 = build_zmod(4), z8 = build_zmod(8);
  const PeriodicityCertificate c = is_1_periodic_oracle(cyc(z4, {2}));
  ASSERT_EQ(c.kind, CertificateKind::OnePeriodic);
  EXPECT_EQ(c.modules[1]->size(), 4u);
  EXPECT_TRUE(c.free_terms);
  EXPECT_EQ(c.maps[0].image_elements(), (std::vector<Elem>{0, 2}));
  EXPECT_TRUE(all_hold(c.transcript));

  const PeriodicityCertificate n = is_1_periodic_oracle(cyc(z8, {2}));
  EXPECT_EQ(n.kind, CertificateKind::Negative);
  EXPECT_NE(n.search_space.find("projectives of size 4: 0"), std::string::npos) << n.search_space;

  const PeriodicityCertificate zero = is_1_periodic_oracle(cyc(z4, {1}));
  ASSERT_TRUE(zero.positive());
  EXPECT_TRUE(zero.modules[1]->is_zero());

  EXPECT_THROW(is_1_periodic_oracle(free_module(z8, 2), 16), CapExceeded);
}

TEST(TwoOracle, Examples) {
  const RingPtr z8 = build_zmod(8), z4 = build_zmod(4);
  const PeriodicityCertificate c = is_2_periodic_oracle(cyc(z8, {2}));
  ASSERT_EQ(c.kind, CertificateKind::TwoPeriodic);
  ASSERT_EQ(c.modules.size(), 4u);
  EXPECT_EQ(c.modules[1]->size(), 8u);
  EXPECT_EQ(c.modules[2]->size(), 8u);
  EXPECT_EQ(c.maps[0].image_elements(), (std::vector<Elem>{0, 4}));
  EXPECT_TRUE(c.free_terms);

  EXPECT_TRUE(is_2_periodic_oracle(cyc(z4, {2})).positive());
  EXPECT_TRUE(is_2_periodic_oracle(free_module(z4, 1)).positive());
  EXPECT_TRUE(is_1_periodic_oracle(free_module(z4, 1)).positive());
}

TEST(TwoOracle, NegativeOverNonArithmeticalRing) {
  // F x| F^2: the residue field has a two-dimensional syzygy
  const RingPtr r = parse_ring_spec("trivext:(zmod:2;free:2)");
  const ModulePtr k = cyc(r, {1, 2});
  EXPECT_EQ(k->size(), 2u);
  EXPECT_FALSE(is_2_periodic_oracle(k).positive());
  EXPECT_FALSE(all_cyclic_2_periodic(r).all_positive);
}

TEST(Oracles, CertificateMiddleTermsAreProjectiveAndFlat) {
  for (const RingPtr& r : test::small_corpus_rings())
    for (const ModulePtr& m : modules_up_to_size(r, 8)) {
      // the projective cover of a three-generator module over a 16-element ring has 4096 elements
      if (m->num_generators() > 2 && r->size() > 8) continue;
      for (const PeriodicityCertificate& c : {is_1_periodic_oracle(m), is_2_periodic_oracle(m)}) {
        if (!c.positive()) continue;
        EXPECT_TRUE(all_hold(c.transcript));
        for (std::size_t i = 1; i + 1 < c.modules.size(); ++i) {
          EXPECT_TRUE(is_projective(c.modules[i])) << r->spec();
          EXPECT_TRUE(is_flat(c.modules[i])) << r->spec();
        }
      }
    }
}

TEST(Oracles, OnePeriodicImpliesTwoPeriodic) {
  for (const RingPtr& r : test::small_corpus_rings())
    for (const ModulePtr& m : cyclic_modules(r))
      if (is_1_periodic_oracle(m).positive()) EXPECT_TRUE(is_2_periodic_oracle(m).positive()) << r->spec();
}

TEST(Oracles, ProjectivesArePeriodic) {
  for (const RingPtr& r : test::small_corpus_rings())
    for (const auto& p : enumerate_projectives_up_to_size(r, 8)) {
      EXPECT_TRUE(is_1_periodic_oracle(p.module).positive()) << r->spec();
      EXPECT_TRUE(is_2_periodic_oracle(p.module).positive()) << r->spec();
    }
}

TEST(Oracles, DirectSumsOfPeriodicModulesArePeriodic) {
  for (const RingPtr& r : test::small_corpus_rings()) {
    std::vector<ModulePtr> periodic;
    for (const ModulePtr& m : cyclic_modules(r))
      if (m->size() <= 4 && is_1_periodic_oracle(m).positive()) periodic.push_back(m);
    for (std::size_t i = 0; i < periodic.size(); ++i)
      for (std::size_t j = i; j < periodic.size(); ++j)
        EXPECT_TRUE(is_1_periodic_oracle(direct_sum(periodic[i], periodic[j])).positive()) << r->spec();
  }
}

TEST(Uvst, FrozenWitnesses) {
  EXPECT_EQ(as_vec(*find_uvst_witness(build_zmod(8), 2)), derived_list("uvst_z8_2"));
  EXPECT_EQ(as_vec(*find_uvst_witness(build_zmod(2), 0)), derived_list("uvst_z2_0"));
  EXPECT_EQ(as_vec(*find_uvst_witness(build_zmod(5), 0)), derived_list("uvst_z5_0"));
  EXPECT_EQ(as_vec(*find_uvst_witness(build_zmod(4), 1)), derived_list("uvst_z4_1"));
}

TEST(Uvst, ExistsOnTwoSemiregularCorpusRings) {
  for (const RingPtr& r : test::small_corpus_rings()) {
    if (!is_2_semiregular(r).value) continue;
    for (Elem x = 0; x < r->size(); ++x) {
      const auto w = find_uvst_witness(r, x);
      ASSERT_TRUE(w.has_value()) << r->spec() << " x=" << x;
      EXPECT_NO_THROW(build_lproj_module(r, x, w->a, w->b, w->u, w->v, w->s, w->t)) << r->spec() << " x=" << x;
    }
  }
}

TEST(Lproj, Examples) {
  const RingPtr z4 = build_zmod(4), z8 = build_zmod(8);
  const LprojResult g4 = build_lproj_module(z4, 2, 2, 2, 1, 1, 2, 0);
  EXPECT_EQ(g4.g->size(), 4u);
  EXPECT_TRUE(is_isomorphic(g4.g, free_module(z4, 1)).isomorphic);
  EXPECT_EQ(g4.maps[0].source()->size(), 2u);
  EXPECT_EQ(g4.maps[1].target()->size(), 2u);
  EXPECT_TRUE(all_hold(g4.transcript));

  const LprojResult g8 = build_lproj_module(z8, 2, 4, 4, 1, 1, 4, 0);
  EXPECT_TRUE(is_isomorphic(g8.g, free_module(z8, 1)).isomorphic);
  EXPECT_TRUE(g8.fitting.ideals[0].is_zero());
  EXPECT_TRUE(g8.fitting.ideals[1].is_whole());

  // r a unit: R/Rr = 0 and G ~ R
  const LprojResult unit = build_lproj_module(z8, 3, 0, 0, 0, 0, 0, 0);
  EXPECT_TRUE(unit.maps[0].source()->is_zero());
  EXPECT_EQ(unit.g->size(), 8u);
}

TEST(Lproj, PreconditionsAreNamed) {
  const RingPtr z4 = build_zmod(4);
  EXPECT_NO_THROW(build_lproj_module(z4, 2, 2, 2, 1, 1, 2, 2));
  try {
    build_lproj_module(z4, 2, 2, 2, 1, 1, 0, 0);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("su = a(1+t)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(build_lproj_module(z4, 2, 1, 1, 1, 1, 2, 0), PreconditionError);  // (0:2) != (1)
  EXPECT_THROW(build_lproj_module(parse_ring_spec("trivext:(zmod:2;free:2)"), 1, 1, 2, 0, 0, 0, 0),
               PreconditionError);
}

TEST(Splice, CyclicOverZ8) {
  const RingPtr z8 = build_zmod(8);
  const PeriodicityCertificate c = is_2_periodic_oracle(cyc(z8, {2}));
  const SpliceResult s = splice_2F(splice_input_from(c));
  EXPECT_EQ(s.g->size(), 8u);
  EXPECT_TRUE(is_isomorphic(s.g, free_module(z8, 1)).isomorphic);
  EXPECT_TRUE(all_hold(s.transcript));
}

TEST(Splice, ProjectiveInputSplits) {
  // W projective: G ~ W + ker(alpha)
  const RingPtr z6 = build_zmod(6);
  const ModulePtr w = cyc(z6, {3});
  const PeriodicityCertificate c = is_2_periodic_oracle(w);
  ASSERT_TRUE(c.positive());
  const SpliceInput in = splice_input_from(c);
  const SpliceResult s = splice_2F(in);
  const auto ker = submodule(in.alpha.source(), in.alpha.kernel_elements());
  EXPECT_TRUE(is_isomorphic(s.g, direct_sum(w, ker.module)).isomorphic);
}

TEST(Splice, ZeroModule) {
  const RingPtr z4 = build_zmod(4);
  const PeriodicityCertificate c = is_2_periodic_oracle(cyc(z4, {1}));
  const SpliceResult s = splice_2F(splice_input_from(c));
  EXPECT_TRUE(s.g->is_zero());
}

TEST(Splice, EveryTwoPeriodicCyclicModule) {
  for (const RingPtr& r : test::small_corpus_rings())
    for (const ModulePtr& m : cyclic_modules(r)) {
      const PeriodicityCertificate c = is_2_periodic_oracle(m);
      if (!c.positive()) continue;
      const SpliceResult s = splice_2F(splice_input_from(c));
      EXPECT_TRUE(is_projective(s.g)) << r->spec();
    }
}

TEST(Summands, QuotientRecoversFirstMiddleTerm) {
  for (const RingPtr& r : test::small_corpus_rings()) {
    if (r->size() > 8) continue;
    std::vector<PeriodicityCertificate> certs;
    for (const ModulePtr& m : cyclic_modules(r)) {
      auto c = is_1_periodic_oracle(m);
      if (c.positive() && m->size() <= 4) certs.push_back(std::move(c));
    }
    for (const auto& a : certs)
      for (const auto& b : certs)
        EXPECT_TRUE(summand_quotient_matches(from_certificate(a), from_certificate(b))) << r->spec();
  }
}

TEST(Pairs, FlatnessExamples) {
  const RingPtr f2 = build_zmod(2);
  const ModulePtr a2 = free_module(f2, 2);
  // shift (x, y) -> (y, 0); element index x*2 + y
  const PairModule shift = make_pair_module(a2, ModuleHom::from_table(a2, a2, {0, 2, 0, 2}));
  EXPECT_TRUE(pair_flatness(shift));
  const ModulePtr a = free_module(f2, 1);
  EXPECT_FALSE(pair_flatness(make_pair_module(a, ModuleHom::zero(a, a))));
  const ModulePtr z = cyc(f2, {1});
  EXPECT_TRUE(pair_flatness(make_pair_module(z, ModuleHom::zero(z, z))));
  EXPECT_THROW(make_pair_module(a2, ModuleHom::identity(a2)), PreconditionError);
  const ModulePtr z4 = free_module(build_zmod(4), 1);
  EXPECT_THROW(pair_flatness(make_pair_module(z4, ModuleHom::zero(z4, z4))), PreconditionError);
}

TEST(Pairs, CharTwoConstruction) {
  const RingPtr f2 = build_zmod(2);
  const ModulePtr a = free_module(f2, 1);
  const PeriodicityCertificate c = char2_F_periodic(make_pair_module(a, ModuleHom::zero(a, a)));
  ASSERT_EQ(c.kind, CertificateKind::OnePeriodic);
  EXPECT_TRUE(is_isomorphic(c.modules[1], free_module(pair_ring(f2), 1)).isomorphic);
  EXPECT_TRUE(c.free_terms);

  const ModulePtr z = cyc(f2, {1});
  const PeriodicityCertificate zero = char2_F_periodic(make_pair_module(z, ModuleHom::zero(z, z)));
  EXPECT_TRUE(zero.positive());
  EXPECT_TRUE(zero.modules[1]->is_zero());

  const RingPtr f2f2 = parse_ring_spec("prod:[zmod:2,zmod:2]");
  const ModulePtr b = free_module(f2f2, 1);
  const PeriodicityCertificate p = char2_F_periodic(make_pair_module(b, ModuleHom::zero(b, b)));
  EXPECT_TRUE(p.positive());
  EXPECT_TRUE(is_flat(p.modules[1]));

  const ModulePtr f3 = free_module(build_zmod(3), 1);
  EXPECT_THROW(char2_F_periodic(make_pair_module(f3, ModuleHom::zero(f3, f3))), PreconditionError);
}

TEST(Pairs, EnumerationOverF2) {
  const auto pairs = enumerate_pair_modules(build_zmod(2), 16);
  EXPECT_EQ(pairs.size(), derived().at("pair_modules_f2_up_to_16").get<std::size_t>());
  for (const PairModule& p : pairs) {
    const PeriodicityCertificate c = char2_F_periodic(p);
    EXPECT_TRUE(c.positive());
    EXPECT_TRUE(all_hold(c.transcript));
    EXPECT_EQ(pair_flatness(p), is_projective(induced_module(p)));
  }
}

TEST(Pairs, InducedModulesAreModules) {
  for (const PairModule& p : enumerate_pair_modules(parse_ring_spec("prod:[zmod:2,zmod:2]"), 8)) {
    EXPECT_NO_THROW(validate_module(*induced_module(p)));
    EXPECT_TRUE(char2_F_periodic(p).positive());
  }
}
