#include <gtest/gtest.h>

#include "semireg/classify.hpp"
#include "semireg/localization.hpp"
#include "semireg/module_structure.hpp"
#include "semireg/periodicity.hpp"
#include "semireg/ring.hpp"
#include "test_support.hpp"

using namespace semireg;
using semireg::test::derived;
using semireg::test::derived_list;

namespace {

const RingPtr& f_f2() {
  static const RingPtr r = parse_ring_spec("trivext:(zmod:2;free:2)");
  return r;
}

struct CorpusEntry {
  RingPtr ring;
  ClassificationReport report;
};

// classify_ring asserts the implication lattice, so building this list is
// itself a check on every corpus ring
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const RingPtr& r : test::small_corpus_rings()) out.push_back({r, classify_ring(r)});
    return out;
  }();
  return entries;
}

bool flag(const CorpusEntry& e, const char* name) { return e.report.flags.at(name); }

}  // namespace

TEST(Semiregular, Examples) {
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_TRUE(is_semiregular(build_zmod(n)).value) << n;
  const Verdict v = is_semiregular(f_f2());
  EXPECT_FALSE(v.value);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, "ideal");
  EXPECT_EQ(v.value, derived().at("f2_square2_semiregular").get<bool>());
  EXPECT_EQ(is_semiregular(parse_ring_spec("trivext:(zmod:2;free:1)")).value,
            derived().at("f2_square1_semiregular").get<bool>());
  EXPECT_TRUE(is_semiregular(build_zmod(7)).value);
}

TEST(ValuationAndArithmetical, Examples) {
  const RingPtr z12 = build_zmod(12), z8 = build_zmod(8);
  EXPECT_TRUE(is_bezout(z12).value);
  EXPECT_TRUE(is_arithmetical(z12).value);
  EXPECT_FALSE(is_valuation(z12).value);
  EXPECT_FALSE(is_local(z12).value);
  EXPECT_TRUE(is_valuation(z8).value);
  EXPECT_TRUE(is_local(z8).value);
  EXPECT_FALSE(is_arithmetical(f_f2()).value);
  EXPECT_FALSE(is_distributive_lattice(f_f2()).value);
  EXPECT_FALSE(is_bezout(f_f2()).value);
}

TEST(OneSemiregular, Examples) {
  EXPECT_TRUE(is_1_semiregular(build_zmod(4)).value);
  const Verdict z8 = is_1_semiregular(build_zmod(8));
  EXPECT_FALSE(z8.value);
  ASSERT_TRUE(z8.witness.has_value());
  EXPECT_EQ(z8.witness->data, (std::vector<Elem>{2}));  // the maximal ideal (2)
}

TEST(OneSemiregular, CubefreeLaw) {
  const auto expected = derived_list("zmod_one_semiregular_2_64");
  EXPECT_EQ(expected, derived_list("cubefree_2_64"));
  std::vector<Elem> got;
  for (Elem n = 2; n <= 64; ++n)
    if (is_1_semiregular(build_zmod(n)).value) got.push_back(n);
  EXPECT_EQ(got, expected);
}

TEST(OneSemiregular, MatchesCyclicOracleForSmallZmod) {
  for (std::size_t n = 2; n <= 16; ++n) {
    const RingPtr r = build_zmod(n);
    EXPECT_EQ(is_1_semiregular(r).value, all_cyclic_1_periodic(r).all_positive) << n;
  }
}

TEST(Condition4, Examples) {
  const RingPtr z4 = build_zmod(4), z6 = build_zmod(6);
  const Condition4Result c4 = tgsr_condition4_witness(z4);
  EXPECT_TRUE(c4.holds);
  ASSERT_EQ(c4.table.size(), 4u);
  EXPECT_EQ(c4.table[2].e1, 0u);
  EXPECT_EQ(c4.table[2].e2, 1u);
  EXPECT_EQ(c4.table[0].e1, 1u);
  EXPECT_EQ(c4.table[0].e2, 0u);
  const Condition4Result c6 = tgsr_condition4_witness(z6);
  EXPECT_TRUE(c6.holds);
  const auto& e = c6.table[2];
  // R/2R ~ Re1 + Re2/R2e2 with e1, e2 idempotent
  for (Elem x : {e.e1, e.e2}) EXPECT_EQ(z6->mul(x, x), x);
  const Condition4Result c8 = tgsr_condition4_witness(build_zmod(8));
  EXPECT_FALSE(c8.holds);
  EXPECT_TRUE(c8.failing_element.has_value());
}

TEST(Condition5, Examples) {
  EXPECT_TRUE(tgsr_condition5(build_zmod(4)).value);
  EXPECT_FALSE(tgsr_condition5(build_zmod(8)).value);
  for (const char* s : {"zmod:2", "zmod:30", "prod:[zmod:2,zmod:2,zmod:2]", "prod:[zmod:3,zmod:5]"})
    EXPECT_TRUE(tgsr_condition5(parse_ring_spec(s)).value) << s;
}

TEST(TwoSemiregular, Examples) {
  for (std::size_t n = 1; n <= 64; ++n) EXPECT_TRUE(is_2_semiregular(build_zmod(n)).value) << n;
  EXPECT_FALSE(is_2_semiregular(f_f2()).value);
  EXPECT_TRUE(is_2_semiregular(parse_ring_spec("prod:[zmod:8,zmod:9]")).value);
}

TEST(TwoSemiregular, MatchesCyclicOracleForSmallZmod) {
  for (std::size_t n = 2; n <= 12; ++n)
    EXPECT_TRUE(all_cyclic_2_periodic(build_zmod(n)).all_positive) << n;
}

TEST(Edr, Examples) {
  EXPECT_TRUE(is_edr(build_zmod(12)).value);
  EXPECT_TRUE(is_edr(build_zmod(2)).value);
  EXPECT_FALSE(is_edr(f_f2()).value);
}

TEST(Edr, DiagonalizationValidator) {
  const RingPtr z12 = build_zmod(12);
  EXPECT_EQ(diagonalization_depth(z12, Matrix(2, 2, {1, 0, 0, 1})), std::optional<int>(0));
  EXPECT_TRUE(diagonalization_depth(z12, Matrix(2, 2, {2, 3, 0, 6})).has_value());
  EXPECT_TRUE(diagonalization_depth(build_zmod(6), Matrix(2, 3, {2, 3, 1, 4, 0, 5})).has_value());
  EXPECT_EQ(diagonalization_depth(z12, Matrix(2, 2, {0, 1, 0, 0}), 0), std::nullopt);
}

TEST(QuasiFrobenius, Examples) {
  EXPECT_TRUE(is_1_qf(build_zmod(4)).value);
  EXPECT_FALSE(is_1_qf(build_zmod(8)).value);
  EXPECT_TRUE(is_2_qf(build_zmod(8)).value);
  EXPECT_TRUE(is_1_qf(build_zmod(6)).value);
  EXPECT_FALSE(is_2_qf(f_f2()).value);
}

TEST(ZeroKrull, Examples) {
  const RingPtr z12 = build_zmod(12);
  const ZeroKrullDecomposition d = zero_krull_decomposition(z12);
  ASSERT_EQ(d.x.size(), 1u);
  EXPECT_EQ(d.x[0], ideal_generated(z12, std::vector<Elem>{3}));
  EXPECT_EQ(test::to_vec(d.i.elements()), derived_list("z12_zero_krull_ideal"));
  EXPECT_EQ(build_quotient(z12, d.i.generators()).ring->size(), 3u);

  const RingPtr v = parse_ring_spec("prod:[zmod:2,zmod:3]");
  const ZeroKrullDecomposition dv = zero_krull_decomposition(v);
  EXPECT_EQ(dv.x.size(), 2u);
  EXPECT_TRUE(dv.i.is_zero());

  const ZeroKrullDecomposition d8 = zero_krull_decomposition(build_zmod(8));
  EXPECT_TRUE(d8.x.empty());
  EXPECT_TRUE(d8.i.is_whole());
}

TEST(TrivialExtensionCriterion, Examples) {
  const RingPtr f2 = build_zmod(2), z4 = build_zmod(4), z6 = build_zmod(6);
  const ModulePtr e1 = free_module(f2, 1);
  EXPECT_TRUE(trivext_predicate(f2, e1).holds);
  EXPECT_TRUE(is_1_semiregular(build_trivial_extension(f2, *e1)).value);

  const ModulePtr e2 = cyclic_module(z4, std::vector<Elem>{2});
  const TrivextBreakdown b = trivext_predicate(z4, e2);
  EXPECT_FALSE(b.holds);
  EXPECT_FALSE(b.localizations_are_fields);
  EXPECT_FALSE(is_1_semiregular(build_trivial_extension(z4, *e2)).value);

  const ModulePtr e3 = ideal_as_module(ideal_generated(z6, std::vector<Elem>{3})).module;
  EXPECT_TRUE(trivext_predicate(z6, e3).holds);
  EXPECT_TRUE(is_1_semiregular(build_trivial_extension(z6, *e3)).value);
}

TEST(TrivialExtensionCriterion, EveryIdealOfZ6) {
  const RingPtr z6 = build_zmod(6);
  for (const Ideal& b : enumerate_ideals(z6)) {
    if (b.is_zero()) continue;
    const ModulePtr e = ideal_as_module(b).module;
    EXPECT_TRUE(trivext_predicate(z6, e).holds);
    EXPECT_TRUE(is_1_semiregular(build_trivial_extension(z6, *e)).value);
  }
}

TEST(Duplication, Examples) {
  const DuplicationResult z4 = duplication_predicate(build_zmod(4), std::vector<Elem>{2});
  EXPECT_FALSE(z4.ideal_pure);
  EXPECT_FALSE(z4.fp_injective_case || z4.semiregular_case || z4.one_semiregular_case);
  EXPECT_TRUE(z4.agrees());

  const DuplicationResult z6 = duplication_predicate(build_zmod(6), std::vector<Elem>{2});
  EXPECT_TRUE(z6.ideal_pure);
  EXPECT_TRUE(z6.fp_injective_case && z6.semiregular_case && z6.one_semiregular_case);
  EXPECT_TRUE(z6.agrees());

  for (const char* s : {"zmod:4", "zmod:8", "prod:[zmod:2,zmod:4]"}) {
    const RingPtr r = parse_ring_spec(s);
    const DuplicationResult d = duplication_predicate(r, std::vector<Elem>{});
    EXPECT_EQ(d.direct_fp_injective, is_self_fp_injective(r)) << s;
    EXPECT_EQ(d.direct_semiregular, is_semiregular(r).value) << s;
    EXPECT_EQ(d.direct_one_semiregular, is_1_semiregular(r).value) << s;
  }
}

TEST(SelfInjective, Examples) {
  EXPECT_TRUE(is_self_fp_injective(build_zmod(12)));
  EXPECT_TRUE(is_self_fp_injective(parse_ring_spec("trivext:(zmod:2;free:1)")));
  EXPECT_FALSE(is_self_fp_injective(f_f2()));
}

TEST(ClassifyRing, Examples) {
  const auto z4 = classify_ring(build_zmod(4)).flags;
  for (const char* f : {"local", "valuation", "bezout", "arithmetical", "semiregular", "edr", "one_semiregular",
                        "two_semiregular", "one_qf", "two_qf"})
    EXPECT_TRUE(z4.at(f)) << f;
  EXPECT_FALSE(z4.at("vnr"));
  EXPECT_FALSE(z4.at("field"));

  auto z8 = classify_ring(build_zmod(8)).flags;
  EXPECT_FALSE(z8.at("one_semiregular"));
  EXPECT_FALSE(z8.at("one_qf"));
  z8["one_semiregular"] = true;
  z8["one_qf"] = true;
  EXPECT_EQ(z8, z4);

  for (const auto& [name, value] : classify_ring(build_zmod(2)).flags) EXPECT_TRUE(value) << name;
}

TEST(ClassifyRing, NotesAndWitnesses) {
  const ClassificationReport r = classify_ring(f_f2());
  EXPECT_EQ(r.size, 8u);
  EXPECT_TRUE(r.witnesses.contains("semiregular"));
  EXPECT_TRUE(r.witnesses.contains("arithmetical"));
  EXPECT_FALSE(r.notes.empty());
}

TEST(Lattice, DetectsViolations) {
  std::map<std::string, bool> flags;
  for (const char* f : kFlagNames) flags[f] = false;
  EXPECT_FALSE(lattice_violation(flags).has_value());
  flags["field"] = true;
  EXPECT_TRUE(lattice_violation(flags).has_value());
  flags = classify_ring(build_zmod(6)).flags;
  EXPECT_FALSE(lattice_violation(flags).has_value());
  flags["edr"] = false;
  EXPECT_TRUE(lattice_violation(flags).has_value());
}

// Property suites over the small corpus.

TEST(CorpusProperties, EveryReportSatisfiesTheLattice) {
  ASSERT_GE(corpus().size(), 25u);
  for (const auto& e : corpus()) EXPECT_FALSE(lattice_violation(e.report.flags).has_value()) << e.ring->spec();
}

TEST(CorpusProperties, OneSemiregularEquivalences) {
  for (const auto& e : corpus()) {
    const bool one = flag(e, "one_semiregular");
    EXPECT_EQ(tgsr_condition4_witness(e.ring).holds, one) << e.ring->spec();
    EXPECT_EQ(tgsr_condition5(e.ring).value, one) << e.ring->spec();
    EXPECT_EQ(all_cyclic_1_periodic(e.ring).all_positive, one) << e.ring->spec();
  }
}

TEST(CorpusProperties, TwoSemiregularEquivalences) {
  for (const auto& e : corpus()) {
    const bool two = flag(e, "two_semiregular");
    EXPECT_EQ(flag(e, "semiregular") && flag(e, "arithmetical"), two) << e.ring->spec();
    EXPECT_EQ(all_cyclic_2_periodic(e.ring).all_positive, two) << e.ring->spec();
  }
}

TEST(CorpusProperties, OneSemiregularGivesEdrAndSemiregular) {
  for (const auto& e : corpus())
    if (flag(e, "one_semiregular")) {
      EXPECT_TRUE(flag(e, "edr")) << e.ring->spec();
      EXPECT_TRUE(flag(e, "semiregular")) << e.ring->spec();
    }
}

TEST(CorpusProperties, SemiregularEdrGivesTwoSemiregular) {
  for (const auto& e : corpus())
    if (flag(e, "semiregular") && flag(e, "edr")) EXPECT_TRUE(flag(e, "two_semiregular")) << e.ring->spec();
}

TEST(CorpusProperties, LocalizationsInherit) {
  for (const auto& e : corpus())
    for (const Localization& loc : all_localizations(e.ring)) {
      if (flag(e, "one_semiregular")) EXPECT_TRUE(is_1_semiregular(loc.ring).value) << e.ring->spec();
      if (flag(e, "two_semiregular")) EXPECT_TRUE(is_2_semiregular(loc.ring).value) << e.ring->spec();
    }
}

TEST(CorpusProperties, QuotientsInherit) {
  for (const auto& e : corpus()) {
    if (!flag(e, "one_semiregular")) continue;
    for (const Ideal& a : enumerate_ideals(e.ring))
      EXPECT_TRUE(is_1_semiregular(build_quotient(e.ring, a.generators()).ring).value) << e.ring->spec();
  }
}

TEST(CorpusProperties, ProductsAreConjunctions) {
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j) {
      if (c[i].ring->size() * c[j].ring->size() > 64) continue;
      const RingPtr p = build_product({c[i].ring, c[j].ring});
      EXPECT_EQ(is_1_semiregular(p).value, flag(c[i], "one_semiregular") && flag(c[j], "one_semiregular"))
          << p->spec();
      EXPECT_EQ(is_2_semiregular(p).value, flag(c[i], "two_semiregular") && flag(c[j], "two_semiregular"))
          << p->spec();
    }
}

TEST(CorpusProperties, ChainRingEquivalences) {
  std::size_t checked = 0;
  for (const auto& e : corpus()) {
    if (!flag(e, "local") || flag(e, "field")) continue;
    ++checked;
    const RingPtr& r = e.ring;
    const bool two = flag(e, "two_semiregular");
    const bool val_semireg = flag(e, "valuation") && flag(e, "semiregular");
    bool nonzero_annihilator = false;
    for (Elem a = 0; a < r->size(); ++a)
      if (a != r->zero() && !annihilator(r, std::vector<Elem>{a}).is_zero()) nonzero_annihilator = true;
    const ModulePtr p = ideal_as_module(maximal_ideals(r).front()).module;
    EXPECT_EQ(two, val_semireg) << r->spec();
    EXPECT_EQ(two, flag(e, "valuation") && nonzero_annihilator) << r->spec();
    EXPECT_EQ(two, flag(e, "bezout") && !is_flat(p)) << r->spec();
  }
  EXPECT_GE(checked, 5u);
}

TEST(CorpusProperties, DistributivityMatchesArithmetical) {
  for (const auto& e : corpus())
    EXPECT_EQ(is_distributive_lattice(e.ring).value, flag(e, "arithmetical")) << e.ring->spec();
}

TEST(CorpusProperties, LocalFactorsRebuildTheRing) {
  for (const auto& e : corpus()) {
    std::size_t product = 1;
    for (const Ideal& f : local_factors(e.ring)) product *= f.size();
    EXPECT_EQ(product, e.ring->size()) << e.ring->spec();
  }
}
