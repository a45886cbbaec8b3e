#include "semireg/verify.hpp"

#include <algorithm>
#include <random>

#include "semireg/errors.hpp"
#include "semireg/localization.hpp"
#include "semireg/module_structure.hpp"
#include "semireg/periodicity.hpp"
#include "semireg/spec_parser.hpp"

namespace semireg {

namespace {

using Json = nlohmann::json;

CheckOutcome outcome(bool pass, std::string detail, Json data = Json::object()) {
  return CheckOutcome{{}, pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail), std::move(data)};
}

CheckOutcome not_applicable(std::string why) {
  return CheckOutcome{{}, CheckStatus::NotApplicable, std::move(why), Json::object()};
}

std::vector<Elem> elements_of(const Ideal& i) { return {i.elements().begin(), i.elements().end()}; }

// Every cyclic module of r has at most |r| elements.
bool oracle_fits(const RingPtr& r, std::size_t cap) { return r->size() <= cap; }

Json oracle_json(const OracleSweep& s) {
  Json j{{"all_positive", s.all_positive}};
  if (s.first_failure) j["first_failure_annihilator"] = elements_of(*s.first_failure);
  return j;
}

CheckOutcome check_tgsr(const RingPtr& r, std::size_t cap) {
  const Verdict one = is_1_semiregular(r);
  const Condition4Result c4 = tgsr_condition4_witness(r);
  const Verdict c5 = tgsr_condition5(r);
  Json data{{"maximal_ideals_locally_zero_or_simple", one.value}, {"idempotent_pairs", c4.holds}, {"arithmetical_with_pure_squares", c5.value}};
  if (c4.failing_element) data["idempotent_pairs_failing_element"] = *c4.failing_element;
  bool agree = one.value == c4.holds && one.value == c5.value;
  if (oracle_fits(r, cap)) {
    const OracleSweep s = all_cyclic_1_periodic(r, cap);
    data["cyclic_oracle"] = oracle_json(s);
    agree = agree && s.all_positive == one.value;
  } else {
    data["cyclic_oracle"] = "skipped: ring larger than the oracle cap";
  }
  return outcome(agree, agree ? "conditions agree" : "conditions disagree", data);
}

CheckOutcome check_t2gsr(const RingPtr& r, std::size_t cap) {
  const bool two = is_2_semiregular(r).value;
  const bool semilocal = is_semiregular(r).value && is_arithmetical(r).value;
  Json data{{"two_semiregular", two}, {"semiregular_and_arithmetical", semilocal}};
  bool agree = two == semilocal;
  if (oracle_fits(r, cap)) {
    const OracleSweep s = all_cyclic_2_periodic(r, cap);
    data["oracle"] = oracle_json(s);
    agree = agree && s.all_positive == two;
  } else {
    data["oracle"] = "skipped: ring larger than the oracle cap";
  }
  if (two) {
    std::size_t built = 0;
    for (Elem x = 0; x < r->size(); ++x) {
      auto w = find_uvst_witness(r, x);
      if (!w) {
        data["missing_witness"] = x;
        agree = false;
        break;
      }
      build_lproj_module(r, x, w->a, w->b, w->u, w->v, w->s, w->t);
      ++built;
    }
    data["lproj_modules_built"] = built;
  }
  return outcome(agree, agree ? "routes agree" : "routes disagree", data);
}

Json trivext_case(const RingPtr& a, const ModulePtr& e, const RingPtr& ext, bool& agree) {
  const TrivextBreakdown b = trivext_predicate(a, e);
  const bool direct = is_1_semiregular(ext).value;
  agree = agree && b.holds == direct;
  return {{"module", e->label()},
          {"predicted", b.holds},
          {"direct", direct},
          {"clauses",
           {{"base_one_semiregular", b.base_one_semiregular},
            {"localizations_are_fields", b.localizations_are_fields},
            {"localized_module_simple", b.localized_module_simple},
            {"fp_injective", b.fp_injective},
            {"coherent", b.coherent}}}};
}

CheckOutcome check_ttriv(const std::string& spec, const RingPtr& r) {
  const RingSpecParts parts = parse_ring_spec_parts(spec);
  bool agree = true;
  Json cases = Json::array();
  if (parts.kind == "trivext" && !parts.module->is_zero())
    cases.push_back(trivext_case(parts.rings.front(), parts.module, r, agree));
  for (const ModulePtr& e : modules_up_to_size(r, kGridModuleCap)) {
    if (r->size() * e->size() > kGridRingCap) continue;
    cases.push_back(trivext_case(r, e, build_trivial_extension(r, *e), agree));
  }
  return outcome(agree, std::to_string(cases.size()) + " trivial extensions compared", {{"cases", cases}});
}

Json duplication_case(const RingPtr& base, std::span<const Elem> gens, bool& agree) {
  const DuplicationResult d = duplication_predicate(base, gens, false);
  agree = agree && d.agrees();
  return {{"generators", std::vector<Elem>(gens.begin(), gens.end())},
          {"ideal_pure", d.ideal_pure},
          {"predicted", {d.fp_injective_case, d.semiregular_case, d.one_semiregular_case}},
          {"direct", {d.direct_fp_injective, d.direct_semiregular, d.direct_one_semiregular}}};
}

CheckOutcome check_tfp(const std::string& spec, const RingPtr& r) {
  const RingSpecParts parts = parse_ring_spec_parts(spec);
  bool agree = true;
  Json cases = Json::array();
  if (parts.kind == "dup") {
    cases.push_back(duplication_case(parts.rings.front(), parts.elements, agree));
  } else {
    for (const Ideal& i : enumerate_ideals(r))
      if (r->size() * i.size() <= kGridRingCap) cases.push_back(duplication_case(r, i.generators(), agree));
  }
  return outcome(agree, std::to_string(cases.size()) + " duplications compared", {{"cases", cases}});
}

CheckOutcome check_pfperiodic(const std::string& spec, const RingPtr& r, std::size_t cap) {
  const RingSpecParts parts = parse_ring_spec_parts(spec);
  if (parts.kind != "trivext") return not_applicable("ring is not a trivial extension A x A");
  const RingPtr& base = parts.rings.front();
  const auto& rel = parts.module->relations().data;
  const bool free_rank_one = parts.module->num_generators() == 1 &&
                             std::all_of(rel.begin(), rel.end(), [](Elem e) { return e == 0; });
  if (!free_rank_one) return not_applicable("module is not free of rank one");
  if (base->add(base->one(), base->one()) != base->zero()) return not_applicable("base does not have characteristic 2");
  if (!is_vnr(base).value) return not_applicable("base is not von Neumann regular");
  if (!pair_ring(base)->same_tables(*r)) return outcome(false, "pair ring differs from the parsed ring");
  bool pass = true;
  Json cases = Json::array();
  for (const PairModule& p : enumerate_pair_modules(base, cap)) {
    const PeriodicityCertificate c = char2_F_periodic(p);
    const bool flat = pair_flatness(p);
    const bool projective = is_projective(induced_module(p));
    const bool ok = c.positive() && all_hold(c.transcript) && flat == projective;
    pass = pass && ok;
    cases.push_back({{"carrier_size", p.carrier->size()},
                     {"kernel_equals_image", flat},
                     {"projective", projective},
                     {"certificate_holds", c.positive() && all_hold(c.transcript)}});
  }
  return outcome(pass, std::to_string(cases.size()) + " pair modules", {{"cases", cases}});
}

CheckOutcome check_cedr(const RingPtr& r) {
  const bool one = is_1_semiregular(r).value;
  const bool edr = is_edr(r).value;
  const bool semi = is_semiregular(r).value;
  Json data{{"one_semiregular", one}, {"edr", edr}, {"semiregular", semi}};
  bool pass = !one || (edr && semi);
  if (edr && r->size() <= 16) {
    // sampled validation of the criterion: small matrices diagonalize
    std::mt19937 rng(static_cast<unsigned>(r->size()));
    std::size_t sampled = 0;
    for (int k = 0; k < 6; ++k) {
      Matrix m(2, (k >= 4 && r->size() <= 8) ? 3 : 2);
      for (Elem& x : m.data) x = static_cast<Elem>(rng() % r->size());
      auto depth = diagonalization_depth(r, m);
      if (!depth) {
        data["undiagonalized"] = m.to_spec();
        pass = false;
        break;
      }
      ++sampled;
    }
    data["diagonalized_samples"] = sampled;
  }
  return outcome(pass, pass ? "implication holds" : "implication fails", data);
}

CheckOutcome check_p2sr(const RingPtr& r) {
  const bool semi = is_semiregular(r).value;
  const bool edr = is_edr(r).value;
  const bool two = is_2_semiregular(r).value;
  const bool pass = !(semi && edr) || two;
  return outcome(pass, pass ? "implication holds" : "implication fails",
                 {{"semiregular", semi}, {"edr", edr}, {"two_semiregular", two}});
}

CheckOutcome check_plocs(const RingPtr& r) {
  const bool one = is_1_semiregular(r).value;
  const bool two = is_2_semiregular(r).value;
  bool pass = true;
  Json locs = Json::array();
  for (const Localization& loc : all_localizations(r)) {
    const bool l1 = is_1_semiregular(loc.ring).value;
    const bool l2 = is_2_semiregular(loc.ring).value;
    pass = pass && (!one || l1) && (!two || l2);
    locs.push_back({{"prime", elements_of(loc.prime)}, {"one_semiregular", l1}, {"two_semiregular", l2}});
  }
  return outcome(pass, pass ? "localizations inherit" : "a localization loses the property",
                 {{"one_semiregular", one}, {"two_semiregular", two}, {"localizations", locs}});
}

CheckOutcome check_pfact(const RingPtr& r) {
  if (!is_1_semiregular(r).value) return not_applicable("ring is not 1-semiregular");
  Json bad = Json::array();
  std::size_t checked = 0;
  for (const Ideal& i : enumerate_ideals(r)) {
    ++checked;
    if (!is_1_semiregular(build_quotient(r, i.generators()).ring).value) bad.push_back(elements_of(i));
  }
  return outcome(bad.empty(), std::to_string(checked) + " quotients", {{"failing_ideals", bad}});
}

CheckOutcome check_pproduit(const std::string& spec, const RingPtr& r) {
  const RingSpecParts parts = parse_ring_spec_parts(spec);
  std::vector<RingPtr> factors = parts.kind == "prod" ? parts.rings : std::vector<RingPtr>{r, build_zmod(2)};
  const RingPtr product = parts.kind == "prod" ? r : build_product(factors);
  bool one = true, two = true;
  for (const RingPtr& f : factors) {
    one = one && is_1_semiregular(f).value;
    two = two && is_2_semiregular(f).value;
  }
  const bool p1 = is_1_semiregular(product).value;
  const bool p2 = is_2_semiregular(product).value;
  const bool pass = p1 == one && p2 == two;
  return outcome(pass, pass ? "product flags are the conjunction" : "product flags differ",
                 {{"product", product->spec()},
                  {"factors_one_semiregular", one},
                  {"factors_two_semiregular", two},
                  {"product_one_semiregular", p1},
                  {"product_two_semiregular", p2}});
}

CheckOutcome check_ccycval(const RingPtr& r) {
  if (!is_local(r).value || is_field(r).value) return not_applicable("ring is not local, or is a field");
  const bool two = is_2_semiregular(r).value;
  const bool val = is_valuation(r).value;
  const bool semi = is_semiregular(r).value;
  bool zero_divisor = false;
  for (Elem a = 0; a < r->size() && !zero_divisor; ++a)
    zero_divisor = a != r->zero() && !annihilator(r, std::vector<Elem>{a}).is_zero();
  const Ideal m = maximal_ideals(r).front();
  const bool m_flat = is_flat(ideal_as_module(m).module);
  const bool c2 = val && semi;
  const bool c3 = val && zero_divisor;
  const bool c4 = is_bezout(r).value && !m_flat;
  const bool pass = two == c2 && two == c3 && two == c4;
  return outcome(pass, pass ? "chain agrees" : "chain disagrees",
                 {{"two_semiregular", two},
                  {"valuation_and_semiregular", c2},
                  {"valuation_and_zero_divisor", c3},
                  {"bezout_and_maximal_not_flat", c4}});
}

CheckOutcome check_lattice(const RingPtr& r) {
  const ClassificationReport rep = classify_ring(r);
  const auto bad = lattice_violation(rep.flags);
  return outcome(!bad, bad ? *bad : "implications hold", {{"flags", rep.flags}});
}

CheckOutcome check_flag(std::string_view flag, const RingPtr& r, std::size_t cap) {
  const ClassificationReport rep = classify_ring(r);
  const bool value = rep.flags.at(std::string(flag));
  Json data{{"value", value}};
  bool pass = true;
  if ((flag == "one_semiregular" || flag == "two_semiregular") && oracle_fits(r, cap)) {
    const OracleSweep s = flag == "one_semiregular" ? all_cyclic_1_periodic(r, cap) : all_cyclic_2_periodic(r, cap);
    data["oracle"] = oracle_json(s);
    pass = s.all_positive == value;
  }
  return outcome(pass, pass ? "evaluated" : "flag disagrees with the oracle", data);
}

bool is_flag(std::string_view id) {
  return std::any_of(std::begin(kFlagNames), std::end(kFlagNames), [&](const char* f) { return id == f; });
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

bool is_registered_check(std::string_view id) {
  const auto ids = registered_checks();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<std::string> registered_checks() {
  std::vector<std::string> out(std::begin(kTheoremIds), std::end(kTheoremIds));
  out.emplace_back("tgsr_equivalence");
  out.insert(out.end(), std::begin(kFlagNames), std::end(kFlagNames));
  return out;
}

CheckOutcome run_check(std::string_view id, const std::string& spec, const RingPtr& r, std::size_t oracle_cap) {
  if (!is_registered_check(id)) throw PreconditionError("unknown check '" + std::string(id) + "'");
  CheckOutcome out;
  try {
    if (id == "tgsr" || id == "tgsr_equivalence") out = check_tgsr(r, oracle_cap);
    else if (id == "t2gsr") out = check_t2gsr(r, oracle_cap);
    else if (id == "ttriv") out = check_ttriv(spec, r);
    else if (id == "tfp") out = check_tfp(spec, r);
    else if (id == "pfperiodic") out = check_pfperiodic(spec, r, oracle_cap);
    else if (id == "cedr") out = check_cedr(r);
    else if (id == "p2sr") out = check_p2sr(r);
    else if (id == "plocs") out = check_plocs(r);
    else if (id == "pfact") out = check_pfact(r);
    else if (id == "pproduit") out = check_pproduit(spec, r);
    else if (id == "ccycval") out = check_ccycval(r);
    else if (id == "lattice") out = check_lattice(r);
    else if (is_flag(id)) out = check_flag(id, r, oracle_cap);
  } catch (const InternalError& e) {
    out = outcome(false, std::string("internal check failed: ") + e.what());
  }
  out.id = std::string(id);
  return out;
}

nlohmann::json to_json(const CheckOutcome& c) {
  return {{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"data", c.data}};
}

}  // namespace semireg
