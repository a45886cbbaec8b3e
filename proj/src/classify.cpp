#include "semireg/classify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "semireg/errors.hpp"
#include "semireg/localization.hpp"
#include "semireg/module_structure.hpp"
#include "semireg/periodicity.hpp"

namespace semireg {

namespace {

Verdict yes() { return Verdict{true, std::nullopt}; }

Verdict no(std::string kind, std::vector<Elem> data, std::string detail) {
  return Verdict{false, Witness{std::move(kind), std::move(data), std::move(detail)}};
}

std::vector<Elem> as_vector(std::span<const Elem> s) { return {s.begin(), s.end()}; }

Ideal principal(const RingPtr& r, Elem x) { return ideal_generated(r, std::vector<Elem>{x}); }

// Above this many ideals the triple scan for distributivity is skipped.
constexpr std::size_t kDistributiveScanCap = 64;

struct LatticeTables {
  std::vector<Ideal> ideals;
  std::vector<std::size_t> sum, meet;
};

LatticeTables lattice_tables(const RingPtr& r) {
  LatticeTables t{enumerate_ideals(r), {}, {}};
  const std::size_t n = t.ideals.size();
  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[as_vector(t.ideals[i].elements())] = i;
  t.sum.resize(n * n);
  t.meet.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Ideal s = ideal_combine(IdealOp::Sum, t.ideals[i], t.ideals[j]);
      const Ideal m = ideal_combine(IdealOp::Intersection, t.ideals[i], t.ideals[j]);
      t.sum[i * n + j] = t.sum[j * n + i] = index.at(as_vector(s.elements()));
      t.meet[i * n + j] = t.meet[j * n + i] = index.at(as_vector(m.elements()));
    }
  }
  return t;
}

std::optional<Verdict> distributivity_scan(const RingPtr& r) {
  if (enumerate_ideals(r).size() > kDistributiveScanCap) return std::nullopt;
  const LatticeTables t = lattice_tables(r);
  const std::size_t n = t.ideals.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t.meet[t.sum[a * n + b] * n + c] != t.sum[t.meet[a * n + c] * n + t.meet[b * n + c]])
          return no("triple", {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)},
                    "(A+B) n C differs from (A n C)+(B n C); ideal indices in enumeration order");
  return yes();
}

bool ideals_form_chain(const std::vector<Ideal>& ideals) {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i])) return false;
  return true;
}

bool is_simple_ideal(const RingPtr& r, const Ideal& m) {
  if (m.is_zero()) return false;
  for (Elem x : m.elements())
    if (x != r->zero() && !(principal(r, x) == m)) return false;
  return true;
}

std::vector<Ideal> ideals_inside(const RingPtr& r, const Ideal& bound) {
  std::vector<Ideal> out;
  for (const Ideal& i : enumerate_ideals(r))
    if (i.subset_of(bound)) out.push_back(i);
  return out;
}

// Bit k set when x lies in the k-th maximal ideal.
std::vector<std::uint64_t> maximal_masks(const RingPtr& r) {
  const auto maxes = maximal_ideals(r);
  if (maxes.size() > 64) throw CapExceeded("more than 64 maximal ideals");
  std::vector<std::uint64_t> mask(r->size(), 0);
  for (std::size_t k = 0; k < maxes.size(); ++k)
    for (Elem x : maxes[k].elements()) mask[x] |= std::uint64_t{1} << k;
  return mask;
}

}  // namespace

Verdict is_semiregular(const RingPtr& r) {
  const auto ideals = enumerate_ideals(r);
  for (std::size_t k = 0; k < ideals.size(); ++k)
    if (!(annihilator(annihilator(ideals[k])) == ideals[k]))
      return no("ideal", as_vector(ideals[k].generators()), "(0:(0:I)) is strictly larger than I");
  return yes();
}

Verdict is_bezout(const RingPtr& r) {
  for (const Ideal& i : enumerate_ideals(r))
    if (!principal_generator(i)) return no("ideal", as_vector(i.generators()), "ideal is not principal");
  return yes();
}

Verdict is_valuation(const RingPtr& r) {
  std::vector<Ideal> principals;
  std::vector<Elem> reps;
  for (Elem x = 0; x < r->size(); ++x) {
    Ideal i = principal(r, x);
    if (std::find(principals.begin(), principals.end(), i) != principals.end()) continue;
    for (std::size_t k = 0; k < principals.size(); ++k)
      if (!i.subset_of(principals[k]) && !principals[k].subset_of(i))
        return no("pair", {reps[k], x}, "principal ideals are incomparable");
    principals.push_back(std::move(i));
    reps.push_back(x);
  }
  return yes();
}

Verdict is_distributive_lattice(const RingPtr& r) {
  if (auto v = distributivity_scan(r)) return *v;
  throw CapExceeded("too many ideals for the distributivity scan");
}

Verdict is_arithmetical(const RingPtr& r) {
  Verdict local = yes();
  const auto locs = all_localizations(r);
  for (std::size_t k = 0; k < locs.size(); ++k) {
    if (!is_valuation(locs[k].ring).value) {
      local = no("maximal_ideal", as_vector(locs[k].prime.generators()), "localization is not a valuation ring");
      break;
    }
  }
  if (auto lattice = distributivity_scan(r); lattice && lattice->value != local.value)
    throw InternalError("local valuation test and distributivity disagree on " + r->spec());
  return local;
}

Verdict is_vnr(const RingPtr& r) {
  for (Elem x = 0; x < r->size(); ++x) {
    const Elem x2 = r->mul(x, x);
    bool found = false;
    for (Elem y = 0; y < r->size() && !found; ++y) found = r->mul(x2, y) == x;
    if (!found) return no("element", {x}, "x is not in x^2 R");
  }
  return yes();
}

Verdict is_local(const RingPtr& r) {
  const auto maxes = maximal_ideals(r);
  if (maxes.size() == 1) return yes();
  if (maxes.empty()) return no("ring", {}, "zero ring has no maximal ideal");
  return no("maximal_ideal", as_vector(maxes[1].generators()), "second maximal ideal");
}

Verdict is_field(const RingPtr& r) {
  if (r->is_zero_ring()) return no("ring", {}, "zero ring");
  for (Elem x = 0; x < r->size(); ++x)
    if (x != r->zero() && !is_unit(*r, x)) return no("element", {x}, "nonzero non-unit");
  return yes();
}

Verdict is_1_semiregular(const RingPtr& r) {
  for (const Localization& loc : all_localizations(r)) {
    const Ideal m = loc.maximal_ideal();
    if (!m.is_zero() && !is_simple_ideal(loc.ring, m))
      return no("maximal_ideal", as_vector(loc.prime.generators()), "P R_P is neither zero nor simple");
  }
  return yes();
}

Verdict is_2_semiregular(const RingPtr& r) {
  const Verdict semi = is_semiregular(r);
  if (!semi.value) return semi;
  const Verdict arith = is_arithmetical(r);
  if (!arith.value) return arith;
  for (Elem x = 0; x < r->size(); ++x)
    if (!find_uvst_witness(r, x))
      throw InternalError("semiregular arithmetical ring without (u,v,s,t) witness at element " + std::to_string(x));
  return yes();
}

Verdict is_edr(const RingPtr& r) {
  const Verdict bez = is_bezout(r);
  if (!bez.value) return bez;
  const std::size_t n = r->size();
  if (n > 256) throw CapExceeded("EDR scan is limited to rings of at most 256 elements");
  const auto mask = maximal_masks(r);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (mask[a] & mask[b] & mask[c]) continue;
        bool found = false;
        for (Elem p = 0; p < n && !found; ++p) {
          const std::uint64_t pa = mask[r->mul(p, a)];
          const Elem pb = r->mul(p, b);
          for (Elem q = 0; q < n && !found; ++q) found = (pa & mask[r->add(pb, r->mul(q, c))]) == 0;
        }
        if (!found) return no("triple", {a, b, c}, "no p, q with R(pa) + R(pb+qc) = R");
      }
    }
  }
  return yes();
}

std::vector<Ideal> local_factors(const RingPtr& r) {
  std::vector<Ideal> out;
  for (Elem e : primitive_idempotents(*r)) out.push_back(principal(r, e));
  return out;
}

Verdict is_1_qf(const RingPtr& r) {
  for (const Ideal& f : local_factors(r))
    if (ideals_inside(r, f).size() > 3)
      return no("ideal", as_vector(f.generators()), "local factor has more than one nonzero proper ideal");
  return yes();
}

Verdict is_2_qf(const RingPtr& r) {
  for (const Ideal& f : local_factors(r))
    if (!ideals_form_chain(ideals_inside(r, f)))
      return no("ideal", as_vector(f.generators()), "ideals of the local factor are not a chain");
  return yes();
}

std::optional<int> diagonalization_depth(const RingPtr& r, const Matrix& a, int max_depth) {
  if (a.rows != 2 || (a.cols != 2 && a.cols != 3))
    throw PreconditionError("diagonalization search supports 2x2 and 2x3 matrices");
  const FiniteRing& R = *r;
  const std::size_t cells = a.rows * a.cols;
  std::uint64_t states = 1;
  for (std::size_t k = 0; k < cells; ++k) {
    if (states > (std::uint64_t{1} << 28) / R.size()) throw CapExceeded("diagonalization state space too large");
    states *= R.size();
  }
  // matrices are encoded base |R|, entry (i,j) at digit i*cols+j
  auto encode = [&](const std::vector<Elem>& d) {
    std::uint64_t code = 0;
    for (std::size_t k = cells; k-- > 0;) code = code * R.size() + d[k];
    return code;
  };
  auto diagonal = [&](const std::vector<Elem>& d) {
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j)
        if (i != j && d[i * a.cols + j] != R.zero()) return false;
    return true;
  };
  std::vector<bool> seen(states, false);
  seen[encode(a.data)] = true;
  std::vector<std::vector<Elem>> frontier{a.data};
  for (int depth = 0; depth <= max_depth; ++depth) {
    for (const auto& m : frontier)
      if (diagonal(m)) return depth;
    if (depth == max_depth) break;
    std::vector<std::vector<Elem>> next;
    auto offer = [&](std::vector<Elem>&& m) {
      const std::uint64_t code = encode(m);
      if (!seen[code]) {
        seen[code] = true;
        next.push_back(std::move(m));
      }
    };
    // dir 0 acts on rows, dir 1 on columns: line i += c * line j, and swaps
    for (const auto& m : frontier) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::size_t lines = dir == 0 ? a.rows : a.cols;
        const std::size_t len = dir == 0 ? a.cols : a.rows;
        auto at = [&](std::size_t line, std::size_t k) { return dir == 0 ? line * a.cols + k : k * a.cols + line; };
        for (std::size_t i = 0; i < lines; ++i)
          for (std::size_t j = 0; j < lines; ++j) {
            if (i == j) continue;
            for (Elem c = 1; c < R.size(); ++c) {
              auto t = m;
              for (std::size_t k = 0; k < len; ++k) t[at(i, k)] = R.add(t[at(i, k)], R.mul(c, m[at(j, k)]));
              offer(std::move(t));
            }
            if (i < j) {
              auto t = m;
              for (std::size_t k = 0; k < len; ++k) std::swap(t[at(i, k)], t[at(j, k)]);
              offer(std::move(t));
            }
          }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Condition4Result tgsr_condition4_witness(const RingPtr& r) {
  Condition4Result out;
  out.bezout = is_bezout(r).value;
  const auto idem = units_and_idempotents(*r).idempotents;
  bool all_found = true;
  for (Elem a = 0; a < r->size(); ++a) {
    const Ideal ann = annihilator(r, std::vector<Elem>{a});
    const ModulePtr lhs = cyclic_module(r, std::vector<Elem>{a});
    std::optional<Condition4Entry> found;
    for (Elem e1 : idem) {
      for (Elem e2 : idem) {
        const Elem ae2 = r->mul(a, e2);
        if (!(ideal_combine(IdealOp::Intersection, principal(r, e2), ann) == principal(r, ae2))) continue;
        const ModulePtr rhs = direct_sum(cyclic_module(r, std::vector<Elem>{r->sub(r->one(), e1)}),
                                         cyclic_module(r, std::vector<Elem>{r->sub(r->one(), e2), ae2}));
        if (is_isomorphic(lhs, rhs).isomorphic) {
          found = Condition4Entry{a, e1, e2};
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      out.failing_element = a;
      all_found = false;
      break;
    }
    out.table.push_back(*found);
  }
  out.holds = out.bezout && all_found;
  return out;
}

Verdict tgsr_condition5(const RingPtr& r) {
  const Verdict arith = is_arithmetical(r);
  if (!arith.value) return arith;
  for (const Ideal& i : enumerate_ideals(r)) {
    const Ideal sq = ideal_combine(IdealOp::Product, i, i);
    if (!is_pure_ideal(sq).pure) return no("ideal", as_vector(i.generators()), "I^2 is not pure");
  }
  return yes();
}

ZeroKrullDecomposition zero_krull_decomposition(const RingPtr& r) {
  ZeroKrullDecomposition out{{}, unit_ideal(r)};
  for (const Localization& loc : all_localizations(r)) {
    if (!loc.maximal_ideal().is_zero()) continue;
    out.x.push_back(loc.prime);
    out.i = ideal_combine(IdealOp::Intersection, out.i, loc.kernel);
  }
  const QuotientRing q = build_quotient(r, out.i.generators());
  if (!is_vnr(q.ring).value) throw InternalError("R/I is not von Neumann regular");
  if (!is_pure_ideal(out.i).pure) throw InternalError("zero-Krull ideal is not pure");
  std::vector<Ideal> vanishing;
  for (const Ideal& p : maximal_ideals(r))
    if (out.i.subset_of(p)) vanishing.push_back(p);
  if (vanishing != out.x) throw InternalError("X differs from V(I)");
  return out;
}

TrivextBreakdown trivext_predicate(const RingPtr& a, const ModulePtr& e) {
  if (!same_ring(*a, *e->ring())) throw PreconditionError("module is not over the given ring");
  if (e->is_zero()) throw PreconditionError("trivial extension criterion needs a nonzero module");
  TrivextBreakdown out;
  out.base_one_semiregular = is_1_semiregular(a).value;
  out.localizations_are_fields = true;
  out.localized_module_simple = true;
  for (const Localization& loc : all_localizations(a)) {
    const ModulePtr local = localize_module(e, loc);
    if (local->is_zero()) continue;
    out.localizations_are_fields = out.localizations_are_fields && is_field(loc.ring).value;
    out.localized_module_simple = out.localized_module_simple && structure_tests(local).simple;
  }
  out.fp_injective = is_fp_injective(e);
  out.holds = out.base_one_semiregular && out.localizations_are_fields && out.localized_module_simple &&
              out.fp_injective && out.coherent;
  return out;
}

bool is_self_fp_injective(const RingPtr& r) { return is_fp_injective(free_module(r, 1)); }

DuplicationResult duplication_predicate(const RingPtr& r, std::span<const Elem> gens, bool assert_agreement) {
  DuplicationResult out;
  out.ideal_pure = is_pure_ideal(ideal_generated(r, gens)).pure;
  out.fp_injective_case = out.ideal_pure && is_self_fp_injective(r);
  out.semiregular_case = out.ideal_pure && is_semiregular(r).value;
  out.one_semiregular_case = out.ideal_pure && is_1_semiregular(r).value;
  const RingPtr d = build_duplication(r, gens);
  out.direct_fp_injective = is_self_fp_injective(d);
  out.direct_semiregular = is_semiregular(d).value;
  out.direct_one_semiregular = is_1_semiregular(d).value;
  if (assert_agreement && !out.agrees()) throw InternalError("duplication prediction disagrees on " + d->spec());
  return out;
}

std::optional<std::string> lattice_violation(const std::map<std::string, bool>& flags) {
  auto f = [&](const char* name) {
    auto it = flags.find(name);
    if (it == flags.end()) throw InternalError(std::string("missing flag ") + name);
    return it->second;
  };
  struct Rule {
    const char* text;
    bool holds;
  };
  const Rule rules[] = {
      {"one_semiregular => two_semiregular", !f("one_semiregular") || f("two_semiregular")},
      {"one_semiregular => edr", !f("one_semiregular") || f("edr")},
      {"one_semiregular => semiregular", !f("one_semiregular") || f("semiregular")},
      {"one_semiregular => bezout", !f("one_semiregular") || f("bezout")},
      {"two_semiregular => semiregular", !f("two_semiregular") || f("semiregular")},
      {"two_semiregular => arithmetical", !f("two_semiregular") || f("arithmetical")},
      {"vnr => one_semiregular", !f("vnr") || f("one_semiregular")},
      {"one_qf => one_semiregular", !f("one_qf") || f("one_semiregular")},
      {"two_qf => two_semiregular", !f("two_qf") || f("two_semiregular")},
      {"semiregular and edr => two_semiregular", !(f("semiregular") && f("edr")) || f("two_semiregular")},
      {"field => vnr", !f("field") || f("vnr")},
      {"field => local", !f("field") || f("local")},
      {"valuation => arithmetical", !f("valuation") || f("arithmetical")},
      {"valuation => bezout", !f("valuation") || f("bezout")},
  };
  for (const Rule& rule : rules)
    if (!rule.holds) return std::string(rule.text);
  return std::nullopt;
}

ClassificationReport classify_ring(const RingPtr& r) {
  using Clock = std::chrono::steady_clock;
  ClassificationReport rep;
  rep.spec = r->spec();
  rep.size = r->size();
  const std::map<std::string, std::function<Verdict(const RingPtr&)>> predicates = {
      {"local", is_local},
      {"field", is_field},
      {"vnr", is_vnr},
      {"valuation", is_valuation},
      {"arithmetical", is_arithmetical},
      {"bezout", is_bezout},
      {"semiregular", is_semiregular},
      {"edr", is_edr},
      {"one_semiregular", is_1_semiregular},
      {"two_semiregular", is_2_semiregular},
      {"one_qf", is_1_qf},
      {"two_qf", is_2_qf},
  };
  for (const char* name : kFlagNames) {
    const auto start = Clock::now();
    Verdict v = predicates.at(name)(r);
    rep.timings_ms[name] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rep.flags[name] = v.value;
    if (v.witness) rep.witnesses[name] = *v.witness;
  }
  rep.notes.push_back("coherent: automatic, finite rings are Noetherian");
  rep.notes.push_back("every prime ideal is maximal: automatic, finite rings have Krull dimension 0");
  if (auto bad = lattice_violation(rep.flags)) throw InternalError("implication lattice violated on " + rep.spec + ": " + *bad);
  return rep;
}

}  // namespace semireg
