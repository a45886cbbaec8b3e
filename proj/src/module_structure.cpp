#include "semireg/module_structure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semireg/classify.hpp"
#include "semireg/errors.hpp"

namespace semireg {

namespace {

void require_same_ring(const Module& m, const Module& n) {
  if (!same_ring(*m.ring(), *n.ring())) throw PreconditionError("modules live over different rings");
}

std::vector<Elem> table_from_images(const Module& source, const Module& target, std::span<const Elem> images) {
  std::vector<Elem> table(source.size());
  for (Elem x = 0; x < source.size(); ++x) {
    const auto c = source.coords(x);
    Elem acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) acc = target.add(acc, target.act(c[i], images[i]));
    table[x] = acc;
  }
  return table;
}

// Annihilator of each module element as a sorted ring-element list.
std::vector<std::vector<Elem>> element_annihilators(const Module& m) {
  std::vector<std::vector<Elem>> out(m.size());
  for (Elem r = 0; r < m.ring()->size(); ++r)
    for (Elem x = 0; x < m.size(); ++x)
      if (m.act(r, x) == 0) out[x].push_back(r);
  return out;
}

struct Invariants {
  std::size_t size = 0;
  std::vector<std::size_t> scaled_sizes;  // |xM| per ring element
  std::vector<std::size_t> killed_sizes;  // |{m : xm = 0}| per ring element
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants cheap_invariants(const Module& m) {
  Invariants inv;
  inv.size = m.size();
  for (Elem r = 0; r < m.ring()->size(); ++r) {
    inv.scaled_sizes.push_back(scaled(m, r).size());
    std::size_t killed = 0;
    for (Elem x = 0; x < m.size(); ++x) killed += m.act(r, x) == 0;
    inv.killed_sizes.push_back(killed);
  }
  return inv;
}

std::size_t exact_log(std::size_t value, std::size_t base) {
  std::size_t k = 0;
  std::size_t acc = 1;
  while (acc < value) {
    acc *= base;
    ++k;
  }
  if (acc != value) throw InternalError("cardinality is not a power of the residue field size");
  return k;
}

const Ideal& unique_maximal(const std::vector<Ideal>& maxes) {
  if (maxes.size() != 1) throw PreconditionError("operation requires a local ring");
  return maxes.front();
}

// Span of P*m inside m.
std::vector<Elem> radical_times_module(const Module& m, const Ideal& p) {
  std::vector<Elem> products;
  for (Elem a : p.generators())
    for (Elem g : m.generators()) products.push_back(m.act(a, g));
  return span_of(m, products);
}

}  // namespace

std::vector<std::vector<Elem>> annihilator_candidates(const Module& source, const Module& target) {
  std::vector<std::vector<Elem>> out;
  for (Elem g : source.generators()) {
    const Ideal ann = element_annihilator(source, g);
    out.push_back(killed_by(target, ann.generators()));
  }
  return out;
}

bool search_homs(const Module& source, const Module& target, const std::vector<std::vector<Elem>>& candidates,
                 const ImageVisitor& visit, std::uint64_t bound) {
  require_same_ring(source, target);
  const std::size_t g = source.num_generators();
  if (candidates.size() != g) throw PreconditionError("one candidate list per generator required");
  std::uint64_t product = 1;
  for (const auto& c : candidates) {
    if (c.empty()) return true;
    if (product > bound / c.size()) throw CapExceeded("hom search space exceeds bound " + std::to_string(bound));
    product *= c.size();
  }
  const Matrix& rel = source.relations();
  // columns grouped by the last generator they involve
  std::vector<std::vector<std::size_t>> due(g);
  for (std::size_t j = 0; j < rel.cols; ++j) {
    for (std::size_t i = g; i-- > 0;) {
      if (rel.at(i, j) != 0) {
        due[i].push_back(j);
        break;
      }
    }
  }
  std::vector<Elem> images(g, 0);
  std::vector<std::size_t> pos(g, 0);
  auto relations_hold = [&](std::size_t depth) {
    for (std::size_t j : due[depth]) {
      Elem acc = 0;
      for (std::size_t i = 0; i <= depth; ++i) acc = target.add(acc, target.act(rel.at(i, j), images[i]));
      if (acc != 0) return false;
    }
    return true;
  };
  if (g == 0) return visit(images);
  std::size_t depth = 0;
  pos[0] = 0;
  while (true) {
    if (pos[depth] == candidates[depth].size()) {
      if (depth == 0) return true;
      --depth;
      ++pos[depth];
      continue;
    }
    images[depth] = candidates[depth][pos[depth]];
    if (!relations_hold(depth)) {
      ++pos[depth];
      continue;
    }
    if (depth + 1 == g) {
      if (!visit(images)) return false;
      ++pos[depth];
      continue;
    }
    ++depth;
    pos[depth] = 0;
  }
}

std::vector<ModuleHom> hom_set(const ModulePtr& m, const ModulePtr& n, std::uint64_t bound) {
  std::vector<ModuleHom> out;
  search_homs(*m, *n, annihilator_candidates(*m, *n), [&](std::span<const Elem> images) {
    out.push_back(ModuleHom::from_generator_images(m, n, std::vector<Elem>(images.begin(), images.end())));
    return true;
  }, bound);
  return out;
}

std::uint64_t count_homs(const ModulePtr& m, const ModulePtr& n, std::uint64_t bound) {
  std::uint64_t count = 0;
  search_homs(*m, *n, annihilator_candidates(*m, *n), [&](std::span<const Elem>) {
    ++count;
    return true;
  }, bound);
  return count;
}

IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n) {
  require_same_ring(*m, *n);
  if (m->size() != n->size()) return IsoResult{false, std::nullopt, "cardinality"};
  if (!(cheap_invariants(*m) == cheap_invariants(*n))) return IsoResult{false, std::nullopt, "scaled cardinalities"};
  for (const Localization& loc : all_localizations(m->ring())) {
    if (minimal_generators_local(*localize_module(m, loc)) != minimal_generators_local(*localize_module(n, loc)))
      return IsoResult{false, std::nullopt, "local minimal generator count"};
  }
  // an isomorphism preserves the annihilator of every element
  const auto ann_n = element_annihilators(*n);
  const auto ann_m = element_annihilators(*m);
  std::vector<std::vector<Elem>> candidates;
  for (Elem g : m->generators()) {
    std::vector<Elem> c;
    for (Elem y = 0; y < n->size(); ++y)
      if (ann_n[y] == ann_m[g]) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::optional<ModuleHom> witness;
  search_homs(*m, *n, candidates, [&](std::span<const Elem> images) {
    const auto table = table_from_images(*m, *n, images);
    if (std::count(table.begin(), table.end(), Elem{0}) != 1) return true;
    witness = ModuleHom::from_generator_images(m, n, std::vector<Elem>(images.begin(), images.end()));
    return false;
  }, std::uint64_t{1} << 30);
  if (witness) return IsoResult{true, std::move(witness), ""};
  return IsoResult{false, std::nullopt, "exhaustive search"};
}

ModulePtr localize_module(const ModulePtr& m, const Localization& loc) {
  if (!same_ring(*m->ring(), *loc.base)) throw PreconditionError("localization is over a different ring");
  std::uint64_t total = 1;
  bool fits = true;
  for (std::size_t i = 0; i < m->num_generators() && fits; ++i) {
    total *= loc.ring->size();
    fits = total <= kPresentEnumerationCap;
  }
  if (!fits) return localize_module_concrete(m, loc);
  const Matrix& rel = m->relations();
  Matrix mapped(rel.rows, rel.cols);
  for (std::size_t k = 0; k < rel.data.size(); ++k) mapped.data[k] = loc.projection(rel.data[k]);
  return present(loc.ring, mapped);
}

ModulePtr localize_module_concrete(const ModulePtr& m, const Localization& loc) {
  if (!same_ring(*m->ring(), *loc.base)) throw PreconditionError("localization is over a different ring");
  const FiniteRing& r = *m->ring();
  std::vector<Elem> outside;
  for (Elem s = 0; s < r.size(); ++s)
    if (!loc.prime.contains(s)) outside.push_back(s);
  std::vector<Elem> dead;
  for (Elem x = 0; x < m->size(); ++x) {
    if (std::any_of(outside.begin(), outside.end(), [&](Elem s) { return m->act(s, x) == 0; })) dead.push_back(x);
  }
  const Projection q = quotient_module(m, dead);
  const Module& qm = *q.module;
  const std::size_t k = qm.size();
  const std::size_t lq = loc.ring->size();
  std::vector<Elem> lift(lq, static_cast<Elem>(-1));
  for (Elem x = static_cast<Elem>(r.size()); x-- > 0;) lift[loc.projection(x)] = x;
  std::vector<Elem> add(k * k), act(lq * k);
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) add[x * k + y] = qm.add(x, y);
    for (Elem rho = 0; rho < lq; ++rho) act[rho * k + x] = qm.act(lift[rho], x);
  }
  return module_from_action(loc.ring, k, std::move(add), std::move(act));
}

std::size_t minimal_generators_local(const Module& m) {
  const auto maxes = maximal_ideals(m.ring());
  const Ideal& p = unique_maximal(maxes);
  if (m.is_zero()) return 0;
  const std::size_t residue = m.ring()->size() / p.size();
  return exact_log(m.size() / radical_times_module(m, p).size(), residue);
}

std::vector<Elem> minimal_generating_set_local(const Module& m) {
  const auto maxes = maximal_ideals(m.ring());
  const Ideal& p = unique_maximal(maxes);
  std::vector<Elem> span = radical_times_module(m, p);
  std::vector<char> member(m.size(), 0);
  for (Elem x : span) member[x] = 1;
  std::vector<Elem> gens;
  for (Elem x = 0; x < m.size(); ++x) {
    if (member[x]) continue;
    gens.push_back(x);
    // span + Rx as a set of sums; both summands are submodules
    std::vector<Elem> grown = span_of(m, std::vector<Elem>{x});
    std::vector<char> next(m.size(), 0);
    std::vector<Elem> sum;
    for (Elem a : span)
      for (Elem b : grown) {
        const Elem s = m.add(a, b);
        if (!next[s]) {
          next[s] = 1;
          sum.push_back(s);
        }
      }
    span = std::move(sum);
    member = std::move(next);
  }
  return gens;
}

bool is_free_local(const Module& m) {
  const std::size_t k = minimal_generators_local(m);
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) {
    expected *= m.ring()->size();
    if (expected > m.size()) return false;
  }
  return expected == m.size();
}

std::vector<std::optional<std::size_t>> local_ranks(const ModulePtr& m) {
  std::vector<std::optional<std::size_t>> out;
  for (const Localization& loc : all_localizations(m->ring())) {
    const ModulePtr local = localize_module(m, loc);
    if (is_free_local(*local))
      out.emplace_back(minimal_generators_local(*local));
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

bool is_projective(const ModulePtr& m) {
  const auto ranks = local_ranks(m);
  return std::all_of(ranks.begin(), ranks.end(), [](const auto& k) { return k.has_value(); });
}

bool flat_elementwise(const Module& m) {
  const RingPtr& r = m.ring();
  for (Elem a = 0; a < r->size(); ++a) {
    const Ideal ann = annihilator(r, std::vector<Elem>{a});
    std::vector<Elem> products;
    for (Elem s : ann.generators())
      for (Elem g : m.generators()) products.push_back(m.act(s, g));
    const auto allowed = span_of(m, products);
    std::vector<char> member(m.size(), 0);
    for (Elem x : allowed) member[x] = 1;
    for (Elem u = 0; u < m.size(); ++u)
      if (m.act(a, u) == 0 && !member[u]) return false;
  }
  return true;
}

bool is_flat(const ModulePtr& m) {
  const bool projective = is_projective(m);
  if (is_bezout(m->ring()).value && flat_elementwise(*m) != projective)
    throw InternalError("flatness criterion disagrees with projectivity for " + m->label() + " over " +
                        m->ring()->spec());
  return projective;
}

bool is_fp_injective(const ModulePtr& m) {
  const RingPtr& r = m->ring();
  for (const Ideal& i : enumerate_ideals(r)) {
    const Embedding e = ideal_as_module(i);
    std::set<std::vector<Elem>> restrictions;
    for (Elem x = 0; x < m->size(); ++x) {
      std::vector<Elem> images;
      for (Elem g : e.module->generators()) images.push_back(m->act(e.inclusion(g), x));
      restrictions.insert(std::move(images));
    }
    const std::uint64_t homs = count_homs(e.module, m);
    if (homs != restrictions.size()) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> cyclic_submodules(const Module& m) {
  std::set<std::vector<Elem>> found;
  for (Elem x = 0; x < m.size(); ++x) found.insert(span_of(m, std::vector<Elem>{x}));
  return {found.begin(), found.end()};
}

namespace {

bool uniserial(const Module& m) {
  const auto subs = cyclic_submodules(m);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const auto& a = subs[i];
      const auto& b = subs[j];
      if (!std::includes(a.begin(), a.end(), b.begin(), b.end()) &&
          !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return false;
    }
  }
  return true;
}

}  // namespace

StructureFlags structure_tests(const ModulePtr& m) {
  StructureFlags flags;
  flags.simple = !m->is_zero();
  for (Elem x = 1; x < m->size() && flags.simple; ++x) flags.simple = span_of(*m, std::vector<Elem>{x}).size() == m->size();
  flags.uniserial = uniserial(*m);
  flags.distributive = true;
  for (const Localization& loc : all_localizations(m->ring())) {
    const ModulePtr local = localize_module(m, loc);
    if (!local->is_zero()) flags.support.push_back(loc.prime);
    if (!uniserial(*local)) flags.distributive = false;
  }
  return flags;
}

IdealRealization realize_as_ideal(const ModulePtr& m) {
  const RingPtr& r = m->ring();
  if (!is_vnr(r).value) throw PreconditionError("realization as an ideal needs a von Neumann regular ring");
  if (!structure_tests(m).distributive) throw PreconditionError("realization as an ideal needs a distributive module");
  std::vector<Elem> idempotents;
  for (Elem x = 0; x < m->size(); ++x) {
    // (0:x) = Rf with f idempotent, and Rx ~ R(1-f)
    const auto f = idempotent_generator(element_annihilator(*m, x));
    if (!f) throw InternalError("annihilator over a regular ring is not idempotent-generated");
    idempotents.push_back(r->sub(r->one(), *f));
  }
  Ideal ideal = ideal_generated(r, idempotents);
  const Embedding as_module = ideal_as_module(ideal);
  IsoResult iso = is_isomorphic(m, as_module.module);
  if (!iso.isomorphic) throw InternalError("distributive module is not isomorphic to its realization ideal");
  return IdealRealization{std::move(ideal), std::move(*iso.witness)};
}

}  // namespace semireg
