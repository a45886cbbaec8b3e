#include "semireg/ideal.hpp"

#include <algorithm>
#include <set>

#include "semireg/errors.hpp"
#include "semireg/memo.hpp"

namespace semireg {

namespace {

std::vector<Elem> principal_elements(const FiniteRing& r, Elem g) {
  std::vector<char> seen(r.size(), 0);
  std::vector<Elem> out;
  for (Elem x = 0; x < r.size(); ++x) {
    const Elem y = r.mul(x, g);
    if (!seen[y]) {
      seen[y] = 1;
      out.push_back(y);
    }
  }
  return out;
}

// {w + x | w in a, x in b} for two additive subgroups, sorted.
std::vector<Elem> subgroup_sum(const FiniteRing& r, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<char> member(r.size(), 0);
  std::vector<Elem> out;
  for (Elem w : a) {
    for (Elem x : b) {
      const Elem s = r.add(w, x);
      if (!member[s]) {
        member[s] = 1;
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> closure(const FiniteRing& r, std::span<const Elem> gens) {
  std::vector<Elem> current{r.zero()};
  std::vector<char> member(r.size(), 0);
  member[r.zero()] = 1;
  for (Elem g : gens) {
    if (member[g]) continue;
    current = subgroup_sum(r, current, principal_elements(r, g));
    std::fill(member.begin(), member.end(), 0);
    for (Elem x : current) member[x] = 1;
  }
  std::sort(current.begin(), current.end());
  return current;
}

// Greedy least-index generating set of an already closed ideal.
std::vector<Elem> greedy_generators(const FiniteRing& r, std::span<const Elem> elements) {
  std::vector<Elem> gens;
  std::vector<Elem> span{r.zero()};
  std::vector<char> member(r.size(), 0);
  member[r.zero()] = 1;
  for (Elem x : elements) {
    if (member[x]) continue;
    gens.push_back(x);
    span = subgroup_sum(r, span, principal_elements(r, x));
    for (Elem y : span) member[y] = 1;
  }
  return gens;
}

void require_same_ring(const Ideal& i, const Ideal& j) {
  if (!same_ring(*i.ring(), *j.ring())) throw PreconditionError("ideals live in different rings");
}

}  // namespace

Ideal ideal_from_elements(const RingPtr& r, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  auto gens = greedy_generators(*r, elements);
  return Ideal(r, std::move(elements), std::move(gens));
}

Ideal::Ideal(RingPtr ring, std::vector<Elem> elements, std::vector<Elem> gens)
    : ring_(std::move(ring)), elements_(std::move(elements)), gens_(std::move(gens)), member_(ring_->size(), 0) {
  std::sort(elements_.begin(), elements_.end());
  for (Elem x : elements_) member_.at(x) = 1;
}

bool Ideal::subset_of(const Ideal& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem x) { return other.contains(x); });
}

Ideal ideal_generated(const RingPtr& r, std::span<const Elem> gens) {
  for (Elem g : gens)
    if (g >= r->size()) throw PreconditionError("generator index " + std::to_string(g) + " out of range");
  return Ideal(r, closure(*r, gens), std::vector<Elem>(gens.begin(), gens.end()));
}

Ideal zero_ideal(const RingPtr& r) { return Ideal(r, {r->zero()}, {}); }

Ideal unit_ideal(const RingPtr& r) {
  std::vector<Elem> all(r->size());
  for (Elem x = 0; x < r->size(); ++x) all[x] = x;
  return Ideal(r, std::move(all), {r->one()});
}

Ideal annihilator(const RingPtr& r, std::span<const Elem> set) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r->size(); ++x) {
    if (std::all_of(set.begin(), set.end(), [&](Elem s) { return r->mul(x, s) == r->zero(); }))
      out.push_back(x);
  }
  return ideal_from_elements(r, std::move(out));
}

Ideal annihilator(const Ideal& i) { return annihilator(i.ring(), i.elements()); }

Ideal ideal_combine(IdealOp op, const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const RingPtr& r = i.ring();
  switch (op) {
    case IdealOp::Sum: {
      std::vector<Elem> gens(i.generators().begin(), i.generators().end());
      gens.insert(gens.end(), j.generators().begin(), j.generators().end());
      return Ideal(r, subgroup_sum(*r, i.elements(), j.elements()), std::move(gens));
    }
    case IdealOp::Product: {
      std::vector<Elem> products;
      for (Elem a : i.elements())
        for (Elem b : j.elements()) products.push_back(r->mul(a, b));
      std::sort(products.begin(), products.end());
      products.erase(std::unique(products.begin(), products.end()), products.end());
      return ideal_from_elements(r, closure(*r, products));
    }
    case IdealOp::Intersection: {
      std::vector<Elem> out;
      for (Elem a : i.elements())
        if (j.contains(a)) out.push_back(a);
      return ideal_from_elements(r, std::move(out));
    }
    case IdealOp::Colon: {
      std::vector<Elem> out;
      for (Elem x = 0; x < r->size(); ++x) {
        if (std::all_of(j.elements().begin(), j.elements().end(),
                        [&](Elem b) { return i.contains(r->mul(x, b)); }))
          out.push_back(x);
      }
      return ideal_from_elements(r, std::move(out));
    }
  }
  throw InternalError("unknown ideal operation");
}

std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t cap) {
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> principals;
  for (Elem x = 0; x < r->size(); ++x) {
    auto p = closure(*r, std::vector<Elem>{x});
    if (found.insert(p).second) principals.push_back(std::move(p));
  }
  if (found.size() > cap) throw CapExceeded("ideal enumeration exceeded cap " + std::to_string(cap));
  // every ideal is a sum of principal ideals, so closing under adding a
  // principal ideal reaches the whole lattice
  std::vector<std::vector<Elem>> frontier = principals;
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& ideal : frontier) {
      for (const auto& p : principals) {
        auto s = subgroup_sum(*r, ideal, p);
        if (found.insert(s).second) {
          if (found.size() > cap) throw CapExceeded("ideal enumeration exceeded cap " + std::to_string(cap));
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Elem>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Ideal> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(ideal_from_elements(r, std::move(s)));
  return out;
}

std::vector<Ideal> maximal_ideals(const RingPtr& r) {
  static RingMemo<std::vector<Ideal>> memo;
  return *memo.get(r, [&] {
    std::vector<Ideal> out;
    if (r->is_zero_ring()) return out;
    for (const Ideal& i : enumerate_ideals(r)) {
      if (is_maximal_ideal(i)) out.push_back(i);
    }
    return out;
  });
}

bool is_maximal_ideal(const Ideal& p) {
  if (p.is_whole()) return false;
  const RingPtr& r = p.ring();
  // R/p is a field iff every x outside p has y with xy - 1 in p
  for (Elem x = 0; x < r->size(); ++x) {
    if (p.contains(x)) continue;
    bool invertible = false;
    for (Elem y = 0; y < r->size() && !invertible; ++y)
      invertible = p.contains(r->sub(r->mul(x, y), r->one()));
    if (!invertible) return false;
  }
  return true;
}

std::optional<Elem> idempotent_generator(const Ideal& i) {
  const FiniteRing& r = *i.ring();
  for (Elem e : i.elements()) {
    if (r.mul(e, e) != e) continue;
    if (principal_elements(r, e).size() == i.size()) return e;
  }
  return std::nullopt;
}

PurityResult is_pure_ideal(const Ideal& i) {
  const FiniteRing& r = *i.ring();
  PurityResult result{true, std::nullopt};
  for (Elem a : i.elements()) {
    bool ok = false;
    for (Elem b : i.elements()) {
      if (r.mul(a, b) == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      result = PurityResult{false, a};
      break;
    }
  }
  if (result.pure != idempotent_generator(i).has_value())
    throw InternalError("purity scan disagrees with idempotent generation in " + r.spec());
  return result;
}

Radicals radicals(const RingPtr& r) {
  Ideal jacobson = unit_ideal(r);
  for (const Ideal& m : maximal_ideals(r)) jacobson = ideal_combine(IdealOp::Intersection, jacobson, m);
  std::vector<Elem> nil;
  for (Elem x = 0; x < r->size(); ++x) {
    if (r->pow(x, r->size()) == r->zero()) nil.push_back(x);
  }
  Ideal nil_ideal = ideal_from_elements(r, std::move(nil));
  if (!(jacobson == nil_ideal)) throw InternalError("Jacobson radical differs from nilradical in " + r->spec());
  return Radicals{std::move(jacobson), std::move(nil_ideal)};
}

std::optional<Elem> principal_generator(const Ideal& i) {
  const FiniteRing& r = *i.ring();
  for (Elem g : i.elements()) {
    if (principal_elements(r, g).size() == i.size()) return g;
  }
  return std::nullopt;
}

Ideal image_ideal(const RingHom& h, const Ideal& i) {
  std::vector<Elem> img;
  for (Elem x : i.elements()) img.push_back(h(x));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return ideal_from_elements(h.target, closure(*h.target, img));
}

Ideal preimage_ideal(const RingHom& h, const Ideal& j) {
  std::vector<Elem> pre;
  for (Elem x = 0; x < h.source->size(); ++x)
    if (j.contains(h(x))) pre.push_back(x);
  return ideal_from_elements(h.source, std::move(pre));
}

}  // namespace semireg
