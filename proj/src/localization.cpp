#include "semireg/localization.hpp"

#include "semireg/errors.hpp"
#include "semireg/memo.hpp"

namespace semireg {

Ideal Localization::maximal_ideal() const { return image_ideal(projection, prime); }

Localization localize_at_maximal(const RingPtr& r, const Ideal& p) {
  if (!same_ring(*r, *p.ring())) throw PreconditionError("ideal does not belong to the ring");
  if (!is_maximal_ideal(p)) throw PreconditionError("localization requires a maximal ideal");
  std::vector<Elem> killed;
  for (Elem x = 0; x < r->size(); ++x) {
    for (Elem s = 0; s < r->size(); ++s) {
      if (!p.contains(s) && r->mul(s, x) == r->zero()) {
        killed.push_back(x);
        break;
      }
    }
  }
  if (ideal_generated(r, killed).size() != killed.size())
    throw InternalError("localization kernel is not an ideal");
  Ideal kernel = ideal_from_elements(r, std::move(killed));
  auto q = build_quotient(r, kernel.generators());
  for (Elem s = 0; s < r->size(); ++s) {
    if (!p.contains(s) && !is_unit(*q.ring, q.projection(s)))
      throw InternalError("element outside the prime did not become a unit");
  }
  return Localization{r, p, std::move(kernel), q.ring, std::move(q.projection)};
}

std::vector<Localization> all_localizations(const RingPtr& r) {
  static RingMemo<std::vector<Localization>> memo;
  return *memo.get(r, [&] {
    std::vector<Localization> out;
    for (const Ideal& m : maximal_ideals(r)) out.push_back(localize_at_maximal(r, m));
    return out;
  });
}

}  // namespace semireg
