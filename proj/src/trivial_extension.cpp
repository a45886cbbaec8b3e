#include "semireg/errors.hpp"
#include "semireg/module.hpp"
#include "semireg/ring.hpp"

namespace semireg {

RingPtr build_trivial_extension(const RingPtr& a, const Module& e) {
  if (!same_ring(*a, *e.ring())) throw PreconditionError("module is not over the base ring");
  const std::size_t na = a->size(), ne = e.size(), n = na * ne;
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / ne), xe = static_cast<Elem>(x % ne);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / ne), ye = static_cast<Elem>(y % ne);
      add[x * n + y] = static_cast<Elem>(a->add(xa, ya) * ne + e.add(xe, ye));
      // (a,e)(a',e') = (aa', ae' + a'e)
      mul[x * n + y] = static_cast<Elem>(a->mul(xa, ya) * ne + e.add(e.act(xa, ye), e.act(ya, xe)));
    }
  }
  auto ring = std::make_shared<const FiniteRing>(n, std::move(add), std::move(mul), static_cast<Elem>(a->zero() * ne),
                                                 static_cast<Elem>(a->one() * ne),
                                                 "trivext:(" + a->spec() + ";" + e.label() + ")");
  validate_ring(*ring);
  return ring;
}

}  // namespace semireg
