#pragma once

#include "semireg/ideal.hpp"
#include "semireg/ring.hpp"

namespace semireg {

/// Localization of a finite ring at a maximal ideal P.
///
/// For finite rings S^{-1}R is the quotient of R by
///   kernel = { r | s*r = 0 for some s outside P }.
/// Multiplication by any s outside P is injective on R/kernel, and an
/// injective self-map of a finite set is bijective, so every such s becomes a
/// unit there. No fractions are ever formed.
struct Localization {
  RingPtr base;
  Ideal prime;
  Ideal kernel;
  RingPtr ring;  ///< the local ring R_P
  RingHom projection;

  /// Image of `prime` in R_P, the maximal ideal of the local ring.
  Ideal maximal_ideal() const;
};

Localization localize_at_maximal(const RingPtr& r, const Ideal& p);

/// One Localization per maximal ideal, in maximal_ideals() order.
std::vector<Localization> all_localizations(const RingPtr& r);

}  // namespace semireg
