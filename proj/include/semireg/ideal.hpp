#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semireg/ring.hpp"

namespace semireg {

/// An ideal stored as its full element set together with a generator list.
class Ideal {
 public:
  /// `elements` must already be closed; use ideal_generated() otherwise.
  Ideal(RingPtr ring, std::vector<Elem> elements, std::vector<Elem> gens);

  const RingPtr& ring() const { return ring_; }
  std::span<const Elem> elements() const { return elements_; }
  std::span<const Elem> generators() const { return gens_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(Elem x) const { return member_[x] != 0; }
  bool is_zero() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == ring_->size(); }
  bool subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements_ == b.elements_; }

 private:
  RingPtr ring_;
  std::vector<Elem> elements_;
  std::vector<Elem> gens_;
  std::vector<char> member_;
};

/// Least ideal containing gens.
Ideal ideal_generated(const RingPtr& r, std::span<const Elem> gens);

/// Wraps an already closed element set, choosing a greedy least-index
/// generating set.
Ideal ideal_from_elements(const RingPtr& r, std::vector<Elem> elements);

Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);

/// {x | x*s = 0 for all s in the set}.
Ideal annihilator(const RingPtr& r, std::span<const Elem> set);
Ideal annihilator(const Ideal& i);

enum class IdealOp { Sum, Product, Intersection, Colon };

/// Set-level result; colon is (i : j) = {x | x*j is inside i}.
Ideal ideal_combine(IdealOp op, const Ideal& i, const Ideal& j);

inline constexpr std::size_t kDefaultIdealCap = 10000;

/// All ideals, sorted by (cardinality, element set). Throws CapExceeded when
/// more than `cap` distinct ideals appear.
std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t cap = kDefaultIdealCap);

/// Maximal proper ideals; empty for the zero ring.
std::vector<Ideal> maximal_ideals(const RingPtr& r);

bool is_maximal_ideal(const Ideal& p);

struct PurityResult {
  bool pure = false;
  /// Least a in the ideal with a not in a*I, when not pure.
  std::optional<Elem> witness;
};

/// a in a*I for every a of I; cross-checked against generation by a single
/// idempotent (equivalent for finite rings).
PurityResult is_pure_ideal(const Ideal& i);

/// Idempotent e with Re = i, if one exists (least index).
std::optional<Elem> idempotent_generator(const Ideal& i);

struct Radicals {
  Ideal jacobson;
  Ideal nil;
};

/// Jacobson radical and nilradical; asserted equal (finite rings are Artinian).
Radicals radicals(const RingPtr& r);

/// Least-index single generator of i, if i is principal.
std::optional<Elem> principal_generator(const Ideal& i);

/// Image of an ideal under a surjective ring homomorphism.
Ideal image_ideal(const RingHom& h, const Ideal& i);

/// Preimage of an ideal under a ring homomorphism.
Ideal preimage_ideal(const RingHom& h, const Ideal& j);

}  // namespace semireg
