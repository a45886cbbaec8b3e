#pragma once

// Finite commutative rings stored as explicit addition and multiplication
// tables. Elements are indices 0..size-1; isomorphism is never assumed from
// construction history, only established by an explicit map.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semireg {

using Elem = std::uint32_t;

class FiniteRing {
 public:
  /// Checks table shapes, identities and additive inverses. Associativity,
  /// commutativity and distributivity are O(size^3) and live in
  /// table_violation(); every builder calls it before handing a ring out.
  FiniteRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
             std::string spec);

  std::size_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& spec() const { return spec_; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// x^k by repeated multiplication; pow(x, 0) == one().
  Elem pow(Elem x, std::size_t k) const;

  bool is_zero_ring() const { return size_ == 1; }

  /// True when both rings have identical tables (index-for-index).
  bool same_tables(const FiniteRing& other) const;

  std::span<const Elem> add_table() const { return add_; }
  std::span<const Elem> mul_table() const { return mul_; }

 private:
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::string spec_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Identity of rings for the purpose of module and ideal arithmetic.
bool same_ring(const FiniteRing& a, const FiniteRing& b);

/// Describes the first failed ring axiom, or nullopt when the tables form a
/// commutative ring with identity.
std::optional<std::string> table_violation(const FiniteRing& r);

/// Throws InternalError carrying table_violation()'s message.
void validate_ring(const FiniteRing& r);

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
};

/// True when the map preserves +, *, 0 and 1 on all pairs.
bool is_ring_hom(const RingHom& h);

/// Z/nZ with residues 0..n-1.
RingPtr build_zmod(std::size_t n);

/// Componentwise product; element (i_1,...,i_k) has index
/// i_1*|R_2|*...*|R_k| + ... + i_k.
RingPtr build_product(const std::vector<RingPtr>& factors);

/// Projection of build_product(factors) onto factor `index`.
RingHom product_projection(const RingPtr& product, const std::vector<RingPtr>& factors,
                           std::size_t index);

struct QuotientRing {
  RingPtr ring;
  RingHom projection;
};

/// r modulo the ideal generated by gens. Cosets are numbered in the order of
/// their least representative.
QuotientRing build_quotient(const RingPtr& r, std::span<const Elem> gens);

/// Amalgamated duplication: pairs (x, x+a) with a in the ideal generated by
/// gens. Element (x, x+a) has index x*|I| + position of a in I.
RingPtr build_duplication(const RingPtr& r, std::span<const Elem> gens);

class Module;

/// Idealization A x E with (a,e)(a',e') = (aa', ae' + a'e). Element (a,e) has
/// index a*|E| + e.
RingPtr build_trivial_extension(const RingPtr& a, const Module& e);

struct UnitsAndIdempotents {
  std::vector<Elem> units;
  std::vector<Elem> idempotents;
};

UnitsAndIdempotents units_and_idempotents(const FiniteRing& r);

bool is_unit(const FiniteRing& r, Elem x);

/// Nonzero idempotents e admitting no idempotent f with 0 != f != e and fe = f.
/// For a finite commutative ring these are pairwise orthogonal and sum to 1.
std::vector<Elem> primitive_idempotents(const FiniteRing& r);

std::string format_int_list(std::span<const Elem> values);

}  // namespace semireg
