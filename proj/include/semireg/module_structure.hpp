#pragma once

// Homomorphism search and the structural tests on finite modules: local
// freeness, projectivity, flatness, FP-injectivity, simple / uniserial /
// distributive, and realization of distributive modules as ideals.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "semireg/ideal.hpp"
#include "semireg/localization.hpp"
#include "semireg/module.hpp"

namespace semireg {

/// Default bound on the number of generator-image tuples a search may visit.
inline constexpr std::uint64_t kHomSearchBound = std::uint64_t{1} << 24;

/// Receives each relation-respecting tuple of generator images; return false
/// to stop the search.
using ImageVisitor = std::function<bool(std::span<const Elem>)>;

/// Depth-first generator-image assignment in least-index order. A relation
/// column is checked as soon as its last nonzero row has an image. Returns
/// false when the visitor stopped early. Throws CapExceeded when the product
/// of candidate counts exceeds `bound`.
bool search_homs(const Module& source, const Module& target, const std::vector<std::vector<Elem>>& candidates,
                 const ImageVisitor& visit, std::uint64_t bound = kHomSearchBound);

/// For generator g_i, the elements y of target with (0:g_i) inside (0:y);
/// every hom sends g_i into this set.
std::vector<std::vector<Elem>> annihilator_candidates(const Module& source, const Module& target);

std::vector<ModuleHom> hom_set(const ModulePtr& m, const ModulePtr& n, std::uint64_t bound = kHomSearchBound);

/// Number of homs m -> n without materializing them.
std::uint64_t count_homs(const ModulePtr& m, const ModulePtr& n, std::uint64_t bound = kHomSearchBound);

struct IsoResult {
  bool isomorphic = false;
  std::optional<ModuleHom> witness;
  /// Name of the invariant that separated the modules, if any did.
  std::string separated_by;
};

IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n);

/// Relation matrix pushed through the localization map.
ModulePtr localize_module(const ModulePtr& m, const Localization& loc);

/// m / {x | s*x = 0 for some s outside P}, re-tabled over the local ring.
/// Independent of the presentation; used to cross-check localize_module.
ModulePtr localize_module_concrete(const ModulePtr& m, const Localization& loc);

/// dim of m/Pm over the residue field. Throws PreconditionError unless the
/// ring is local.
std::size_t minimal_generators_local(const Module& m);

/// Elements whose images form a basis of m/Pm; by Nakayama they generate m.
std::vector<Elem> minimal_generating_set_local(const Module& m);

/// |m| == |R|^k with k = minimal_generators_local(m).
bool is_free_local(const Module& m);

/// Rank of m at each maximal ideal (maximal_ideals() order), or nullopt
/// where the localization is not free.
std::vector<std::optional<std::size_t>> local_ranks(const ModulePtr& m);

bool is_projective(const ModulePtr& m);

/// Same verdict as is_projective (finite modules are finitely presented).
/// Over a Bezout ring the elementwise criterion "r*u = 0 implies u in
/// (0:r)*m" is evaluated as well and must agree.
bool is_flat(const ModulePtr& m);

/// The elementwise criterion alone.
bool flat_elementwise(const Module& m);

/// Baer test over every ideal: each hom I -> m is multiplication by some
/// element of m. Finite rings are Noetherian, so this is FP-injectivity.
bool is_fp_injective(const ModulePtr& m);

struct StructureFlags {
  bool simple = false;
  bool uniserial = false;
  bool distributive = false;
  std::vector<Ideal> support;
};

StructureFlags structure_tests(const ModulePtr& m);

/// Sorted cyclic submodules Rx, deduplicated.
std::vector<std::vector<Elem>> cyclic_submodules(const Module& m);

struct IdealRealization {
  Ideal ideal;
  /// m -> the ideal viewed as a submodule of R.
  ModuleHom iso;
};

/// For a distributive module over a von Neumann regular ring: the ideal
/// generated by the idempotents e_x with Rx ~ Re_x, and an isomorphism.
IdealRealization realize_as_ideal(const ModulePtr& m);

}  // namespace semireg
