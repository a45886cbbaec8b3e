#pragma once

// Exhaustive searches for periodic resolutions of small modules, and the
// explicit constructions that produce them.
//
// Over a finite ring a finitely presented flat module is projective, so the
// flat ("F-") variants of periodicity coincide with the projective ones;
// every certificate carries that note.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semireg/fitting.hpp"
#include "semireg/module.hpp"
#include "semireg/module_structure.hpp"

namespace semireg {

/// Modules up to this size are accepted by the oracles by default.
inline constexpr std::size_t kOracleModuleCap = 16;

struct ProjectiveModule {
  ModulePtr module;
  /// Multiplicity of R*e_i for each primitive idempotent e_i.
  std::vector<std::size_t> multiplicities;
  bool free = false;
};

/// Direct sums of the indecomposable projectives R*e (e primitive
/// idempotent) of cardinality at most `cap`, one per isomorphism class,
/// ordered by cardinality and then multiplicity vector.
std::vector<ProjectiveModule> enumerate_projectives_up_to_size(const RingPtr& r, std::size_t cap);

struct ExactnessCheck {
  std::string joint;
  bool holds = false;
};

/// Checks 0 -> M_0 -> M_1 -> ... -> M_k -> 0 for the composable maps:
/// injectivity, ker = im at each inner joint, surjectivity.
std::vector<ExactnessCheck> exactness_transcript(const std::vector<ModuleHom>& maps);

bool all_hold(const std::vector<ExactnessCheck>& checks);

enum class CertificateKind { OnePeriodic, TwoPeriodic, Negative };

std::string to_string(CertificateKind kind);

struct PeriodicityCertificate {
  CertificateKind kind = CertificateKind::Negative;
  /// Left to right: M, P, M or M, P2, P1, M. Empty for negative results.
  std::vector<ModulePtr> modules;
  std::vector<ModuleHom> maps;
  std::vector<ExactnessCheck> transcript;
  /// Exhausted candidates (negative) or the path to the witness (positive).
  std::string search_space;
  /// Every middle term is free, not only projective.
  bool free_terms = false;
  std::string note;

  bool positive() const { return kind != CertificateKind::Negative; }
};

/// 0 -> M -> P -> M -> 0 with P projective. |P| must equal |M|^2, so only
/// projectives of that size are tried; images already seen are skipped
/// because the cokernel depends only on the image.
PeriodicityCertificate is_1_periodic_oracle(const ModulePtr& m, std::size_t cap = kOracleModuleCap);

/// 0 -> M -> P2 -> P1 -> M -> 0. P1 is a projective cover (smallest
/// projective mapping onto M) with kernel K; then 0 -> M -> P2 -> K -> 0 is
/// searched with |P2| = |M||K|. Completeness: any other resolution has
/// P1' = P1 + Q and kernel K + Q, and splitting Q off P2' leaves a sequence
/// of the searched shape.
PeriodicityCertificate is_2_periodic_oracle(const ModulePtr& m, std::size_t cap = kOracleModuleCap);

/// Cyclic modules R/I, one per ideal I, in enumerate_ideals() order.
std::vector<ModulePtr> cyclic_modules(const RingPtr& r);

/// Nonzero direct sums of cyclic modules with at most `cap` elements, one per
/// isomorphism class, ordered by size. Over a local ring with a non-cyclic
/// indecomposable this misses modules; it is a grid, not a classification.
std::vector<ModulePtr> modules_up_to_size(const RingPtr& r, std::size_t cap);

struct OracleSweep {
  bool all_positive = true;
  /// Annihilator ideal of the first cyclic module without a certificate.
  std::optional<Ideal> first_failure;
};

OracleSweep all_cyclic_1_periodic(const RingPtr& r, std::size_t cap = kOracleModuleCap);
OracleSweep all_cyclic_2_periodic(const RingPtr& r, std::size_t cap = kOracleModuleCap);

struct UvstWitness {
  Elem a, b, u, v, s, t;
  friend bool operator==(const UvstWitness&, const UvstWitness&) = default;
};

/// Generating pair {a, b} of (0:x) (a = b = least generator when principal,
/// else the least pair) and the lexicographically least (u, v, s, t) with
/// u, v in R, s, t in (0:x) and bu = av, su = a(1+t), sv = b(1+t). Other
/// generating pairs are tried in order if the canonical one has no solution.
std::optional<UvstWitness> find_uvst_witness(const RingPtr& r, Elem x);

struct LprojResult {
  ModulePtr g;
  /// 0 -> R/Rr -> G -> Rr -> 0
  std::vector<ModuleHom> maps;
  std::vector<ExactnessCheck> transcript;
  FittingChain fitting;
};

/// G presented by rows (r,u,v), (0,a,b). Checks the preconditions (throws
/// PreconditionError naming the failed one), then asserts G projective of
/// constant rank 1 and the exact sequence (InternalError on failure).
LprojResult build_lproj_module(const RingPtr& ring, Elem r, Elem a, Elem b, Elem u, Elem v, Elem s, Elem t);

struct SpliceInput {
  /// 0 -> W -> F1 -> F0 -> W -> 0 as iota, phi, pi.
  ModuleHom iota;
  ModuleHom phi;
  ModuleHom pi;
  /// Surjection from a free module F onto W.
  ModuleHom alpha;
};

struct SpliceResult {
  ModulePtr g;
  ModuleHom beta;   ///< F -> F0 with pi . beta = alpha
  ModuleHom gamma;  ///< F1 + F -> F0, (x, y) -> phi(x) + beta(y)
  /// 0 -> W -> G -> F -> W -> 0
  std::vector<ModuleHom> maps;
  std::vector<ExactnessCheck> transcript;
};

SpliceResult splice_2F(const SpliceInput& input);

/// Input for splice_2F from a positive two-periodic certificate, with F the
/// free module on a generating set of W (minimal when the ring is local).
SpliceInput splice_input_from(const PeriodicityCertificate& two_periodic);

struct ShortExact {
  ModuleHom inclusion;   ///< U -> G
  ModuleHom projection;  ///< G -> U'
};

/// For 0 -> U -> H -> U' -> 0 and 0 -> V -> J -> V' -> 0, forms the sum
/// sequence with G = H + J, takes G' = inverse image of U' and checks
/// G'/V ~ H.
bool summand_quotient_matches(const ShortExact& first, const ShortExact& second);

/// A module U over A with an endomorphism f, f o f = 0.
struct PairModule {
  RingPtr base;
  ModulePtr carrier;
  ModuleHom endo;
};

PairModule make_pair_module(ModulePtr carrier, ModuleHom endo);

/// A x A (the trivial extension of A by itself), built once per base ring.
RingPtr pair_ring(const RingPtr& base);

/// U as a module over A x A via (a,b)u = au + b f(u).
ModulePtr induced_module(const PairModule& p);

/// ker f == im f, cross-checked against is_flat of the induced module.
/// Requires a von Neumann regular base.
bool pair_flatness(const PairModule& p);

/// 0 -> (U,f) -> (U+U, g) -> (U,f) -> 0 with g(u,v) = (v,0),
/// beta(u) = (u, f(u)), alpha(u,v) = f(u) + v. Requires characteristic 2 and
/// a von Neumann regular base.
PeriodicityCertificate char2_F_periodic(const PairModule& p);

/// Pair modules with |U| <= cap over a von Neumann regular base, one per
/// isomorphism class of induced modules.
std::vector<PairModule> enumerate_pair_modules(const RingPtr& base, std::size_t cap);

}  // namespace semireg
