#pragma once

// Ring-level predicates and the checks that tie them to the structure
// theorems. Every predicate is an exact scan over the tabled ring.
//
// Coherence is automatic for finite rings (they are Noetherian), and every
// prime ideal of a finite ring is maximal; both are recorded in report notes
// instead of being tested.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semireg/ideal.hpp"
#include "semireg/module.hpp"

namespace semireg {

/// Element or ideal indices explaining a verdict.
struct Witness {
  std::string kind;  ///< "element", "ideal", "pair", "maximal_ideal", "triple", ...
  std::vector<Elem> data;
  std::string detail;
};

struct Verdict {
  bool value = false;
  std::optional<Witness> witness;
};

/// (0:(0:I)) = I for every ideal; witness is the first failing ideal.
Verdict is_semiregular(const RingPtr& r);
/// Every ideal principal; witness is the first non-principal ideal.
Verdict is_bezout(const RingPtr& r);
/// Principal ideals pairwise comparable; witness is an incomparable pair.
Verdict is_valuation(const RingPtr& r);
/// Local valuation everywhere; the distributivity identity on ideal triples
/// is evaluated too and must agree.
Verdict is_arithmetical(const RingPtr& r);
/// Distributivity (A+B) n C = (A n C) + (B n C) on all triples.
Verdict is_distributive_lattice(const RingPtr& r);
Verdict is_vnr(const RingPtr& r);
Verdict is_local(const RingPtr& r);
Verdict is_field(const RingPtr& r);
/// Each localized maximal ideal is zero or simple; witness is the first
/// failing maximal ideal.
Verdict is_1_semiregular(const RingPtr& r);
/// Semiregular and arithmetical. When true, a (u,v,s,t) witness is also
/// required for every element (InternalError otherwise).
Verdict is_2_semiregular(const RingPtr& r);
/// Bezout and: Ra+Rb+Rc = R implies R(pa) + R(pb+qc) = R for some p, q.
Verdict is_edr(const RingPtr& r);
Verdict is_1_qf(const RingPtr& r);
Verdict is_2_qf(const RingPtr& r);

/// Local factors R*e for the primitive idempotents e; each is a ring with
/// identity e, returned as the ideal R*e.
std::vector<Ideal> local_factors(const RingPtr& r);

/// Shortest sequence of elementary row/column operations turning the matrix
/// diagonal, searched breadth first up to `max_depth`. Supports 2x2 and 2x3.
std::optional<int> diagonalization_depth(const RingPtr& r, const Matrix& a, int max_depth = 6);

struct Condition4Entry {
  Elem a;
  Elem e1;
  Elem e2;
};

struct Condition4Result {
  bool holds = false;
  bool bezout = false;
  std::vector<Condition4Entry> table;
  /// First element without an idempotent pair, when one exists.
  std::optional<Elem> failing_element;
};

/// Per element a, the least (e1, e2) by index with
/// R/aR ~ Re1 + Re2/Rae2 and Re2 n (0:a) = Rae2; holds also requires Bezout.
Condition4Result tgsr_condition4_witness(const RingPtr& r);

/// Arithmetical and I^2 pure for every ideal I.
Verdict tgsr_condition5(const RingPtr& r);

struct ZeroKrullDecomposition {
  std::vector<Ideal> x;  ///< maximal P with P*R_P = 0
  Ideal i;               ///< kernel of R -> product of R_P over x
};

ZeroKrullDecomposition zero_krull_decomposition(const RingPtr& r);

struct TrivextBreakdown {
  bool base_one_semiregular = false;
  bool localizations_are_fields = false;
  bool localized_module_simple = false;
  bool fp_injective = false;
  bool coherent = true;  ///< automatic for finite modules
  bool holds = false;
};

/// Right-hand side of the trivial extension criterion for a nonzero module.
TrivextBreakdown trivext_predicate(const RingPtr& a, const ModulePtr& e);

struct DuplicationResult {
  bool ideal_pure = false;
  bool fp_injective_case = false;
  bool semiregular_case = false;
  bool one_semiregular_case = false;
  bool direct_fp_injective = false;
  bool direct_semiregular = false;
  bool direct_one_semiregular = false;

  bool agrees() const {
    return fp_injective_case == direct_fp_injective && semiregular_case == direct_semiregular &&
           one_semiregular_case == direct_one_semiregular;
  }
};

/// Predicted flags of R x| I from purity of I and the flags of R, next to
/// the flags evaluated on the duplication itself. With `assert_agreement`
/// a mismatch raises InternalError.
DuplicationResult duplication_predicate(const RingPtr& r, std::span<const Elem> gens, bool assert_agreement = true);

/// R is FP-injective as a module over itself.
bool is_self_fp_injective(const RingPtr& r);

inline constexpr const char* kFlagNames[] = {"local",         "field",     "vnr",       "valuation",
                                             "arithmetical",  "bezout",    "semiregular", "edr",
                                             "one_semiregular", "two_semiregular", "one_qf", "two_qf"};

struct ClassificationReport {
  std::string spec;
  std::size_t size = 0;
  std::map<std::string, bool> flags;
  std::map<std::string, Witness> witnesses;
  std::map<std::string, double> timings_ms;
  std::vector<std::string> notes;
};

/// First violated implication between flags, if any.
std::optional<std::string> lattice_violation(const std::map<std::string, bool>& flags);

/// Evaluates every flag; throws InternalError if the implication lattice
/// fails.
ClassificationReport classify_ring(const RingPtr& r);

}  // namespace semireg
