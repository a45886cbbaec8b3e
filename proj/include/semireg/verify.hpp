#pragma once

// Named checks run per ring by `verify` and `sweep`. Theorem ids compare
// independent decision routes; flag ids evaluate one classification flag,
// cross-checked against the exhaustive oracle when the ring is small enough.

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "semireg/classify.hpp"

namespace semireg {

inline constexpr const char* kTheoremIds[] = {"tgsr",  "t2gsr", "ttriv", "tfp",      "pfperiodic", "cedr",
                                              "p2sr",  "plocs", "pfact", "pproduit", "ccycval",    "lattice"};

/// Modules of the trivial extension and duplication grids stay this small,
/// and the resulting rings at most kGridRingCap elements.
inline constexpr std::size_t kGridModuleCap = 8;
inline constexpr std::size_t kGridRingCap = 256;

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(CheckStatus s);

struct CheckOutcome {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();

  bool failed() const { return status == CheckStatus::Fail; }
};

/// Theorem ids, the flag names, and "tgsr_equivalence" (same as "tgsr").
bool is_registered_check(std::string_view id);
std::vector<std::string> registered_checks();

/// Runs one check on the ring given by `spec`. `oracle_cap` bounds the
/// modules handed to exhaustive oracles; larger rings skip the oracle part.
/// InternalError inside a check becomes a failed outcome; CapExceeded
/// propagates.
CheckOutcome run_check(std::string_view id, const std::string& spec, const RingPtr& r, std::size_t oracle_cap);

nlohmann::json to_json(const CheckOutcome& c);

}  // namespace semireg
