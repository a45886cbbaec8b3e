#pragma once

// Corpus sweeps: classify every ring, run the requested checks, and
// assemble one report ordered by corpus position.

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "semireg/classify.hpp"
#include "semireg/errors.hpp"
#include "semireg/periodicity.hpp"
#include "semireg/verify.hpp"

namespace semireg {

enum ExitCode : int { kExitPass = 0, kExitInvariantFailure = 1, kExitConfigError = 2, kExitCapExceeded = 3 };

/// A sweep or verify configuration is unusable as given.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct SweepConfig {
  /// Ring specs; "zmod:a..b" ranges are expanded by load_sweep_config.
  std::vector<std::string> corpus;
  std::vector<std::string> checks;
  std::size_t max_oracle_size = kOracleModuleCap;
  std::size_t jobs = 1;
  std::string format = "json";  ///< json or markdown
  std::string output;           ///< empty: standard output
  bool classify = true;
  bool timings = true;
};

/// YAML file with keys corpus, corpus_file, checks, caps.max_oracle_size,
/// jobs, output.format, output.path, timings. corpus_file is resolved
/// relative to the config file.
SweepConfig load_sweep_config(const std::string& path);

/// Throws ConfigError on unknown checks, zero caps or jobs, bad format.
void validate(const SweepConfig& config);

enum class RingErrorKind { None, Parse, Cap, Internal, Precondition };

struct RingResult {
  std::size_t index = 0;
  std::string spec;
  std::optional<ClassificationReport> report;
  std::vector<CheckOutcome> checks;
  RingErrorKind error_kind = RingErrorKind::None;
  std::string error;
};

struct SweepResult {
  std::vector<RingResult> rings;
  int exit_code = kExitPass;
};

/// Rings are spread over `jobs` worker threads; results keep corpus order.
SweepResult run_sweep(const SweepConfig& config);

nlohmann::json to_json(const SweepResult& result, const SweepConfig& config);
std::string to_markdown(const SweepResult& result);

/// Renders in config.format and writes to config.output (or stdout).
void emit(const SweepResult& result, const SweepConfig& config);

}  // namespace semireg
