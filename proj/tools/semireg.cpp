// semireg: classify rings, sweep corpora, verify theorems, run oracles.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "semireg/report.hpp"
#include "semireg/spec_parser.hpp"
#include "semireg/sweep.hpp"

using namespace semireg;

namespace {

struct Overrides {
  std::string config;
  std::string corpus;
  std::vector<std::string> checks;
  std::size_t max_oracle_size = 0;
  std::size_t jobs = 0;
  std::string format;
  std::string out;
  bool no_timings = false;
};

std::vector<std::string> corpus_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file " + path);
  return read_corpus(in);
}

void apply(const Overrides& o, SweepConfig& c) {
  if (!o.corpus.empty()) c.corpus = corpus_from_file(o.corpus);
  if (!o.checks.empty()) c.checks = o.checks;
  if (o.max_oracle_size) c.max_oracle_size = o.max_oracle_size;
  if (o.jobs) c.jobs = o.jobs;
  if (!o.format.empty()) c.format = o.format;
  if (!o.out.empty()) c.output = o.out;
  if (o.no_timings) c.timings = false;
}

void add_run_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--max-oracle-size", o.max_oracle_size, "largest module handed to an oracle")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_flag("--no-timings", o.no_timings, "omit timing fields");
}

int run(int argc, char** argv) {
  CLI::App app{"Finite commutative rings: classification and periodic resolutions"};
  app.require_subcommand(1);

  std::string spec, module_spec, check = "1-periodic";
  Overrides o;

  auto* classify = app.add_subcommand("classify", "classify one ring");
  classify->add_option("spec", spec, "ring spec, e.g. zmod:12")->required();
  classify->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  classify->add_flag("--no-timings", o.no_timings, "omit timing fields");

  auto* sweep = app.add_subcommand("sweep", "classify a corpus and run checks");
  sweep->add_option("--config", o.config, "YAML sweep config");
  sweep->add_option("--corpus", o.corpus, "corpus file, one spec per line");
  sweep->add_option("--checks", o.checks, "comma separated check ids")->delimiter(',');
  add_run_options(sweep, o);

  std::string theorem;
  auto* verify = app.add_subcommand("verify", "run one theorem check over a corpus");
  verify->add_option("theorem_id", theorem, "tgsr, t2gsr, ttriv, tfp, pfperiodic, ...")->required();
  verify->add_option("--corpus", o.corpus, "corpus file, one spec per line")->required();
  add_run_options(verify, o);

  auto* oracle = app.add_subcommand("oracle", "search a periodic resolution of one module");
  oracle->add_option("spec", spec, "ring spec")->required();
  oracle->add_option("--module", module_spec, "module spec, e.g. cyclic:[2]")->required();
  oracle->add_option("--check", check, "1-periodic or 2-periodic")
      ->check(CLI::IsMember({"1-periodic", "2-periodic"}));
  oracle->add_option("--max-oracle-size", o.max_oracle_size, "largest module accepted")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  if (*classify) {
    const ClassificationReport rep = classify_ring(parse_ring_spec(spec));
    if (o.format == "markdown")
      std::cout << markdown_table({rep});
    else
      std::cout << to_json(rep, !o.no_timings).dump(2) << "\n";
    return kExitPass;
  }
  if (*sweep || *verify) {
    SweepConfig config = o.config.empty() ? SweepConfig{} : load_sweep_config(o.config);
    apply(o, config);
    if (*verify) {
      if (std::find(std::begin(kTheoremIds), std::end(kTheoremIds), theorem) == std::end(kTheoremIds) &&
          theorem != "tgsr_equivalence")
        throw ConfigError("unknown theorem id '" + theorem + "'");
      config.checks = {theorem};
      config.classify = false;
    }
    const SweepResult result = run_sweep(config);
    emit(result, config);
    return result.exit_code;
  }
  const RingPtr r = parse_ring_spec(spec);
  const ModulePtr m = parse_module_spec(r, module_spec);
  const std::size_t cap = o.max_oracle_size ? o.max_oracle_size : kOracleModuleCap;
  const PeriodicityCertificate cert = check == "1-periodic" ? is_1_periodic_oracle(m, cap) : is_2_periodic_oracle(m, cap);
  std::cout << to_json(cert).dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InternalError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
}
