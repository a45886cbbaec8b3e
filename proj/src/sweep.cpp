#include "semireg/sweep.hpp"

#include <yaml-cpp/yaml.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "semireg/report.hpp"
#include "semireg/spec_parser.hpp"

namespace semireg {

namespace {

std::string error_kind_name(RingErrorKind k) {
  switch (k) {
    case RingErrorKind::None:
      return "none";
    case RingErrorKind::Parse:
      return "parse";
    case RingErrorKind::Cap:
      return "cap_exceeded";
    case RingErrorKind::Internal:
      return "internal";
    case RingErrorKind::Precondition:
      return "precondition";
  }
  return "unknown";
}

RingResult evaluate(std::size_t index, const std::string& spec, const SweepConfig& config) {
  RingResult out;
  out.index = index;
  out.spec = spec;
  try {
    const RingPtr r = parse_ring_spec(spec);
    if (config.classify) out.report = classify_ring(r);
    for (const std::string& id : config.checks) out.checks.push_back(run_check(id, spec, r, config.max_oracle_size));
  } catch (const ParseError& e) {
    out.error_kind = RingErrorKind::Parse;
    out.error = e.what();
  } catch (const CapExceeded& e) {
    out.error_kind = RingErrorKind::Cap;
    out.error = e.what();
  } catch (const InternalError& e) {
    out.error_kind = RingErrorKind::Internal;
    out.error = e.what();
  } catch (const PreconditionError& e) {
    out.error_kind = RingErrorKind::Precondition;
    out.error = e.what();
  }
  return out;
}

template <class T>
T scalar(const YAML::Node& node, const char* key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

SweepConfig load_sweep_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw ConfigError("cannot read config " + path + ": " + e.what());
  }
  if (!root.IsMap()) throw ConfigError("config " + path + " is not a mapping");
  SweepConfig c;
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "corpus") {
      if (!v.IsSequence()) throw ConfigError("corpus must be a list");
      for (const auto& item : v)
        for (auto& s : expand_corpus_entry(scalar<std::string>(item, "corpus"))) c.corpus.push_back(std::move(s));
    } else if (key == "corpus_file") {
      std::filesystem::path file = scalar<std::string>(v, "corpus_file");
      if (file.is_relative()) file = std::filesystem::path(path).parent_path() / file;
      std::ifstream in(file);
      if (!in) throw ConfigError("cannot open corpus file " + file.string());
      for (auto& s : read_corpus(in)) c.corpus.push_back(std::move(s));
    } else if (key == "checks") {
      if (!v.IsSequence()) throw ConfigError("checks must be a list");
      for (const auto& item : v) c.checks.push_back(scalar<std::string>(item, "checks"));
    } else if (key == "caps") {
      for (const auto& cap : v) {
        const std::string name = cap.first.as<std::string>();
        if (name != "max_oracle_size") throw ConfigError("unknown cap '" + name + "'");
        const long n = scalar<long>(cap.second, "caps.max_oracle_size");
        if (n <= 0) throw ConfigError("caps must be positive");
        c.max_oracle_size = static_cast<std::size_t>(n);
      }
    } else if (key == "jobs") {
      const long n = scalar<long>(v, "jobs");
      if (n <= 0) throw ConfigError("jobs must be positive");
      c.jobs = static_cast<std::size_t>(n);
    } else if (key == "output") {
      for (const auto& o : v) {
        const std::string name = o.first.as<std::string>();
        if (name == "format") c.format = scalar<std::string>(o.second, "output.format");
        else if (name == "path") c.output = scalar<std::string>(o.second, "output.path");
        else throw ConfigError("unknown output key '" + name + "'");
      }
    } else if (key == "timings") {
      c.timings = scalar<bool>(v, "timings");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  validate(c);
  return c;
}

void validate(const SweepConfig& config) {
  for (const std::string& id : config.checks)
    if (!is_registered_check(id)) throw ConfigError("unknown check '" + id + "'");
  if (config.max_oracle_size == 0) throw ConfigError("max oracle size must be positive");
  if (config.jobs == 0) throw ConfigError("jobs must be positive");
  if (config.format != "json" && config.format != "markdown")
    throw ConfigError("format must be json or markdown, not '" + config.format + "'");
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  SweepResult result;
  result.rings.resize(config.corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.corpus.size(); i = next++)
      result.rings[i] = evaluate(i, config.corpus[i], config);
  };
  const std::size_t workers = std::min(config.jobs, std::max<std::size_t>(config.corpus.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(worker);
  }
  bool failed = false, parse = false, cap = false;
  for (const RingResult& r : result.rings) {
    failed = failed || r.error_kind == RingErrorKind::Internal || r.error_kind == RingErrorKind::Precondition ||
             std::any_of(r.checks.begin(), r.checks.end(), [](const CheckOutcome& c) { return c.failed(); });
    parse = parse || r.error_kind == RingErrorKind::Parse;
    cap = cap || r.error_kind == RingErrorKind::Cap;
  }
  result.exit_code = failed ? kExitInvariantFailure : parse ? kExitConfigError : cap ? kExitCapExceeded : kExitPass;
  return result;
}

nlohmann::json to_json(const SweepResult& result, const SweepConfig& config) {
  nlohmann::json j;
  j["versions"] = versions_json();
  j["checks"] = config.checks;
  j["max_oracle_size"] = config.max_oracle_size;
  j["rings"] = nlohmann::json::array();
  std::size_t failures = 0, errors = 0;
  for (const RingResult& r : result.rings) {
    nlohmann::json ring{{"index", r.index}, {"spec", r.spec}};
    if (r.report) ring["report"] = to_json(*r.report, config.timings);
    ring["checks"] = nlohmann::json::array();
    for (const CheckOutcome& c : r.checks) {
      ring["checks"].push_back(to_json(c));
      failures += c.failed();
    }
    if (r.error_kind != RingErrorKind::None) {
      ring["error"] = {{"kind", error_kind_name(r.error_kind)}, {"message", r.error}};
      ++errors;
    }
    j["rings"].push_back(std::move(ring));
  }
  j["summary"] = {{"rings", result.rings.size()},
                  {"failed_checks", failures},
                  {"ring_errors", errors},
                  {"exit_code", result.exit_code}};
  return j;
}

std::string to_markdown(const SweepResult& result) {
  std::vector<ClassificationReport> reports;
  for (const RingResult& r : result.rings)
    if (r.report) reports.push_back(*r.report);
  std::ostringstream os;
  if (!reports.empty()) os << markdown_table(reports) << "\n";
  os << "| # | spec | check | status | detail |\n|---|---|---|---|---|\n";
  for (const RingResult& r : result.rings) {
    for (const CheckOutcome& c : r.checks)
      os << "| " << r.index << " | `" << r.spec << "` | " << c.id << " | " << to_string(c.status) << " | " << c.detail
         << " |\n";
    if (r.error_kind != RingErrorKind::None)
      os << "| " << r.index << " | `" << r.spec << "` | - | " << error_kind_name(r.error_kind) << " | " << r.error
         << " |\n";
  }
  os << "\nexit code " << result.exit_code << "\n";
  return os.str();
}

void emit(const SweepResult& result, const SweepConfig& config) {
  const std::string text =
      config.format == "markdown" ? to_markdown(result) : to_json(result, config).dump(2) + "\n";
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output);
  if (!out) throw ConfigError("cannot write " + config.output);
  out << text;
}

}  // namespace semireg
