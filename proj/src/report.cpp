#include "semireg/report.hpp"

#include <sstream>

namespace semireg {

nlohmann::json to_json(const Witness& w) {
  return {{"kind", w.kind}, {"data", w.data}, {"detail", w.detail}};
}

nlohmann::json to_json(const ClassificationReport& r, bool with_timings) {
  nlohmann::json j;
  j["spec"] = r.spec;
  j["size"] = r.size;
  j["flags"] = r.flags;
  j["witnesses"] = nlohmann::json::object();
  for (const auto& [flag, w] : r.witnesses) j["witnesses"][flag] = to_json(w);
  if (with_timings) j["timings_ms"] = r.timings_ms;
  j["notes"] = r.notes;
  j["versions"] = versions_json();
  return j;
}

nlohmann::json to_json(const PeriodicityCertificate& c) {
  nlohmann::json j;
  j["kind"] = to_string(c.kind);
  j["modules"] = nlohmann::json::array();
  for (const ModulePtr& m : c.modules) j["modules"].push_back({{"spec", m->label()}, {"size", m->size()}});
  j["maps"] = nlohmann::json::array();
  for (const ModuleHom& h : c.maps) {
    j["maps"].push_back({{"generator_images", std::vector<Elem>(h.generator_images().begin(), h.generator_images().end())},
                         {"table", std::vector<Elem>(h.table().begin(), h.table().end())}});
  }
  j["transcript"] = nlohmann::json::array();
  for (const ExactnessCheck& e : c.transcript) j["transcript"].push_back({{"joint", e.joint}, {"holds", e.holds}});
  j["search_space"] = c.search_space;
  j["free_terms"] = c.free_terms;
  j["note"] = c.note;
  j["versions"] = versions_json();
  return j;
}

nlohmann::json versions_json() { return {{"lib", kLibraryVersion}, {"schema", kReportSchemaVersion}}; }

std::string markdown_table(const std::vector<ClassificationReport>& reports) {
  std::ostringstream os;
  os << "| spec | size |";
  for (const char* f : kFlagNames) os << " " << f << " |";
  os << "\n|---|---|";
  for (std::size_t k = 0; k < std::size(kFlagNames); ++k) os << "---|";
  os << "\n";
  for (const auto& r : reports) {
    os << "| `" << r.spec << "` | " << r.size << " |";
    for (const char* f : kFlagNames) os << " " << (r.flags.at(f) ? "yes" : "no") << " |";
    os << "\n";
  }
  return os.str();
}

}  // namespace semireg
