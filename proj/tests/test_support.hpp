#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "semireg/errors.hpp"
#include "semireg/module.hpp"
#include "semireg/ring.hpp"
#include "semireg/spec_parser.hpp"

namespace semireg::test {

inline std::string source_path(const std::string& rel) { return std::string(SEMIREG_SOURCE_DIR) + "/" + rel; }

/// Reference values recomputed by tests/oracles/derived_values.py.
inline const nlohmann::json& derived() {
  static const nlohmann::json values = [] {
    std::ifstream in(source_path("tests/data/derived_values.json"));
    return nlohmann::json::parse(in);
  }();
  return values;
}

inline std::vector<Elem> derived_list(const char* key) { return derived().at(key).get<std::vector<Elem>>(); }

/// The small corpus: every constructor, all rings of at most 16 elements.
inline std::vector<std::string> small_corpus() {
  std::ifstream in(source_path("configs/corpus_small.txt"));
  return read_corpus(in);
}

inline std::vector<RingPtr> small_corpus_rings() {
  std::vector<RingPtr> out;
  for (const auto& s : small_corpus()) out.push_back(parse_ring_spec(s));
  return out;
}

template <class T>
std::vector<Elem> to_vec(const T& span) {
  return {span.begin(), span.end()};
}

/// k -> k*1 as a map from Z/n; returns nullopt unless it is a ring isomorphism.
inline std::optional<RingHom> iso_from_zmod(const RingPtr& r) {
  const RingPtr z = build_zmod(r->size());
  RingHom h{z, r, std::vector<Elem>(r->size())};
  Elem acc = r->zero();
  for (Elem k = 0; k < r->size(); ++k) {
    h.images[k] = acc;
    acc = r->add(acc, r->one());
  }
  std::vector<Elem> sorted = h.images;
  std::sort(sorted.begin(), sorted.end());
  for (Elem k = 0; k < r->size(); ++k)
    if (sorted[k] != k) return std::nullopt;
  if (!is_ring_hom(h)) return std::nullopt;
  return h;
}

}  // namespace semireg::test
