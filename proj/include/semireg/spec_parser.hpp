#pragma once

// Text forms of rings and modules.
//
//   ring   := "zmod:" INT | "prod:[" ring ("," ring)* "]"
//           | "quot:(" ring ";" INTLIST ")" | "dup:(" ring ";" INTLIST ")"
//           | "trivext:(" ring ";" module ")"
//   module := "free:" INT | "cyclic:[" INTLIST "]" | "matrix:[" rows "]"
//
// INTLIST entries are element indices of the enclosing ring.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "semireg/module.hpp"
#include "semireg/ring.hpp"

namespace semireg {

/// Rings larger than this are rejected before any table is built.
inline constexpr std::size_t kMaxRingSize = 4096;

RingPtr parse_ring_spec(std::string_view text);
ModulePtr parse_module_spec(const RingPtr& r, std::string_view text);

/// Top-level constructor of a ring spec and its immediate arguments.
struct RingSpecParts {
  std::string kind;            ///< "zmod", "prod", "quot", "dup", "trivext"
  std::vector<RingPtr> rings;  ///< factors, or the single base ring
  std::vector<Elem> elements;  ///< generator list of quot and dup
  ModulePtr module;            ///< trivext only
};

RingSpecParts parse_ring_spec_parts(std::string_view text);

/// "zmod:a..b" expands to zmod:a, ..., zmod:b; anything else is returned as is.
std::vector<std::string> expand_corpus_entry(std::string_view entry);

/// One entry per line; blank lines and text after '#' are ignored.
std::vector<std::string> read_corpus(std::istream& in);

}  // namespace semireg
