#include "semireg/spec_parser.hpp"

#include <cctype>
#include <charconv>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingPtr ring() {
    const std::size_t start = pos_;
    if (take("zmod:")) {
      const std::size_t n = integer();
      if (n == 0) fail("zmod needs a positive modulus", start);
      if (n > kMaxRingSize) throw CapExceeded("zmod:" + std::to_string(n) + " exceeds the ring size cap");
      return build_zmod(n);
    }
    if (take("prod:[")) {
      std::vector<RingPtr> factors{ring()};
      while (take(",")) factors.push_back(ring());
      expect("]");
      std::size_t size = 1;
      for (const RingPtr& f : factors) {
        size *= f->size();
        if (size > kMaxRingSize) throw CapExceeded("product exceeds the ring size cap");
      }
      return build_product(factors);
    }
    if (take("quot:(")) {
      RingPtr base = ring();
      expect(";");
      auto gens = element_list(*base, ")");
      expect(")");
      return build_quotient(base, gens).ring;
    }
    if (take("dup:(")) {
      RingPtr base = ring();
      expect(";");
      auto gens = element_list(*base, ")");
      expect(")");
      if (base->size() * base->size() > kMaxRingSize) throw CapExceeded("duplication may exceed the ring size cap");
      return build_duplication(base, gens);
    }
    if (take("trivext:(")) {
      RingPtr base = ring();
      expect(";");
      ModulePtr e = module(base);
      expect(")");
      if (base->size() * e->size() > kMaxRingSize) throw CapExceeded("trivial extension exceeds the ring size cap");
      return build_trivial_extension(base, *e);
    }
    fail("expected a ring (zmod, prod, quot, dup, trivext)", start);
  }

  ModulePtr module(const RingPtr& r) {
    const std::size_t start = pos_;
    if (take("free:")) return free_module(r, integer());
    if (take("cyclic:[")) {
      auto gens = element_list(*r, "]");
      expect("]");
      return cyclic_module(r, gens);
    }
    if (take("matrix:[")) {
      std::vector<std::vector<Elem>> rows;
      if (!peek("]")) {
        do {
          expect("[");
          rows.push_back(element_list(*r, "]"));
          expect("]");
        } while (take(","));
      }
      expect("]");
      const std::size_t cols = rows.empty() ? 0 : rows.front().size();
      Matrix m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail("matrix rows differ in length", start);
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
      }
      return present(r, m);
    }
    fail("expected a module (free, cyclic, matrix)", start);
  }

  RingSpecParts parts() {
    RingSpecParts out;
    const std::size_t start = pos_;
    if (take("zmod:")) {
      pos_ = start;
      out.kind = "zmod";
      out.rings.push_back(ring());
    } else if (take("prod:[")) {
      out.kind = "prod";
      out.rings.push_back(ring());
      while (take(",")) out.rings.push_back(ring());
      expect("]");
    } else if (take("quot:(") || take("dup:(")) {
      out.kind = text_.substr(start).starts_with("quot") ? "quot" : "dup";
      out.rings.push_back(ring());
      expect(";");
      out.elements = element_list(*out.rings.front(), ")");
      expect(")");
    } else if (take("trivext:(")) {
      out.kind = "trivext";
      out.rings.push_back(ring());
      expect(";");
      out.module = module(out.rings.front());
      expect(")");
    } else {
      fail("expected a ring (zmod, prod, quot, dup, trivext)", start);
    }
    return out;
  }

  void finish() {
    if (pos_ != text_.size()) fail("unexpected trailing text", pos_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  bool peek(std::string_view token) const { return text_.substr(pos_).starts_with(token); }

  bool take(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!take(token)) fail("expected '" + std::string(token) + "'", pos_);
  }

  std::size_t integer() {
    std::size_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a non-negative integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  // Possibly empty; stops before `close`.
  std::vector<Elem> element_list(const FiniteRing& r, std::string_view close) {
    std::vector<Elem> out;
    if (peek(close)) return out;
    do {
      const std::size_t at = pos_;
      const std::size_t v = integer();
      if (v >= r.size())
        fail("element index " + std::to_string(v) + " out of range for " + r.spec() + " of size " +
                 std::to_string(r.size()),
             at);
      out.push_back(static_cast<Elem>(v));
    } while (take(","));
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

RingPtr parse_ring_spec(std::string_view text) {
  Parser p(text);
  RingPtr r = p.ring();
  p.finish();
  return r;
}

RingSpecParts parse_ring_spec_parts(std::string_view text) {
  Parser p(text);
  RingSpecParts out = p.parts();
  p.finish();
  return out;
}

ModulePtr parse_module_spec(const RingPtr& r, std::string_view text) {
  Parser p(text);
  ModulePtr m = p.module(r);
  p.finish();
  return m;
}

std::vector<std::string> expand_corpus_entry(std::string_view entry) {
  const std::string s = trim(entry);
  const auto dots = s.find("..");
  if (!s.starts_with("zmod:") || dots == std::string::npos) return {s};
  std::size_t lo = 0, hi = 0;
  const char* b = s.data();
  auto r1 = std::from_chars(b + 5, b + dots, lo);
  auto r2 = std::from_chars(b + dots + 2, b + s.size(), hi);
  if (r1.ec != std::errc() || r1.ptr != b + dots) throw ParseError("bad range start", 5);
  if (r2.ec != std::errc() || r2.ptr != b + s.size()) throw ParseError("bad range end", dots + 2);
  if (lo == 0 || hi < lo) throw ParseError("empty or invalid zmod range", 5);
  std::vector<std::string> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back("zmod:" + std::to_string(n));
  return out;
}

std::vector<std::string> read_corpus(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    for (auto& spec : expand_corpus_entry(body)) out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace semireg
