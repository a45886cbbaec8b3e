#include "semireg/module.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Coordinates in R^g packed as mixed-radix integers, first coordinate most
// significant.
class FreeCoords {
 public:
  FreeCoords(const FiniteRing& r, std::size_t rank) : r_(r), rank_(rank) {}

  std::uint64_t encode(std::span<const Elem> v) const {
    std::uint64_t code = 0;
    for (Elem d : v) code = code * r_.size() + d;
    return code;
  }

  std::vector<Elem> decode(std::uint64_t code) const {
    std::vector<Elem> v(rank_);
    for (std::size_t k = rank_; k-- > 0;) {
      v[k] = static_cast<Elem>(code % r_.size());
      code /= r_.size();
    }
    return v;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto va = decode(a);
    auto vb = decode(b);
    for (std::size_t k = 0; k < rank_; ++k) va[k] = r_.add(va[k], vb[k]);
    return encode(va);
  }

  std::uint64_t scale(Elem s, std::uint64_t a) const {
    auto va = decode(a);
    for (Elem& d : va) d = r_.mul(s, d);
    return encode(va);
  }

 private:
  const FiniteRing& r_;
  std::size_t rank_;
};

// Checked |R|^rank; returns nullopt on exceeding `limit`.
std::optional<std::uint64_t> checked_power(std::size_t base, std::size_t rank, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    if (base != 0 && total > limit / base) return std::nullopt;
    total *= base;
  }
  if (total > limit) return std::nullopt;
  return total;
}

// Tables-only view used while a Module is being assembled.
struct RawModule {
  const FiniteRing& ring;
  std::size_t size;
  std::span<const Elem> add;
  std::span<const Elem> act;

  Elem plus(Elem x, Elem y) const { return add[x * size + y]; }
  Elem times(Elem r, Elem x) const { return act[r * size + x]; }
};

std::vector<Elem> cyclic_elements(const RawModule& m, Elem x) {
  std::vector<char> seen(m.size, 0);
  std::vector<Elem> out;
  for (Elem r = 0; r < m.ring.size(); ++r) {
    const Elem y = m.times(r, x);
    if (!seen[y]) {
      seen[y] = 1;
      out.push_back(y);
    }
  }
  return out;
}

// Grows `span` (with membership marks) to span + Rx.
void absorb(const RawModule& m, std::vector<Elem>& span, std::vector<char>& member, Elem x) {
  const auto cyc = cyclic_elements(m, x);
  const std::size_t snapshot = span.size();
  for (std::size_t i = 0; i < snapshot; ++i) {
    for (Elem c : cyc) {
      const Elem s = m.plus(span[i], c);
      if (!member[s]) {
        member[s] = 1;
        span.push_back(s);
      }
    }
  }
}

std::size_t grown_size(const RawModule& m, const std::vector<Elem>& span, const std::vector<char>& member,
                       Elem x, std::vector<std::uint32_t>& stamp, std::uint32_t tag) {
  const auto cyc = cyclic_elements(m, x);
  std::size_t extra = 0;
  for (Elem w : span) {
    for (Elem c : cyc) {
      const Elem s = m.plus(w, c);
      if (!member[s] && stamp[s] != tag) {
        stamp[s] = tag;
        ++extra;
      }
    }
  }
  return span.size() + extra;
}

std::vector<Elem> greedy_generating_set(const RawModule& m, std::span<const Elem> target) {
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  std::vector<char> member(m.size, 0);
  member[0] = 1;
  const bool exhaustive = target.size() * target.size() * m.ring.size() <= (std::size_t{1} << 26);
  std::vector<std::uint32_t> stamp(m.size, 0);
  std::uint32_t tag = 0;
  while (span.size() < target.size()) {
    Elem best = kUnset;
    std::size_t best_size = 0;
    for (Elem x : target) {
      if (member[x]) continue;
      std::size_t candidate_size;
      if (exhaustive) {
        candidate_size = grown_size(m, span, member, x, stamp, ++tag);
      } else {
        candidate_size = cyclic_elements(m, x).size();
      }
      if (candidate_size > best_size) {
        best_size = candidate_size;
        best = x;
      }
    }
    if (best == kUnset) throw InternalError("generating set search stalled");
    gens.push_back(best);
    absorb(m, span, member, best);
  }
  return gens;
}

void check_submodule(const Module& m, std::span<const Elem> elements) {
  std::vector<char> member(m.size(), 0);
  for (Elem x : elements) {
    if (x >= m.size()) throw PreconditionError("submodule element out of range");
    member[x] = 1;
  }
  if (!member[0]) throw PreconditionError("submodule must contain zero");
  for (Elem x : elements) {
    for (Elem y : elements)
      if (!member[m.add(x, y)]) throw PreconditionError("element set not closed under addition");
    for (Elem r = 0; r < m.ring()->size(); ++r)
      if (!member[m.act(r, x)]) throw PreconditionError("element set not closed under the ring action");
  }
}

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<Elem> values) : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != rows * cols) throw PreconditionError("matrix data has wrong length");
}

std::string Matrix::to_spec() const {
  std::string out = "matrix:[";
  for (std::size_t i = 0; i < rows; ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += ",";
      out += std::to_string(at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

Module::Module(Parts parts)
    : ring_(std::move(parts.ring)),
      size_(parts.size),
      add_(std::move(parts.add)),
      act_(std::move(parts.act)),
      neg_(parts.size, 0),
      gens_(std::move(parts.gens)),
      relations_(std::move(parts.relations)),
      coords_(std::move(parts.coords)),
      label_(std::move(parts.label)) {
  if (size_ == 0) throw PreconditionError("module must contain zero");
  if (size_ > kModuleSizeCap)
    throw CapExceeded("module of size " + std::to_string(size_) + " exceeds the tabled cap");
  if (add_.size() != size_ * size_ || act_.size() != ring_->size() * size_)
    throw PreconditionError("module tables have wrong shape");
  if (relations_.rows != gens_.size()) throw PreconditionError("relation matrix rows must match generators");
  if (coords_.size() != size_ * gens_.size()) throw PreconditionError("coordinate table has wrong shape");
  for (Elem x = 0; x < size_; ++x) {
    bool found = false;
    for (Elem y = 0; y < size_; ++y) {
      if (add_[x * size_ + y] == 0) {
        neg_[x] = y;
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("module element without additive inverse");
  }
  for (Elem x = 0; x < size_; ++x)
    if (combine(coords(x)) != x) throw InternalError("coordinates do not reproduce element " + std::to_string(x));
  if (label_.empty()) label_ = relations_.to_spec();
}

Elem Module::combine(std::span<const Elem> c) const {
  Elem acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc = add(acc, act(c[i], gens_[i]));
  return acc;
}

void validate_module(const Module& m) {
  const FiniteRing& r = *m.ring();
  const std::size_t n = m.size();
  for (Elem x = 0; x < n; ++x) {
    if (m.add(x, 0) != x) throw InternalError("module additive identity fails");
    if (m.act(r.one(), x) != x) throw InternalError("module action is not unital");
    for (Elem y = 0; y < n; ++y) {
      if (m.add(x, y) != m.add(y, x)) throw InternalError("module addition not commutative");
      for (Elem z = 0; z < n; ++z)
        if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z))) throw InternalError("module addition not associative");
    }
    for (Elem a = 0; a < r.size(); ++a) {
      for (Elem b = 0; b < r.size(); ++b) {
        if (m.act(r.add(a, b), x) != m.add(m.act(a, x), m.act(b, x))) throw InternalError("(a+b)x != ax+bx");
        if (m.act(r.mul(a, b), x) != m.act(a, m.act(b, x))) throw InternalError("(ab)x != a(bx)");
      }
      for (Elem y = 0; y < n; ++y)
        if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y))) throw InternalError("a(x+y) != ax+ay");
    }
  }
  const Matrix& rel = m.relations();
  for (std::size_t j = 0; j < rel.cols; ++j) {
    std::vector<Elem> col(rel.rows);
    for (std::size_t i = 0; i < rel.rows; ++i) col[i] = rel.at(i, j);
    if (m.combine(col) != 0) throw InternalError("relation column does not vanish");
  }
}

ModulePtr present(const RingPtr& r, const Matrix& rel, std::string label) {
  const std::size_t q = r->size();
  const std::size_t rank = rel.rows;
  const auto total = checked_power(q, rank, kPresentEnumerationCap);
  if (!total) throw CapExceeded("presentation needs more than 2^22 free-module vectors");
  for (Elem v : rel.data)
    if (v >= q) throw PreconditionError("relation entry out of range");
  const FreeCoords fc(*r, rank);

  // column span N
  std::vector<char> in_span(*total, 0);
  std::vector<std::uint64_t> span{0};
  in_span[0] = 1;
  std::vector<Elem> column(rank);
  for (std::size_t j = 0; j < rel.cols; ++j) {
    for (std::size_t i = 0; i < rank; ++i) column[i] = rel.at(i, j);
    const std::uint64_t code = fc.encode(column);
    std::vector<std::uint64_t> cyc;
    for (Elem s = 0; s < q; ++s) cyc.push_back(fc.scale(s, code));
    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
    std::sort(cyc.begin(), cyc.end());
    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
    const std::size_t snapshot = span.size();
    for (std::size_t a = 0; a < snapshot; ++a) {
      for (std::uint64_t c : cyc) {
        const std::uint64_t s = fc.add(span[a], c);
        if (!in_span[s]) {
          in_span[s] = 1;
          span.push_back(s);
        }
      }
    }
  }

  std::vector<Elem> coset(*total, kUnset);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t v = 0; v < *total; ++v) {
    if (coset[v] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(v);
    if (reps.size() > kModuleSizeCap)
      throw CapExceeded("presented module exceeds the tabled size cap");
    for (std::uint64_t w : span) coset[fc.add(v, w)] = id;
  }
  const std::size_t k = reps.size();
  Module::Parts parts;
  parts.ring = r;
  parts.size = k;
  parts.add.resize(k * k);
  parts.act.resize(q * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) parts.add[i * k + j] = coset[fc.add(reps[i], reps[j])];
    for (Elem s = 0; s < q; ++s) parts.act[s * k + i] = coset[fc.scale(s, reps[i])];
  }
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Elem> unit(rank, r->zero());
    unit[i] = r->one();
    parts.gens.push_back(coset[fc.encode(unit)]);
  }
  parts.relations = rel;
  parts.coords.reserve(k * rank);
  for (std::uint64_t rep : reps) {
    const auto digits = fc.decode(rep);
    parts.coords.insert(parts.coords.end(), digits.begin(), digits.end());
  }
  parts.label = std::move(label);
  return std::make_shared<const Module>(std::move(parts));
}

ModulePtr free_module(const RingPtr& r, std::size_t rank) {
  return present(r, Matrix(rank, 0), "free:" + std::to_string(rank));
}

ModulePtr cyclic_module(const RingPtr& r, std::span<const Elem> annihilator_gens) {
  Matrix rel(1, annihilator_gens.size(), std::vector<Elem>(annihilator_gens.begin(), annihilator_gens.end()));
  return present(r, rel, "cyclic:[" + format_int_list(annihilator_gens) + "]");
}

ModulePtr module_from_action(const RingPtr& r, std::size_t size, std::vector<Elem> add, std::vector<Elem> act,
                             std::string label) {
  if (size > kModuleSizeCap) throw CapExceeded("module exceeds the tabled size cap");
  if (add.size() != size * size || act.size() != r->size() * size)
    throw PreconditionError("module tables have wrong shape");
  const RawModule raw{*r, size, add, act};
  std::vector<Elem> all(size);
  for (Elem x = 0; x < size; ++x) all[x] = x;
  const std::vector<Elem> gens = greedy_generating_set(raw, all);
  const std::size_t g = gens.size();
  const std::size_t q = r->size();

  const auto free_size = checked_power(q, g, std::uint64_t{1} << 62);
  if (!free_size || *free_size / size > (std::uint64_t{1} << 22))
    throw CapExceeded("relation kernel too large to enumerate");
  const std::uint64_t kernel_size = *free_size / size;
  const FreeCoords fc(*r, g);

  // coordinates by breadth-first search over x -> x + s*g_i; each non-tree
  // edge yields a kernel element and together they generate the kernel
  std::vector<std::vector<Elem>> coords(size);
  std::vector<char> seen(size, 0);
  coords[0] = std::vector<Elem>(g, r->zero());
  seen[0] = 1;
  std::deque<Elem> queue{0};
  std::unordered_set<std::uint64_t> kernel{0};
  std::vector<std::uint64_t> kernel_list{0};
  std::vector<std::vector<Elem>> relation_columns;
  auto offer = [&](const std::vector<Elem>& c) {
    if (kernel_list.size() >= kernel_size) return;
    const std::uint64_t code = fc.encode(c);
    if (kernel.count(code)) return;
    relation_columns.push_back(c);
    std::vector<std::uint64_t> cyc;
    for (Elem s = 0; s < q; ++s) cyc.push_back(fc.scale(s, code));
    std::sort(cyc.begin(), cyc.end());
    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
    const std::size_t snapshot = kernel_list.size();
    for (std::size_t a = 0; a < snapshot; ++a) {
      for (std::uint64_t cc : cyc) {
        const std::uint64_t s = fc.add(kernel_list[a], cc);
        if (kernel.insert(s).second) kernel_list.push_back(s);
      }
    }
  };
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g; ++i) {
      for (Elem s = 0; s < q; ++s) {
        const Elem z = raw.plus(x, raw.times(s, gens[i]));
        std::vector<Elem> c = coords[x];
        c[i] = r->add(c[i], s);
        if (!seen[z]) {
          seen[z] = 1;
          coords[z] = std::move(c);
          queue.push_back(z);
        } else {
          for (std::size_t k = 0; k < g; ++k) c[k] = r->sub(c[k], coords[z][k]);
          offer(c);
        }
      }
    }
  }
  if (kernel_list.size() != kernel_size) throw InternalError("relation kernel has unexpected size");

  Module::Parts parts;
  parts.ring = r;
  parts.size = size;
  parts.add = std::move(add);
  parts.act = std::move(act);
  parts.gens = gens;
  parts.relations = Matrix(g, relation_columns.size());
  for (std::size_t j = 0; j < relation_columns.size(); ++j)
    for (std::size_t i = 0; i < g; ++i) parts.relations.at(i, j) = relation_columns[j][i];
  parts.coords.reserve(size * g);
  for (const auto& c : coords) parts.coords.insert(parts.coords.end(), c.begin(), c.end());
  parts.label = std::move(label);
  return std::make_shared<const Module>(std::move(parts));
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (!same_ring(*a->ring(), *b->ring())) throw PreconditionError("direct sum of modules over different rings");
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  if (n > kModuleSizeCap) throw CapExceeded("direct sum exceeds the tabled size cap");
  const std::size_t q = a->ring()->size();
  Module::Parts parts;
  parts.ring = a->ring();
  parts.size = n;
  parts.add.resize(n * n);
  parts.act.resize(q * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      parts.add[x * n + y] = static_cast<Elem>(a->add(xa, ya) * nb + b->add(xb, yb));
    }
    for (Elem s = 0; s < q; ++s) parts.act[s * n + x] = static_cast<Elem>(a->act(s, xa) * nb + b->act(s, xb));
  }
  const std::size_t ga = a->num_generators(), gb = b->num_generators();
  for (Elem g : a->generators()) parts.gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b->generators()) parts.gens.push_back(g);
  const Matrix& ra = a->relations();
  const Matrix& rb = b->relations();
  parts.relations = Matrix(ga + gb, ra.cols + rb.cols);
  for (std::size_t i = 0; i < ga; ++i)
    for (std::size_t j = 0; j < ra.cols; ++j) parts.relations.at(i, j) = ra.at(i, j);
  for (std::size_t i = 0; i < gb; ++i)
    for (std::size_t j = 0; j < rb.cols; ++j) parts.relations.at(ga + i, ra.cols + j) = rb.at(i, j);
  parts.coords.reserve(n * (ga + gb));
  for (std::size_t x = 0; x < n; ++x) {
    const auto ca = a->coords(static_cast<Elem>(x / nb));
    const auto cb = b->coords(static_cast<Elem>(x % nb));
    parts.coords.insert(parts.coords.end(), ca.begin(), ca.end());
    parts.coords.insert(parts.coords.end(), cb.begin(), cb.end());
  }
  return std::make_shared<const Module>(std::move(parts));
}

ModulePtr direct_sum(std::span<const ModulePtr> parts) {
  if (parts.empty()) throw PreconditionError("direct sum of no modules needs a ring; use free_module(r, 0)");
  ModulePtr acc = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) acc = direct_sum(acc, parts[k]);
  return acc;
}

bool respects_relations(const Module& source, const Module& target, std::span<const Elem> images) {
  const Matrix& rel = source.relations();
  for (std::size_t j = 0; j < rel.cols; ++j) {
    Elem acc = 0;
    for (std::size_t i = 0; i < rel.rows; ++i) acc = target.add(acc, target.act(rel.at(i, j), images[i]));
    if (acc != 0) return false;
  }
  return true;
}

ModuleHom::ModuleHom(ModulePtr source, ModulePtr target, std::vector<Elem> images, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), table_(std::move(table)) {}

ModuleHom ModuleHom::from_generator_images(ModulePtr source, ModulePtr target, std::vector<Elem> images) {
  if (!same_ring(*source->ring(), *target->ring())) throw PreconditionError("hom between modules over different rings");
  if (images.size() != source->num_generators()) throw PreconditionError("one image per generator required");
  for (Elem y : images)
    if (y >= target->size()) throw PreconditionError("generator image out of range");
  if (!respects_relations(*source, *target, images)) throw PreconditionError("generator images violate a relation");
  std::vector<Elem> table(source->size());
  for (Elem x = 0; x < source->size(); ++x) {
    const auto c = source->coords(x);
    Elem acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) acc = target->add(acc, target->act(c[i], images[i]));
    table[x] = acc;
  }
  return ModuleHom(std::move(source), std::move(target), std::move(images), std::move(table));
}

ModuleHom ModuleHom::from_table(ModulePtr source, ModulePtr target, std::vector<Elem> table) {
  if (table.size() != source->size()) throw PreconditionError("hom table has wrong length");
  std::vector<Elem> images;
  for (Elem g : source->generators()) images.push_back(table[g]);
  auto h = from_generator_images(std::move(source), std::move(target), std::move(images));
  if (h.table_ != table) throw PreconditionError("table is not R-linear");
  return h;
}

ModuleHom ModuleHom::zero(ModulePtr source, ModulePtr target) {
  std::vector<Elem> images(source->num_generators(), 0);
  return from_generator_images(std::move(source), std::move(target), std::move(images));
}

ModuleHom ModuleHom::identity(ModulePtr m) {
  std::vector<Elem> images(m->generators().begin(), m->generators().end());
  return from_generator_images(m, m, std::move(images));
}

bool ModuleHom::is_injective() const { return std::count(table_.begin(), table_.end(), Elem{0}) == 1; }

bool ModuleHom::is_surjective() const { return image_elements().size() == target_->size(); }

std::vector<Elem> ModuleHom::image_elements() const { return sorted_unique(table_); }

std::vector<Elem> ModuleHom::kernel_elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < table_.size(); ++x)
    if (table_[x] == 0) out.push_back(x);
  return out;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (f.target().get() != g.source().get() && f.target()->size() != g.source()->size())
    throw PreconditionError("homs are not composable");
  std::vector<Elem> table(f.source()->size());
  for (Elem x = 0; x < table.size(); ++x) table[x] = g(f(x));
  return ModuleHom::from_table(f.source(), g.target(), std::move(table));
}

std::vector<Elem> span_of(const Module& m, std::span<const Elem> gens) {
  std::vector<Elem> span{0};
  std::vector<char> member(m.size(), 0);
  member[0] = 1;
  for (Elem g : gens) {
    if (member[g]) continue;
    std::vector<Elem> cyc;
    std::vector<char> seen(m.size(), 0);
    for (Elem r = 0; r < m.ring()->size(); ++r) {
      const Elem y = m.act(r, g);
      if (!seen[y]) {
        seen[y] = 1;
        cyc.push_back(y);
      }
    }
    const std::size_t snapshot = span.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (Elem c : cyc) {
        const Elem s = m.add(span[i], c);
        if (!member[s]) {
          member[s] = 1;
          span.push_back(s);
        }
      }
    }
  }
  std::sort(span.begin(), span.end());
  return span;
}

std::vector<Elem> generating_set(const Module& m, std::span<const Elem> submodule) {
  std::vector<Elem> add_table(m.size() * m.size()), act_table(m.ring()->size() * m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem y = 0; y < m.size(); ++y) add_table[x * m.size() + y] = m.add(x, y);
    for (Elem r = 0; r < m.ring()->size(); ++r) act_table[r * m.size() + x] = m.act(r, x);
  }
  const RawModule raw{*m.ring(), m.size(), add_table, act_table};
  return greedy_generating_set(raw, submodule);
}

Embedding submodule(const ModulePtr& m, std::span<const Elem> elements) {
  std::vector<Elem> sorted = sorted_unique(std::vector<Elem>(elements.begin(), elements.end()));
  check_submodule(*m, sorted);
  const std::size_t k = sorted.size();
  std::vector<Elem> position(m->size(), kUnset);
  for (std::size_t i = 0; i < k; ++i) position[sorted[i]] = static_cast<Elem>(i);
  const std::size_t q = m->ring()->size();
  std::vector<Elem> add(k * k), act(q * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) add[i * k + j] = position[m->add(sorted[i], sorted[j])];
    for (Elem s = 0; s < q; ++s) act[s * k + i] = position[m->act(s, sorted[i])];
  }
  ModulePtr sub = module_from_action(m->ring(), k, std::move(add), std::move(act));
  auto inclusion = ModuleHom::from_table(sub, m, sorted);
  return Embedding{std::move(sub), std::move(inclusion)};
}

Projection quotient_module(const ModulePtr& m, std::span<const Elem> sub) {
  std::vector<Elem> sorted = sorted_unique(std::vector<Elem>(sub.begin(), sub.end()));
  check_submodule(*m, sorted);
  std::vector<Elem> coset(m->size(), kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < m->size(); ++x) {
    if (coset[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem s : sorted) coset[m->add(x, s)] = id;
  }
  const std::size_t k = reps.size();
  const std::size_t q = m->ring()->size();
  Module::Parts parts;
  parts.ring = m->ring();
  parts.size = k;
  parts.add.resize(k * k);
  parts.act.resize(q * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) parts.add[i * k + j] = coset[m->add(reps[i], reps[j])];
    for (Elem s = 0; s < q; ++s) parts.act[s * k + i] = coset[m->act(s, reps[i])];
  }
  for (Elem g : m->generators()) parts.gens.push_back(coset[g]);
  const auto extra = generating_set(*m, sorted);
  const Matrix& base = m->relations();
  parts.relations = Matrix(base.rows, base.cols + extra.size());
  for (std::size_t i = 0; i < base.rows; ++i) {
    for (std::size_t j = 0; j < base.cols; ++j) parts.relations.at(i, j) = base.at(i, j);
    for (std::size_t j = 0; j < extra.size(); ++j) parts.relations.at(i, base.cols + j) = m->coords(extra[j])[i];
  }
  for (Elem rep : reps) {
    const auto c = m->coords(rep);
    parts.coords.insert(parts.coords.end(), c.begin(), c.end());
  }
  auto quotient = std::make_shared<const Module>(std::move(parts));
  auto projection = ModuleHom::from_table(m, quotient, std::move(coset));
  return Projection{std::move(quotient), std::move(projection)};
}

Embedding ideal_as_module(const Ideal& i) {
  auto f = free_module(i.ring(), 1);
  return submodule(f, i.elements());
}

KernelImageCoker kernel_image_coker(const ModuleHom& h) {
  const auto ker = h.kernel_elements();
  const auto img = h.image_elements();
  return KernelImageCoker{submodule(h.source(), ker), submodule(h.target(), img), quotient_module(h.target(), img)};
}

std::vector<Elem> killed_by(const Module& m, std::span<const Elem> ring_elements) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x) {
    if (std::all_of(ring_elements.begin(), ring_elements.end(), [&](Elem r) { return m.act(r, x) == 0; }))
      out.push_back(x);
  }
  return out;
}

std::vector<Elem> scaled(const Module& m, Elem r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x) out.push_back(m.act(r, x));
  return sorted_unique(std::move(out));
}

Ideal element_annihilator(const Module& m, Elem x) {
  std::vector<Elem> out;
  for (Elem r = 0; r < m.ring()->size(); ++r)
    if (m.act(r, x) == 0) out.push_back(r);
  return ideal_from_elements(m.ring(), std::move(out));
}

}  // namespace semireg
