#include "semireg/ring.hpp"

#include <algorithm>
#include <sstream>

#include "semireg/errors.hpp"
#include "semireg/ideal.hpp"

namespace semireg {

FiniteRing::FiniteRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                       Elem one, std::string spec)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(size, 0),
      zero_(zero),
      one_(one),
      spec_(std::move(spec)) {
  if (size_ == 0) throw PreconditionError("ring must have at least one element");
  if (add_.size() != size_ * size_ || mul_.size() != size_ * size_)
    throw PreconditionError("ring tables have wrong shape");
  if (zero_ >= size_ || one_ >= size_) throw PreconditionError("identity index out of range");
  for (Elem v : add_)
    if (v >= size_) throw PreconditionError("addition table entry out of range");
  for (Elem v : mul_)
    if (v >= size_) throw PreconditionError("multiplication table entry out of range");
  if (size_ > 1 && zero_ == one_) throw PreconditionError("one equals zero in a nonzero ring");
  for (Elem a = 0; a < size_; ++a) {
    bool found = false;
    for (Elem b = 0; b < size_; ++b) {
      if (add_[a * size_ + b] == zero_) {
        neg_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("element without additive inverse");
  }
}

Elem FiniteRing::pow(Elem x, std::size_t k) const {
  Elem acc = one_;
  for (std::size_t i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  return size_ == other.size_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) { return &a == &b || a.same_tables(b); }

std::optional<std::string> table_violation(const FiniteRing& r) {
  const std::size_t n = r.size();
  auto describe = [](const char* law, Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << law << " fails at (" << a << ", " << b << ", " << c << ")";
    return os.str();
  };
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) return describe("additive identity", a, 0, 0);
    if (r.mul(a, r.one()) != a) return describe("multiplicative identity", a, 0, 0);
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return describe("additive commutativity", a, b, 0);
      if (r.mul(a, b) != r.mul(b, a)) return describe("multiplicative commutativity", a, b, 0);
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = r.add(a, b);
      const Elem ab_prod = r.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) return describe("additive associativity", a, b, c);
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)))
          return describe("multiplicative associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c))) return describe("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

void validate_ring(const FiniteRing& r) {
  if (auto bad = table_violation(r)) throw InternalError("ring " + r.spec() + ": " + *bad);
}

bool is_ring_hom(const RingHom& h) {
  const FiniteRing& s = *h.source;
  const FiniteRing& t = *h.target;
  if (h.images.size() != s.size()) return false;
  if (h(s.zero()) != t.zero() || h(s.one()) != t.one()) return false;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (h(s.add(a, b)) != t.add(h(a), h(b))) return false;
      if (h(s.mul(a, b)) != t.mul(h(a), h(b))) return false;
    }
  }
  return true;
}

RingPtr build_zmod(std::size_t n) {
  if (n == 0) throw PreconditionError("zmod requires n >= 1");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  auto r = std::make_shared<FiniteRing>(n, std::move(add), std::move(mul), 0, static_cast<Elem>(1 % n),
                                        "zmod:" + std::to_string(n));
  validate_ring(*r);
  return r;
}

namespace {

// Mixed-radix digits of an index, most significant first.
std::vector<Elem> split_index(std::size_t index, const std::vector<std::size_t>& radices) {
  std::vector<Elem> digits(radices.size());
  for (std::size_t k = radices.size(); k-- > 0;) {
    digits[k] = static_cast<Elem>(index % radices[k]);
    index /= radices[k];
  }
  return digits;
}

std::size_t join_index(const std::vector<Elem>& digits, const std::vector<std::size_t>& radices) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < radices.size(); ++k) index = index * radices[k] + digits[k];
  return index;
}

}  // namespace

RingPtr build_product(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw PreconditionError("product of an empty list of rings");
  std::vector<std::size_t> radices;
  std::size_t n = 1;
  std::string spec = "prod:[";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    radices.push_back(factors[k]->size());
    n *= factors[k]->size();
    if (k) spec += ",";
    spec += factors[k]->spec();
  }
  spec += "]";
  std::vector<std::vector<Elem>> digits(n);
  for (std::size_t i = 0; i < n; ++i) digits[i] = split_index(i, radices);
  std::vector<Elem> add(n * n), mul(n * n), tmp_add(factors.size()), tmp_mul(factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        tmp_add[k] = factors[k]->add(digits[i][k], digits[j][k]);
        tmp_mul[k] = factors[k]->mul(digits[i][k], digits[j][k]);
      }
      add[i * n + j] = static_cast<Elem>(join_index(tmp_add, radices));
      mul[i * n + j] = static_cast<Elem>(join_index(tmp_mul, radices));
    }
  }
  std::vector<Elem> zero(factors.size()), one(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    zero[k] = factors[k]->zero();
    one[k] = factors[k]->one();
  }
  auto r = std::make_shared<FiniteRing>(n, std::move(add), std::move(mul),
                                        static_cast<Elem>(join_index(zero, radices)),
                                        static_cast<Elem>(join_index(one, radices)), spec);
  validate_ring(*r);
  return r;
}

RingHom product_projection(const RingPtr& product, const std::vector<RingPtr>& factors, std::size_t index) {
  std::vector<std::size_t> radices;
  for (const auto& f : factors) radices.push_back(f->size());
  RingHom h{product, factors.at(index), std::vector<Elem>(product->size())};
  for (std::size_t i = 0; i < product->size(); ++i) h.images[i] = split_index(i, radices)[index];
  return h;
}

QuotientRing build_quotient(const RingPtr& r, std::span<const Elem> gens) {
  const Ideal ideal = ideal_generated(r, gens);
  const std::size_t n = r->size();
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem a : ideal.elements()) coset[r->add(x, a)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = coset[r->add(reps[i], reps[j])];
      mul[i * q + j] = coset[r->mul(reps[i], reps[j])];
    }
  }
  auto ring = std::make_shared<FiniteRing>(q, std::move(add), std::move(mul), coset[r->zero()],
                                           coset[r->one()],
                                           "quot:(" + r->spec() + ";" + format_int_list(gens) + ")");
  validate_ring(*ring);
  return QuotientRing{ring, RingHom{r, ring, std::move(coset)}};
}

RingPtr build_duplication(const RingPtr& r, std::span<const Elem> gens) {
  const Ideal ideal = ideal_generated(r, gens);
  const std::size_t n = r->size();
  const std::size_t m = ideal.size();
  std::vector<Elem> position(n, 0);
  for (std::size_t k = 0; k < m; ++k) position[ideal.elements()[k]] = static_cast<Elem>(k);
  const std::size_t total = n * m;
  // element index x*m + k stands for (x, x + I[k])
  auto encode = [&](Elem first, Elem second) {
    const Elem offset = r->sub(second, first);
    if (!ideal.contains(offset)) throw InternalError("duplication not closed");
    return static_cast<Elem>(first * m + position[offset]);
  };
  std::vector<Elem> add(total * total), mul(total * total);
  for (std::size_t i = 0; i < total; ++i) {
    const Elem x = static_cast<Elem>(i / m);
    const Elem xs = r->add(x, ideal.elements()[i % m]);
    for (std::size_t j = 0; j < total; ++j) {
      const Elem y = static_cast<Elem>(j / m);
      const Elem ys = r->add(y, ideal.elements()[j % m]);
      add[i * total + j] = encode(r->add(x, y), r->add(xs, ys));
      mul[i * total + j] = encode(r->mul(x, y), r->mul(xs, ys));
    }
  }
  auto ring = std::make_shared<FiniteRing>(total, std::move(add), std::move(mul), encode(r->zero(), r->zero()),
                                           encode(r->one(), r->one()),
                                           "dup:(" + r->spec() + ";" + format_int_list(gens) + ")");
  validate_ring(*ring);
  return ring;
}

bool is_unit(const FiniteRing& r, Elem x) {
  for (Elem y = 0; y < r.size(); ++y)
    if (r.mul(x, y) == r.one()) return true;
  return false;
}

UnitsAndIdempotents units_and_idempotents(const FiniteRing& r) {
  UnitsAndIdempotents out;
  for (Elem x = 0; x < r.size(); ++x) {
    if (is_unit(r, x)) out.units.push_back(x);
    if (r.mul(x, x) == x) out.idempotents.push_back(x);
  }
  return out;
}

std::vector<Elem> primitive_idempotents(const FiniteRing& r) {
  const auto idem = units_and_idempotents(r).idempotents;
  std::vector<Elem> out;
  for (Elem e : idem) {
    if (e == r.zero()) continue;
    bool primitive = true;
    for (Elem f : idem) {
      if (f != r.zero() && f != e && r.mul(f, e) == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) out.push_back(e);
  }
  return out;
}

std::string format_int_list(std::span<const Elem> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace semireg
