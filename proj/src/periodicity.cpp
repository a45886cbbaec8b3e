#include "semireg/periodicity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semireg/classify.hpp"
#include "semireg/errors.hpp"
#include "semireg/memo.hpp"

namespace semireg {

namespace {

constexpr const char* kCollapseNote =
    "finite ring: finitely presented flat modules are projective, so F-periodic and periodic coincide";

std::string describe_multiplicities(const std::vector<std::size_t>& mult) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < mult.size(); ++i) os << (i ? "," : "") << mult[i];
  os << "]";
  return os.str();
}

ModuleHom inverse_of(const ModuleHom& iso) {
  std::vector<Elem> table(iso.target()->size());
  for (Elem x = 0; x < iso.source()->size(); ++x) table[iso(x)] = x;
  return ModuleHom::from_table(iso.target(), iso.source(), std::move(table));
}

bool is_free_module(const ModulePtr& m) {
  const auto ranks = local_ranks(m);
  if (ranks.empty()) return true;
  if (!ranks.front()) return false;
  const std::size_t k = *ranks.front();
  for (const auto& rk : ranks)
    if (!rk || *rk != k) return false;
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) expected *= m->ring()->size();
  return expected == m->size();
}

struct OneStepSearch {
  std::optional<ModuleHom> inclusion;
  std::optional<ModuleHom> onto;  // P -> target, kernel = image of inclusion
  std::optional<ProjectiveModule> middle;
  std::size_t projectives_tried = 0;
  std::size_t injective_homs = 0;
  std::size_t distinct_images = 0;
};

// Searches 0 -> m -> P -> target -> 0 with P projective of size |m||target|.
OneStepSearch search_short_exact(const ModulePtr& m, const ModulePtr& target) {
  OneStepSearch out;
  const std::size_t need = m->size() * target->size();
  for (ProjectiveModule& p : enumerate_projectives_up_to_size(m->ring(), need)) {
    if (p.module->size() != need) continue;
    ++out.projectives_tried;
    std::set<std::vector<Elem>> seen;
    search_homs(*m, *p.module, annihilator_candidates(*m, *p.module), [&](std::span<const Elem> images) {
      auto h = ModuleHom::from_generator_images(m, p.module, std::vector<Elem>(images.begin(), images.end()));
      if (!h.is_injective()) return true;
      ++out.injective_homs;
      auto image = h.image_elements();
      if (!seen.insert(image).second) return true;
      ++out.distinct_images;
      Projection coker = quotient_module(p.module, image);
      IsoResult iso = is_isomorphic(target, coker.module);
      if (!iso.isomorphic) return true;
      out.onto = compose(inverse_of(*iso.witness), coker.projection);
      out.inclusion = std::move(h);
      out.middle = p;
      return false;
    });
    if (out.inclusion) break;
  }
  return out;
}

void require_oracle_size(const Module& m, std::size_t cap) {
  if (m.size() > cap)
    throw CapExceeded("module of size " + std::to_string(m.size()) + " exceeds the oracle cap " + std::to_string(cap));
}

std::vector<Elem> position_table(std::span<const Elem> sorted_elements, std::size_t ambient) {
  std::vector<Elem> pos(ambient, static_cast<Elem>(-1));
  for (std::size_t k = 0; k < sorted_elements.size(); ++k) pos[sorted_elements[k]] = static_cast<Elem>(k);
  return pos;
}

bool is_char2(const FiniteRing& r) { return r.add(r.one(), r.one()) == r.zero(); }

}  // namespace

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::OnePeriodic:
      return "one-periodic";
    case CertificateKind::TwoPeriodic:
      return "two-periodic";
    case CertificateKind::Negative:
      return "negative";
  }
  return "unknown";
}

std::vector<ProjectiveModule> enumerate_projectives_up_to_size(const RingPtr& r, std::size_t cap) {
  if (cap < 1) throw PreconditionError("projective enumeration cap must be positive");
  const auto prims = primitive_idempotents(*r);
  std::vector<ModulePtr> pieces;
  for (Elem e : prims) pieces.push_back(cyclic_module(r, std::vector<Elem>{r->sub(r->one(), e)}));
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> shapes;
  std::vector<std::size_t> mult(prims.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i, std::size_t size) -> void {
    if (i == prims.size()) {
      shapes.emplace_back(size, mult);
      return;
    }
    for (mult[i] = 0;; ++mult[i]) {
      self(self, i + 1, size);
      if (size > cap / pieces[i]->size()) break;
      size *= pieces[i]->size();
    }
    mult[i] = 0;
  };
  recurse(recurse, 0, 1);
  std::sort(shapes.begin(), shapes.end());
  std::vector<ProjectiveModule> out;
  for (const auto& [size, m] : shapes) {
    std::vector<ModulePtr> parts;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t k = 0; k < m[i]; ++k) parts.push_back(pieces[i]);
    ModulePtr module = parts.empty() ? free_module(r, 0) : direct_sum(parts);
    if (module->size() != size) throw InternalError("projective sum has unexpected size");
    const bool free = std::adjacent_find(m.begin(), m.end(), std::not_equal_to<>()) == m.end();
    out.push_back(ProjectiveModule{std::move(module), m, free});
  }
  return out;
}

std::vector<ExactnessCheck> exactness_transcript(const std::vector<ModuleHom>& maps) {
  std::vector<ExactnessCheck> out;
  if (maps.empty()) return out;
  out.push_back({"injective at position 0", maps.front().is_injective()});
  for (std::size_t i = 1; i < maps.size(); ++i) {
    const bool composable = maps[i - 1].target()->size() == maps[i].source()->size();
    out.push_back({"kernel equals image at position " + std::to_string(i),
                   composable && maps[i].kernel_elements() == maps[i - 1].image_elements()});
  }
  out.push_back({"surjective at position " + std::to_string(maps.size()), maps.back().is_surjective()});
  return out;
}

bool all_hold(const std::vector<ExactnessCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ExactnessCheck& c) { return c.holds; });
}

PeriodicityCertificate is_1_periodic_oracle(const ModulePtr& m, std::size_t cap) {
  require_oracle_size(*m, cap);
  PeriodicityCertificate cert;
  cert.note = kCollapseNote;
  OneStepSearch found = search_short_exact(m, m);
  std::ostringstream space;
  space << "projectives of size " << m->size() * m->size() << ": " << found.projectives_tried
        << "; injective homs examined: " << found.injective_homs << "; distinct images: " << found.distinct_images;
  cert.search_space = space.str();
  if (!found.inclusion) return cert;
  cert.kind = CertificateKind::OnePeriodic;
  cert.modules = {m, found.middle->module, m};
  cert.maps = {*found.inclusion, *found.onto};
  cert.transcript = exactness_transcript(cert.maps);
  cert.free_terms = found.middle->free;
  cert.search_space += "; middle term multiplicities " + describe_multiplicities(found.middle->multiplicities);
  if (!all_hold(cert.transcript)) throw InternalError("one-periodic certificate fails its own exactness check");
  return cert;
}

PeriodicityCertificate is_2_periodic_oracle(const ModulePtr& m, std::size_t cap) {
  require_oracle_size(*m, cap);
  const RingPtr& r = m->ring();
  PeriodicityCertificate cert;
  cert.note = kCollapseNote;
  // projective cover: the smallest projective admitting a surjection onto m
  std::size_t bound = 1;
  for (std::size_t i = 0; i < m->num_generators() && bound <= kModuleSizeCap; ++i) bound *= r->size();
  const bool truncated = bound > kModuleSizeCap;
  bound = std::min(bound, kModuleSizeCap);
  std::optional<ProjectiveModule> cover;
  std::optional<ModuleHom> onto;
  for (ProjectiveModule& p : enumerate_projectives_up_to_size(r, bound)) {
    if (p.module->size() < m->size()) continue;
    search_homs(*p.module, *m, annihilator_candidates(*p.module, *m), [&](std::span<const Elem> images) {
      auto h = ModuleHom::from_generator_images(p.module, m, std::vector<Elem>(images.begin(), images.end()));
      if (!h.is_surjective()) return true;
      onto = std::move(h);
      return false;
    });
    if (onto) {
      cover = p;
      break;
    }
  }
  if (!onto && truncated)
    throw CapExceeded("a projective cover of " + m->label() + " may exceed the module size cap");
  if (!onto) throw InternalError("no projective maps onto " + m->label());
  const Embedding kernel = submodule(cover->module, onto->kernel_elements());
  OneStepSearch found = search_short_exact(m, kernel.module);
  std::ostringstream space;
  space << "projective cover multiplicities " << describe_multiplicities(cover->multiplicities) << " with kernel of size "
        << kernel.module->size() << "; projectives of size " << m->size() * kernel.module->size() << ": "
        << found.projectives_tried << "; injective homs examined: " << found.injective_homs
        << "; distinct images: " << found.distinct_images;
  cert.search_space = space.str();
  if (!found.inclusion) return cert;
  cert.kind = CertificateKind::TwoPeriodic;
  cert.modules = {m, found.middle->module, cover->module, m};
  cert.maps = {*found.inclusion, compose(kernel.inclusion, *found.onto), *onto};
  cert.transcript = exactness_transcript(cert.maps);
  cert.free_terms = found.middle->free && cover->free;
  if (!all_hold(cert.transcript)) throw InternalError("two-periodic certificate fails its own exactness check");
  return cert;
}

std::vector<ModulePtr> cyclic_modules(const RingPtr& r) {
  std::vector<ModulePtr> out;
  for (const Ideal& i : enumerate_ideals(r)) out.push_back(cyclic_module(r, i.generators()));
  return out;
}

std::vector<ModulePtr> modules_up_to_size(const RingPtr& r, std::size_t cap) {
  std::vector<ModulePtr> cyclic;
  for (ModulePtr& m : cyclic_modules(r))
    if (!m->is_zero() && m->size() <= cap) cyclic.push_back(std::move(m));
  std::vector<ModulePtr> found;
  std::vector<ModulePtr> parts;
  auto recurse = [&](auto&& self, std::size_t from, std::size_t size) -> void {
    if (!parts.empty()) {
      ModulePtr m = parts.size() == 1 ? parts.front() : direct_sum(parts);
      const bool known = std::any_of(found.begin(), found.end(), [&](const ModulePtr& other) {
        return other->size() == m->size() && is_isomorphic(other, m).isomorphic;
      });
      if (!known) found.push_back(std::move(m));
    }
    for (std::size_t i = from; i < cyclic.size(); ++i) {
      if (size * cyclic[i]->size() > cap) continue;
      parts.push_back(cyclic[i]);
      self(self, i, size * cyclic[i]->size());
      parts.pop_back();
    }
  };
  recurse(recurse, 0, 1);
  std::stable_sort(found.begin(), found.end(),
                   [](const ModulePtr& a, const ModulePtr& b) { return a->size() < b->size(); });
  return found;
}

namespace {

template <class Oracle>
OracleSweep sweep_cyclic(const RingPtr& r, std::size_t cap, Oracle&& oracle) {
  OracleSweep out;
  for (const Ideal& i : enumerate_ideals(r)) {
    if (!oracle(cyclic_module(r, i.generators()), cap).positive()) {
      out.all_positive = false;
      out.first_failure = i;
      break;
    }
  }
  return out;
}

}  // namespace

OracleSweep all_cyclic_1_periodic(const RingPtr& r, std::size_t cap) {
  return sweep_cyclic(r, cap, [](const ModulePtr& m, std::size_t c) { return is_1_periodic_oracle(m, c); });
}

OracleSweep all_cyclic_2_periodic(const RingPtr& r, std::size_t cap) {
  return sweep_cyclic(r, cap, [](const ModulePtr& m, std::size_t c) { return is_2_periodic_oracle(m, c); });
}

namespace {

std::optional<UvstWitness> solve_uvst(const FiniteRing& r, const Ideal& ann, Elem a, Elem b) {
  for (Elem u = 0; u < r.size(); ++u) {
    for (Elem v = 0; v < r.size(); ++v) {
      if (r.mul(b, u) != r.mul(a, v)) continue;
      for (Elem s : ann.elements()) {
        for (Elem t : ann.elements()) {
          const Elem one_t = r.add(r.one(), t);
          if (r.mul(s, u) == r.mul(a, one_t) && r.mul(s, v) == r.mul(b, one_t)) return UvstWitness{a, b, u, v, s, t};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<UvstWitness> find_uvst_witness(const RingPtr& r, Elem x) {
  const Ideal ann = annihilator(r, std::vector<Elem>{x});
  std::optional<std::pair<Elem, Elem>> canonical;
  if (auto g = principal_generator(ann)) {
    canonical = std::pair{*g, *g};
    if (auto w = solve_uvst(*r, ann, *g, *g)) return w;
  }
  for (Elem a : ann.elements()) {
    for (Elem b : ann.elements()) {
      if (b < a || canonical == std::pair{a, b}) continue;
      if (!(ideal_generated(r, std::vector<Elem>{a, b}) == ann)) continue;
      if (auto w = solve_uvst(*r, ann, a, b)) return w;
    }
  }
  return std::nullopt;
}

LprojResult build_lproj_module(const RingPtr& ring, Elem r, Elem a, Elem b, Elem u, Elem v, Elem s, Elem t) {
  const FiniteRing& R = *ring;
  for (Elem e : {r, a, b, u, v, s, t})
    if (e >= R.size()) throw PreconditionError("element index out of range");
  const Ideal ann = annihilator(ring, std::vector<Elem>{r});
  if (!(ideal_generated(ring, std::vector<Elem>{a, b}) == ann))
    throw PreconditionError("(0:r) is not generated by a and b");
  if (!ann.contains(s)) throw PreconditionError("s is not in (0:r)");
  if (!ann.contains(t)) throw PreconditionError("t is not in (0:r)");
  const Elem one_t = R.add(R.one(), t);
  if (R.mul(b, u) != R.mul(a, v)) throw PreconditionError("bu = av fails");
  if (R.mul(s, u) != R.mul(a, one_t)) throw PreconditionError("su = a(1+t) fails");
  if (R.mul(s, v) != R.mul(b, one_t)) throw PreconditionError("sv = b(1+t) fails");
  if (!is_arithmetical(ring).value) throw PreconditionError("ring is not arithmetical");

  LprojResult out{present(ring, Matrix(2, 3, {r, u, v, R.zero(), a, b})), {}, {}, {}};
  out.fitting = fitting_ideals(*out.g);
  if (!is_projective_constant_rank(*out.g, 1)) throw InternalError("G fails F_0 = 0, F_1 = R");
  const auto ranks = local_ranks(out.g);
  for (const auto& k : ranks)
    if (!k || *k != 1) throw InternalError("G is not locally free of rank 1");

  const ModulePtr left = cyclic_module(ring, std::vector<Elem>{r});
  const Embedding right = ideal_as_module(ideal_generated(ring, std::vector<Elem>{r}));
  // the free module of rank 1 numbers its elements like the ring, and
  // submodule elements are stored sorted
  const auto included = right.inclusion.table();
  const Elem r_index = static_cast<Elem>(std::find(included.begin(), included.end(), r) - included.begin());
  out.maps.push_back(ModuleHom::from_generator_images(left, out.g, {out.g->generators()[0]}));
  out.maps.push_back(ModuleHom::from_generator_images(out.g, right.module, {0, r_index}));
  out.transcript = exactness_transcript(out.maps);
  if (!all_hold(out.transcript)) throw InternalError("0 -> R/Rr -> G -> Rr -> 0 is not exact");
  return out;
}

SpliceResult splice_2F(const SpliceInput& in) {
  const ModulePtr& w = in.iota.source();
  const ModulePtr& f1 = in.iota.target();
  const ModulePtr& f0 = in.phi.target();
  const ModulePtr& f = in.alpha.source();
  if (in.phi.source()->size() != f1->size() || in.pi.source()->size() != f0->size() ||
      in.pi.target()->size() != w->size() || in.alpha.target()->size() != w->size())
    throw PreconditionError("splice maps are not composable");
  if (!all_hold(exactness_transcript({in.iota, in.phi, in.pi})))
    throw PreconditionError("input sequence is not exact");
  if (!in.alpha.is_surjective()) throw PreconditionError("alpha is not surjective");
  const auto& rel = f->relations().data;
  if (std::any_of(rel.begin(), rel.end(), [](Elem e) { return e != 0; }))
    throw PreconditionError("alpha must start at a free module");

  // lift alpha through pi generator by generator; any choice works on a free module
  std::vector<Elem> lift;
  for (Elem g : f->generators()) {
    const Elem target = in.alpha(g);
    std::optional<Elem> pre;
    for (Elem y = 0; y < f0->size() && !pre; ++y)
      if (in.pi(y) == target) pre = y;
    if (!pre) throw InternalError("pi is not surjective, no lift of alpha exists");
    lift.push_back(*pre);
  }
  ModuleHom beta = ModuleHom::from_generator_images(f, f0, lift);

  const ModulePtr sum = direct_sum(f1, f);
  const std::size_t nf = f->size();
  std::vector<Elem> gamma_table(sum->size());
  for (Elem z = 0; z < sum->size(); ++z) gamma_table[z] = f0->add(in.phi(static_cast<Elem>(z / nf)), beta(static_cast<Elem>(z % nf)));
  ModuleHom gamma = ModuleHom::from_table(sum, f0, std::move(gamma_table));

  const Embedding g = submodule(sum, gamma.kernel_elements());
  const auto pos = position_table(g.inclusion.table(), sum->size());
  std::vector<Elem> w_to_g(w->size());
  for (Elem x = 0; x < w->size(); ++x) w_to_g[x] = pos[in.iota(x) * nf];
  std::vector<Elem> g_to_f(g.module->size());
  for (Elem z = 0; z < g.module->size(); ++z) g_to_f[z] = static_cast<Elem>(g.inclusion(z) % nf);

  SpliceResult out{g.module, beta, gamma, {}, {}};
  out.maps.push_back(ModuleHom::from_table(w, g.module, std::move(w_to_g)));
  out.maps.push_back(ModuleHom::from_table(g.module, f, std::move(g_to_f)));
  out.maps.push_back(in.alpha);
  out.transcript = exactness_transcript(out.maps);
  out.transcript.push_back({"gamma surjective", gamma.is_surjective()});
  bool lifts = true;
  for (Elem y = 0; y < nf; ++y) lifts = lifts && in.pi(beta(y)) == in.alpha(y);
  out.transcript.push_back({"pi . beta = alpha", lifts});
  bool commutes = true;
  for (Elem z = 0; z < sum->size(); ++z)
    commutes = commutes && in.pi(gamma(z)) == in.alpha(static_cast<Elem>(z % nf));
  out.transcript.push_back({"pi . gamma = alpha . projection", commutes});
  out.transcript.push_back({"G projective", is_projective(g.module)});
  for (const auto& c : out.transcript)
    if (!c.holds) throw InternalError("splice verification failed: " + c.joint);
  return out;
}

SpliceInput splice_input_from(const PeriodicityCertificate& cert) {
  if (cert.kind != CertificateKind::TwoPeriodic) throw PreconditionError("splice needs a two-periodic certificate");
  const ModulePtr& w = cert.modules.front();
  std::vector<Elem> gens;
  if (maximal_ideals(w->ring()).size() == 1)
    gens = minimal_generating_set_local(*w);
  else
    gens.assign(w->generators().begin(), w->generators().end());
  const ModulePtr f = free_module(w->ring(), gens.size());
  return SpliceInput{cert.maps[0], cert.maps[1], cert.maps[2], ModuleHom::from_generator_images(f, w, gens)};
}

bool summand_quotient_matches(const ShortExact& first, const ShortExact& second) {
  const ModulePtr& h = first.inclusion.target();
  const ModulePtr& j = second.inclusion.target();
  const ModulePtr& v = second.inclusion.source();
  const ModulePtr g = direct_sum(h, j);
  const std::size_t nj = j->size();
  // G' = alpha^{-1}(U' + 0) = { (x, y) | alpha_J(y) = 0 }
  std::vector<Elem> preimage;
  for (Elem z = 0; z < g->size(); ++z)
    if (second.projection(static_cast<Elem>(z % nj)) == 0) preimage.push_back(z);
  const Embedding gp = submodule(g, preimage);
  const auto pos = position_table(gp.inclusion.table(), g->size());
  std::vector<Elem> v_inside;
  for (Elem x = 0; x < v->size(); ++x) v_inside.push_back(pos[second.inclusion(x)]);
  const Projection quotient = quotient_module(gp.module, v_inside);
  return is_isomorphic(quotient.module, h).isomorphic;
}

PairModule make_pair_module(ModulePtr carrier, ModuleHom endo) {
  if (endo.source().get() != carrier.get() || endo.target().get() != carrier.get())
    throw PreconditionError("pair endomorphism must act on the carrier");
  for (Elem x = 0; x < carrier->size(); ++x)
    if (endo(endo(x)) != 0) throw PreconditionError("pair endomorphism does not square to zero");
  RingPtr base = carrier->ring();
  return PairModule{std::move(base), std::move(carrier), std::move(endo)};
}

RingPtr pair_ring(const RingPtr& base) {
  static RingMemo<RingPtr> memo;
  return *memo.get(base, [&] { return build_trivial_extension(base, *free_module(base, 1)); });
}

ModulePtr induced_module(const PairModule& p) {
  const RingPtr ring = pair_ring(p.base);
  const Module& u = *p.carrier;
  const std::size_t n = u.size();
  const std::size_t q = p.base->size();
  std::vector<Elem> add(n * n), act(q * q * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) add[x * n + y] = u.add(x, y);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem x = 0; x < n; ++x) act[(a * q + b) * n + x] = u.add(u.act(a, x), u.act(b, p.endo(x)));
  return module_from_action(ring, n, std::move(add), std::move(act));
}

bool pair_flatness(const PairModule& p) {
  if (!is_vnr(p.base).value) throw PreconditionError("pair flatness needs a von Neumann regular base");
  const bool exact = p.endo.kernel_elements() == p.endo.image_elements();
  if (is_flat(induced_module(p)) != exact)
    throw InternalError("ker f = im f disagrees with flatness of the induced module");
  return exact;
}

PeriodicityCertificate char2_F_periodic(const PairModule& p) {
  if (!is_char2(*p.base)) throw PreconditionError("base ring does not have characteristic 2");
  if (!is_vnr(p.base).value) throw PreconditionError("base ring is not von Neumann regular");
  const ModulePtr& u = p.carrier;
  const std::size_t n = u->size();
  const ModulePtr g = direct_sum(u, u);
  std::vector<Elem> shift(g->size());
  for (Elem z = 0; z < g->size(); ++z) shift[z] = static_cast<Elem>((z % n) * n);  // (u,v) -> (v,0)
  const PairModule gp = make_pair_module(g, ModuleHom::from_table(g, g, std::move(shift)));
  const ModulePtr mu = induced_module(p);
  const ModulePtr mg = induced_module(gp);
  std::vector<Elem> beta(n), alpha(g->size());
  for (Elem x = 0; x < n; ++x) beta[x] = static_cast<Elem>(x * n + p.endo(x));
  for (Elem z = 0; z < g->size(); ++z) alpha[z] = u->add(p.endo(static_cast<Elem>(z / n)), static_cast<Elem>(z % n));

  PeriodicityCertificate cert;
  cert.kind = CertificateKind::OnePeriodic;
  cert.note = kCollapseNote;
  cert.modules = {mu, mg, mu};
  cert.maps = {ModuleHom::from_table(mu, mg, std::move(beta)), ModuleHom::from_table(mg, mu, std::move(alpha))};
  cert.transcript = exactness_transcript(cert.maps);
  cert.transcript.push_back({"(G,g) flat: ker g = im g", pair_flatness(gp)});
  cert.transcript.push_back({"G projective over the extension", is_projective(mg)});
  cert.free_terms = is_free_module(mg);
  cert.search_space = "explicit construction G = U x U, g(u,v) = (v,0)";
  if (!all_hold(cert.transcript)) cert.kind = CertificateKind::Negative;
  return cert;
}

std::vector<PairModule> enumerate_pair_modules(const RingPtr& base, std::size_t cap) {
  if (!is_vnr(base).value) throw PreconditionError("pair module enumeration needs a von Neumann regular base");
  // over a regular ring every module is a sum of the simple modules A/P
  std::vector<ModulePtr> simples;
  for (const Ideal& p : maximal_ideals(base)) simples.push_back(cyclic_module(base, p.generators()));
  std::vector<std::vector<ModulePtr>> carriers;
  std::vector<ModulePtr> current;
  auto recurse = [&](auto&& self, std::size_t i, std::size_t size) -> void {
    if (i == simples.size()) {
      carriers.push_back(current);
      return;
    }
    const std::size_t mark = current.size();
    std::size_t s = size;
    while (true) {
      self(self, i + 1, s);
      if (s > cap / simples[i]->size()) break;
      s *= simples[i]->size();
      current.push_back(simples[i]);
    }
    current.resize(mark);
  };
  recurse(recurse, 0, 1);

  std::vector<PairModule> out;
  std::vector<ModulePtr> induced;
  for (const auto& parts : carriers) {
    const ModulePtr u = parts.empty() ? free_module(base, 0) : direct_sum(parts);
    for (ModuleHom& f : hom_set(u, u)) {
      bool square_zero = true;
      for (Elem x = 0; x < u->size() && square_zero; ++x) square_zero = f(f(x)) == 0;
      if (!square_zero) continue;
      PairModule p = make_pair_module(u, std::move(f));
      ModulePtr m = induced_module(p);
      const bool known = std::any_of(induced.begin(), induced.end(), [&](const ModulePtr& other) {
        return other->size() == m->size() && is_isomorphic(other, m).isomorphic;
      });
      if (known) continue;
      induced.push_back(std::move(m));
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace semireg
