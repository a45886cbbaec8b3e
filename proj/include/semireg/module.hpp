#pragma once

// Finitely presented modules over a FiniteRing.
//
// Matrix convention used everywhere: rows are generators, columns are
// relations, and the module is the cokernel of the column map into the free
// module of rank = rows.
//
// Besides the presentation every Module carries its full element tables
// (addition and ring action) plus, for each element x, a coefficient vector
// c(x) with x = sum_i c(x)_i * g_i. Element 0 is always the zero element.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "semireg/ideal.hpp"
#include "semireg/ring.hpp"

namespace semireg {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Matrix(std::size_t r, std::size_t c, std::vector<Elem> values);

  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  /// "matrix:[[a,b],[c,d]]"
  std::string to_spec() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Largest module the tabled representation accepts.
inline constexpr std::size_t kModuleSizeCap = 2048;
/// Largest free module |R|^m that present() will enumerate.
inline constexpr std::size_t kPresentEnumerationCap = std::size_t{1} << 22;

class Module {
 public:
  struct Parts {
    RingPtr ring;
    std::size_t size = 0;
    std::vector<Elem> add;     // size x size
    std::vector<Elem> act;     // ring size x size
    std::vector<Elem> gens;    // element index of each generator
    Matrix relations;          // gens.size() rows
    std::vector<Elem> coords;  // size x gens.size()
    std::string label;
  };

  /// Checks shapes and that coordinates reproduce each element; the heavier
  /// axiom scan is validate_module().
  explicit Module(Parts parts);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return size_; }
  bool is_zero() const { return size_ == 1; }

  Elem add(Elem x, Elem y) const { return add_[x * size_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem act(Elem r, Elem x) const { return act_[r * size_ + x]; }

  std::size_t num_generators() const { return gens_.size(); }
  std::span<const Elem> generators() const { return gens_; }
  const Matrix& relations() const { return relations_; }
  std::span<const Elem> coords(Elem x) const {
    return {coords_.data() + x * gens_.size(), gens_.size()};
  }
  const std::string& label() const { return label_; }

  /// Element sum_i c_i * g_i.
  Elem combine(std::span<const Elem> c) const;

 private:
  RingPtr ring_;
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> act_;
  std::vector<Elem> neg_;
  std::vector<Elem> gens_;
  Matrix relations_;
  std::vector<Elem> coords_;
  std::string label_;
};

using ModulePtr = std::shared_ptr<const Module>;

/// Full axiom scan: abelian group, unital action, both distributive laws,
/// relations vanish on the generators.
void validate_module(const Module& m);

/// Cokernel of the relation matrix. Enumerates the free module of rank
/// relations.rows, so |R|^rows must stay under kPresentEnumerationCap.
ModulePtr present(const RingPtr& r, const Matrix& relations, std::string label = {});

ModulePtr free_module(const RingPtr& r, std::size_t rank);

/// R/(gens), presented by the 1 x |gens| matrix.
ModulePtr cyclic_module(const RingPtr& r, std::span<const Elem> annihilator_gens);

/// Module from raw tables; generators, coordinates and a relation matrix are
/// derived (greedy generating set, relations from a kernel computation).
ModulePtr module_from_action(const RingPtr& r, std::size_t size, std::vector<Elem> add, std::vector<Elem> act,
                             std::string label = {});

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);
ModulePtr direct_sum(std::span<const ModulePtr> parts);

class ModuleHom {
 public:
  /// Throws PreconditionError when the images violate a source relation.
  static ModuleHom from_generator_images(ModulePtr source, ModulePtr target, std::vector<Elem> images);
  /// Throws PreconditionError unless the table is R-linear.
  static ModuleHom from_table(ModulePtr source, ModulePtr target, std::vector<Elem> table);
  static ModuleHom zero(ModulePtr source, ModulePtr target);
  static ModuleHom identity(ModulePtr m);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  Elem operator()(Elem x) const { return table_[x]; }
  std::span<const Elem> generator_images() const { return images_; }
  std::span<const Elem> table() const { return table_; }

  bool is_injective() const;
  bool is_surjective() const;
  /// Sorted list of image elements.
  std::vector<Elem> image_elements() const;
  /// Sorted list of kernel elements.
  std::vector<Elem> kernel_elements() const;

 private:
  ModuleHom(ModulePtr source, ModulePtr target, std::vector<Elem> images, std::vector<Elem> table);

  ModulePtr source_;
  ModulePtr target_;
  std::vector<Elem> images_;
  std::vector<Elem> table_;
};

/// g after f.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

/// True when images satisfy every relation of `source`.
bool respects_relations(const Module& source, const Module& target, std::span<const Elem> images);

/// Submodule generated by the given elements (sorted element list).
std::vector<Elem> span_of(const Module& m, std::span<const Elem> gens);

/// Greedy generating set of a submodule: repeatedly add the element that
/// enlarges the span most, least index first on ties.
std::vector<Elem> generating_set(const Module& m, std::span<const Elem> submodule);

struct Embedding {
  ModulePtr module;
  ModuleHom inclusion;
};

struct Projection {
  ModulePtr module;
  ModuleHom projection;
};

/// `elements` must be closed under addition and the ring action.
Embedding submodule(const ModulePtr& m, std::span<const Elem> elements);

/// m / submodule, cosets numbered by least representative.
Projection quotient_module(const ModulePtr& m, std::span<const Elem> submodule);

/// An ideal viewed as a submodule of the free module of rank 1.
Embedding ideal_as_module(const Ideal& i);

struct KernelImageCoker {
  Embedding kernel;
  Embedding image;
  Projection coker;
};

KernelImageCoker kernel_image_coker(const ModuleHom& h);

/// Elements x with r*x = 0 for every r in the set.
std::vector<Elem> killed_by(const Module& m, std::span<const Elem> ring_elements);

/// r*M as a sorted element list.
std::vector<Elem> scaled(const Module& m, Elem r);

/// Annihilator ideal of a single module element.
Ideal element_annihilator(const Module& m, Elem x);

}  // namespace semireg
