#pragma once

// Fitting invariants of a presentation matrix (rows = generators).

#include <cstddef>
#include <vector>

#include "semireg/ideal.hpp"
#include "semireg/module.hpp"

namespace semireg {

inline constexpr std::size_t kMinorCap = 6;

struct FittingChain {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// F_0 .. F_rows; F_rows is always the unit ideal.
  std::vector<Ideal> ideals;

  /// F_i with the conventions F_i = 0 for i < 0 and F_i = R for i >= rows.
  Ideal at(long i) const;
};

/// Exact determinant by cofactor expansion along the first row.
Elem determinant(const FiniteRing& r, const Matrix& square);

/// F_i is generated by the (m-i)x(m-i) minors; zero when m-i exceeds the
/// column count. Throws CapExceeded when a needed minor is larger than
/// `minor_cap`.
FittingChain fitting_ideals(const RingPtr& r, const Matrix& a, std::size_t minor_cap = kMinorCap);
FittingChain fitting_ideals(const Module& m, std::size_t minor_cap = kMinorCap);

/// F_{k-1} = 0 and F_k = R.
bool is_projective_constant_rank(const Module& m, long k);

}  // namespace semireg
