#include "semireg/fitting.hpp"

#include "semireg/errors.hpp"

namespace semireg {

namespace {

// Calls visit(subset) for every increasing k-subset of 0..n-1.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Elem determinant(const FiniteRing& r, const Matrix& a) {
  if (a.rows != a.cols) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows;
  if (n == 0) return r.one();
  if (n == 1) return a.at(0, 0);
  Elem acc = r.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j) == r.zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor.at(i - 1, k++) = a.at(i, c);
    const Elem term = r.mul(a.at(0, j), determinant(r, minor));
    acc = (j % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
  }
  return acc;
}

Ideal FittingChain::at(long i) const {
  if (ideals.empty()) throw PreconditionError("empty Fitting chain");
  if (i < 0) return zero_ideal(ideals.back().ring());
  if (static_cast<std::size_t>(i) >= rows) return unit_ideal(ideals.back().ring());
  return ideals[static_cast<std::size_t>(i)];
}

FittingChain fitting_ideals(const RingPtr& r, const Matrix& a, std::size_t minor_cap) {
  FittingChain chain{a.rows, a.cols, {}};
  for (std::size_t i = 0; i < a.rows; ++i) {
    const std::size_t t = a.rows - i;
    if (t > a.cols) {
      chain.ideals.push_back(zero_ideal(r));
      continue;
    }
    if (t > minor_cap) throw CapExceeded("minor of size " + std::to_string(t) + " exceeds the cap");
    std::vector<Elem> minors;
    for_each_subset(a.rows, t, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols, t, [&](const std::vector<std::size_t>& cols) {
        Matrix sub(t, t);
        for (std::size_t x = 0; x < t; ++x)
          for (std::size_t y = 0; y < t; ++y) sub.at(x, y) = a.at(rows[x], cols[y]);
        const Elem d = determinant(*r, sub);
        if (d != r->zero()) minors.push_back(d);
      });
    });
    chain.ideals.push_back(ideal_generated(r, minors));
  }
  chain.ideals.push_back(unit_ideal(r));
  for (std::size_t i = 0; i + 1 < chain.ideals.size(); ++i)
    if (!chain.ideals[i].subset_of(chain.ideals[i + 1])) throw InternalError("Fitting chain is not ascending");
  return chain;
}

FittingChain fitting_ideals(const Module& m, std::size_t minor_cap) {
  return fitting_ideals(m.ring(), m.relations(), minor_cap);
}

bool is_projective_constant_rank(const Module& m, long k) {
  if (k < 0) throw PreconditionError("rank must be non-negative");
  const FittingChain chain = fitting_ideals(m);
  return chain.at(k - 1).is_zero() && chain.at(k).is_whole();
}

}  // namespace semireg
