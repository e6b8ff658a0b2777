#pragma once

#include <map>
#include <utility>

#include "jackleaf/partition.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

// Coefficient for adjacent partitions κ ⊂: λ: the product of hook ratios
// over the boxes of κ sharing the column (lower hooks) or the row (upper
// hooks) with the unique skew box. NotAdjacent unless |λ| - |κ| = 1.
RatFun adjacent_coeff(const Partition& lam, const Partition& kappa);

// Memo table for the binomial recursion. Entries are write-once; use one
// context per thread.
class BinomialContext {
 public:
  const RatFun& binomial(const Partition& lam, const Partition& mu);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::pair<Partition, Partition>, RatFun> memo_;
};

// b^λ_μ: 1 on λ = μ, 0 unless μ ⊆ λ, otherwise the one-box-removal
// recursion (|λ|-|μ|)·b^λ_μ = Σ_κ a^λ_κ·b^κ_μ, memoized in ctx.
RatFun binomial(const Partition& lam, const Partition& mu,
                BinomialContext& ctx);

// Test path: (1/n!)·Σ over saturated chains μ ⊂: ... ⊂: λ of the product of
// adjacent coefficients. Returns 0 when μ ⊄ λ; ScaleLimit when n exceeds
// the cap.
RatFun binomial_chain_sum(const Partition& lam, const Partition& mu,
                          int cap = 7);

}  // namespace jackleaf
