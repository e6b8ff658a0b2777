#pragma once

#include "jackleaf/binomial.hpp"
#include "jackleaf/partition.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

struct StemLeaf {
  RatFun stem;
  RatFun leaf;
};

// Hook-ratio product over the induced decomposition:
//   Π_C c_λ/c_μ · Π_R c'_λ/c'_μ / Π_J c_μ·c'_μ.
// Empty products are 1, so stem(λ, λ) = 1.
RatFun stem(const Partition& lam, const Partition& mu);

// leaf = binomial / stem. Depends only on the skew diagram; for skew shapes
// of at most two rows the result is a polynomial in r, enforced as a
// post-check (InternalInconsistency on failure: a bug, not a domain error).
RatFun leaf(const Partition& lam, const Partition& mu, BinomialContext& ctx);

StemLeaf stem_leaf(const Partition& lam, const Partition& mu,
                   BinomialContext& ctx);

// n·L_{λ/μ} minus the one-box-removal recurrence right side; zero when the
// recurrence holds. EmptySkew when λ = μ.
RatFun leaf_recurrence_residual(const Partition& lam, const Partition& mu,
                                BinomialContext& ctx);

// n·r·L_{λ/μ} minus the dual (one-box-addition) recurrence right side.
RatFun dual_recurrence_residual(const Partition& lam, const Partition& mu,
                                BinomialContext& ctx);

}  // namespace jackleaf
