#include "jackleaf/binomial.hpp"

namespace jackleaf {

RatFun adjacent_coeff(const Partition& lam, const Partition& kappa) {
  if (!lam.contains(kappa) || lam.size() - kappa.size() != 1)
    fail(Errc::NotAdjacent,
         kappa.str() + " is not covered by " + lam.str());
  Box skew{0, 0};
  for (int i = 1; i <= lam.length(); ++i)
    if (kappa.part(i) < lam.part(i)) skew = Box{i, lam.part(i)};
  UniPoly num(Rat(1)), den(Rat(1));
  for (int i = 1; i < skew.row; ++i) {
    if (kappa.part(i) < skew.col) break;
    Box b{i, skew.col};
    num *= lower_hook(lam, b);
    den *= lower_hook(kappa, b);
  }
  for (int j = 1; j < skew.col; ++j) {
    Box b{skew.row, j};
    num *= upper_hook(lam, b);
    den *= upper_hook(kappa, b);
  }
  return RatFun(num, den);
}

const RatFun& BinomialContext::binomial(const Partition& lam,
                                        const Partition& mu) {
  auto key = std::make_pair(lam, mu);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  RatFun value;
  if (lam == mu) {
    value = RatFun(1);
  } else if (!lam.contains(mu)) {
    value = RatFun(0);
  } else {
    RatFun sum(0);
    for (const Partition& kappa :
         covers_between(mu, lam, CoverDirection::remove_from_lam))
      sum += adjacent_coeff(lam, kappa) * binomial(kappa, mu);
    value = sum / RatFun(lam.size() - mu.size());
  }
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

RatFun binomial(const Partition& lam, const Partition& mu,
                BinomialContext& ctx) {
  return ctx.binomial(lam, mu);
}

namespace {
void chains(const Partition& lam, const Partition& mu, const RatFun& acc,
            RatFun& sum) {
  if (lam == mu) {
    sum += acc;
    return;
  }
  for (const Partition& kappa :
       covers_between(mu, lam, CoverDirection::remove_from_lam))
    chains(kappa, mu, acc * adjacent_coeff(lam, kappa), sum);
}
}  // namespace

RatFun binomial_chain_sum(const Partition& lam, const Partition& mu,
                          int cap) {
  if (!lam.contains(mu)) return RatFun(0);
  int n = lam.size() - mu.size();
  if (n > cap)
    fail(Errc::ScaleLimit, "chain sum over " + std::to_string(n) +
                               " boxes exceeds the cap of " +
                               std::to_string(cap));
  RatFun sum(0);
  chains(lam, mu, RatFun(1), sum);
  long factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return sum / RatFun(factorial);
}

}  // namespace jackleaf
