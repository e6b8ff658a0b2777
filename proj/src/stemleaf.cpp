#include "jackleaf/stemleaf.hpp"

namespace jackleaf {

RatFun stem(const Partition& lam, const Partition& mu) {
  DecompLabels dec = induced_decomposition(lam, mu);
  UniPoly num(Rat(1)), den(Rat(1));
  for (const auto& [b, label] : dec.labels) {
    switch (label) {
      case BoxLabel::C:
        num *= lower_hook(lam, b);
        den *= lower_hook(mu, b);
        break;
      case BoxLabel::R:
        num *= upper_hook(lam, b);
        den *= upper_hook(mu, b);
        break;
      case BoxLabel::J:
        den *= lower_hook(mu, b) * upper_hook(mu, b);
        break;
      default:
        break;
    }
  }
  return RatFun(num, den);
}

RatFun leaf(const Partition& lam, const Partition& mu, BinomialContext& ctx) {
  if (!lam.contains(mu))
    fail(Errc::NotContained, mu.str() + " is not contained in " + lam.str());
  RatFun value = ctx.binomial(lam, mu) / stem(lam, mu);
  if (skew_rows(lam, mu).size() <= 2 && !value.is_polynomial())
    fail(Errc::InternalInconsistency,
         "two-row leaf " + lam.str() + "/" + mu.str() +
             " came out non-polynomial: " + value.str());
  return value;
}

StemLeaf stem_leaf(const Partition& lam, const Partition& mu,
                   BinomialContext& ctx) {
  return StemLeaf{stem(lam, mu), leaf(lam, mu, ctx)};
}

namespace {

// Case factor h^A_B(s): C-boxes give a lower-hook ratio, R-boxes an
// upper-hook ratio, everything else 1. Labels are the induced decomposition
// of A by B; boxes outside A contribute 1.
RatFun h_factor(const Partition& a, const Partition& b,
                const DecompLabels& dec_ab, Box s) {
  auto it = dec_ab.labels.find(s);
  if (it == dec_ab.labels.end()) return RatFun(1);
  switch (it->second) {
    case BoxLabel::C:
      return RatFun(lower_hook(a, s), lower_hook(b, s));
    case BoxLabel::R:
      return RatFun(upper_hook(a, s), upper_hook(b, s));
    default:
      return RatFun(1);
  }
}

// Case factor ℓ^A_B(s): C-boxes give c_A·c'_B, R-boxes c'_A·c_B, else 1.
RatFun l_factor(const Partition& a, const Partition& b,
                const DecompLabels& dec_ab, Box s) {
  auto it = dec_ab.labels.find(s);
  if (it == dec_ab.labels.end()) return RatFun(1);
  switch (it->second) {
    case BoxLabel::C:
      return RatFun(lower_hook(a, s) * upper_hook(b, s));
    case BoxLabel::R:
      return RatFun(upper_hook(a, s) * lower_hook(b, s));
    default:
      return RatFun(1);
  }
}

std::vector<Box> completion_boxes(const DecompLabels& dec) {
  std::vector<Box> out;
  for (const auto& [b, l] : dec.labels)
    if (l == BoxLabel::S || l == BoxLabel::J) out.push_back(b);
  return out;
}

void require_proper_skew(const Partition& lam, const Partition& mu) {
  if (!lam.contains(mu))
    fail(Errc::NotContained, mu.str() + " is not contained in " + lam.str());
  if (lam == mu) fail(Errc::EmptySkew, "recurrence needs |λ| > |μ|");
}

}  // namespace

RatFun leaf_recurrence_residual(const Partition& lam, const Partition& mu,
                                BinomialContext& ctx) {
  require_proper_skew(lam, mu);
  int n = lam.size() - mu.size();
  DecompLabels dec = induced_decomposition(lam, mu);
  std::vector<Box> splus = completion_boxes(dec);
  RatFun rhs(0);
  for (const Partition& kappa :
       covers_between(mu, lam, CoverDirection::remove_from_lam)) {
    DecompLabels dec_lk = induced_decomposition(lam, kappa);
    DecompLabels dec_km = induced_decomposition(kappa, mu);
    RatFun factor(1);
    for (Box s : splus)
      factor *= h_factor(lam, kappa, dec_lk, s) *
                l_factor(kappa, mu, dec_km, s);
    rhs += leaf(kappa, mu, ctx) * factor;
  }
  return RatFun(n) * leaf(lam, mu, ctx) - rhs;
}

RatFun dual_recurrence_residual(const Partition& lam, const Partition& mu,
                                BinomialContext& ctx) {
  require_proper_skew(lam, mu);
  int n = lam.size() - mu.size();
  DecompLabels dec = induced_decomposition(lam, mu);
  std::vector<Box> splus = completion_boxes(dec);
  std::vector<Box> jboxes = dec.with_label(BoxLabel::J);
  const RatFun r_var{UniPoly::var()};
  RatFun rhs(0);
  for (const Partition& nu :
       covers_between(mu, lam, CoverDirection::add_to_mu)) {
    Box added{0, 0};
    for (int i = 1; i <= nu.length(); ++i)
      if (nu.part(i) > mu.part(i)) added = Box{i, nu.part(i)};
    DecompLabels dec_nm = induced_decomposition(nu, mu);
    DecompLabels dec_ln = induced_decomposition(lam, nu);
    RatFun factor(1);
    for (Box s : splus)
      factor *= h_factor(nu, mu, dec_nm, s) * l_factor(lam, nu, dec_ln, s);
    for (Box s : jboxes)
      factor *= RatFun(lower_hook(mu, s) * upper_hook(mu, s),
                       lower_hook(nu, s) * upper_hook(nu, s));
    // The added box is a bottom corner of ν, so its ν-hook product
    // c_ν·c'_ν is exactly r. When the box is neutral in (λ, ν), i.e. it
    // fills both its row and its column, its contribution is its λ-hook
    // product c_λ·c'_λ = r rather than the case table's 1.
    if (dec_ln.labels.at(added) == BoxLabel::N) factor *= r_var;
    rhs += leaf(lam, nu, ctx) * factor;
  }
  return RatFun(n) * r_var * leaf(lam, mu, ctx) - rhs;
}

}  // namespace jackleaf
