#include "jackleaf/jack_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace jackleaf {

namespace {

using Exp = std::vector<int>;

// Distinct rearrangements of μ padded to M slots, via next_permutation on
// the ascending arrangement.
std::vector<Exp> padded_permutations(const Partition& mu, int M) {
  Exp base(M, 0);
  for (int i = 0; i < mu.length(); ++i) base[i] = mu.parts()[i];
  std::sort(base.begin(), base.end());
  std::vector<Exp> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

long long padded_permutation_count(const Partition& mu, int M) {
  // M! / Π multiplicity! over the zero-padded part list, accumulated as a
  // product of binomial coefficients so every partial value is integral
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  mult[0] += M - mu.length();
  long long count = 1;
  int filled = 0;
  for (const auto& [part, k] : mult) {
    (void)part;
    for (int i = 1; i <= k; ++i) {
      ++filled;
      count = count * filled / i;
    }
  }
  return count;
}

// f ↦ quotient of (x_i²∂_i f − x_j²∂_j f) by (x_i − x_j). Exact on inputs
// symmetric in x_i, x_j; InternalInconsistency otherwise.
template <class C>
std::map<Exp, C> divided_difference(const std::map<Exp, C>& f, int i, int j) {
  // numerator grouped as a polynomial in x_i: slices[k] = coeff of x_i^k
  std::map<int, std::map<Exp, C>> slices;
  auto add = [&](int k, Exp e, C c) {
    auto& slice = slices[k];
    auto [it, fresh] = slice.emplace(std::move(e), c);
    if (!fresh) {
      it->second += c;
      if (it->second == C(0)) slice.erase(it);
    }
  };
  for (const auto& [e, c] : f) {
    if (e[i] > 0) {  // x_i²∂_i: degree in x_i goes up by one
      Exp t = e;
      t[i] = 0;
      add(e[i] + 1, std::move(t), c * C(e[i]));
    }
    if (e[j] > 0) {
      Exp t = e;
      t[j] += 1;
      int k = t[i];
      t[i] = 0;
      add(k, std::move(t), -(c * C(e[j])));
    }
  }
  // synthetic division by (x_i − x_j): q_{k-1} = f_k + x_j·q_k downwards
  std::map<Exp, C> q, carry;
  int top = slices.empty() ? -1 : slices.rbegin()->first;
  for (int k = top; k >= 1; --k) {
    std::map<Exp, C> qk = std::move(carry);
    auto it = slices.find(k);
    if (it != slices.end()) {
      for (const auto& [e, c] : it->second) {
        auto [pos, fresh] = qk.emplace(e, c);
        if (!fresh) {
          pos->second += c;
          if (pos->second == C(0)) qk.erase(pos);
        }
      }
    }
    for (const auto& [e, c] : qk) {
      Exp t = e;
      t[i] = k - 1;
      q.emplace(std::move(t), c);
    }
    carry.clear();
    for (const auto& [e, c] : qk) {  // x_j·q_k feeds the next slice down
      Exp t = e;
      t[j] += 1;
      carry.emplace(std::move(t), c);
    }
  }
  // remainder: f_0 + x_j·q_0 must vanish
  std::map<Exp, C> rem = std::move(carry);
  auto it0 = slices.find(0);
  if (it0 != slices.end()) {
    for (const auto& [e, c] : it0->second) {
      auto [pos, fresh] = rem.emplace(e, c);
      if (!fresh) {
        pos->second += c;
        if (pos->second == C(0)) rem.erase(pos);
      }
    }
  }
  if (!rem.empty())
    fail(Errc::InternalInconsistency,
         "divided difference left a remainder on a symmetric input");
  return q;
}

template <class C>
void map_add(std::map<Exp, C>& into, const std::map<Exp, C>& from) {
  for (const auto& [e, c] : from) {
    auto [it, fresh] = into.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == C(0)) into.erase(it);
    }
  }
}

Partition sorted_to_partition(const Exp& e) {
  Exp s = e;
  std::sort(s.begin(), s.end(), std::greater<int>());
  while (!s.empty() && s.back() == 0) s.pop_back();
  return Partition(std::move(s));
}

long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

XPoly monomial_expand(const Partition& mu, int M) {
  if (mu.length() > M)
    fail(Errc::TooManyParts, mu.str() + " has more than " +
                                 std::to_string(M) + " parts");
  XPoly p;
  p.nvars = M;
  for (Exp& e : padded_permutations(mu, M)) p.terms.emplace(std::move(e), Rat(1));
  return p;
}

void JackOracle::check_scale(const Partition& lam, int M) const {
  if (lam.size() > cap_ || M > cap_)
    fail(Errc::ScaleLimit, "oracle capped at size " + std::to_string(cap_));
  if (lam.length() > M)
    fail(Errc::TooManyParts, lam.str() + " has more than " +
                                 std::to_string(M) + " parts");
}

const JackOracle::DMatrix& JackOracle::dmatrix(int n, int M) {
  auto key = std::make_pair(n, M);
  auto it = dmat_.find(key);
  if (it != dmat_.end()) return it->second;

  DMatrix dm;
  dm.basis = partitions_of(n, M);
  std::map<Partition, std::size_t> index;
  for (std::size_t k = 0; k < dm.basis.size(); ++k) index[dm.basis[k]] = k;
  dm.diag.resize(dm.basis.size());
  dm.b.assign(dm.basis.size(), std::vector<long long>(dm.basis.size(), 0));

  for (std::size_t k = 0; k < dm.basis.size(); ++k) {
    const Partition& mu = dm.basis[k];
    long long diag = 0;
    for (int p : mu.parts()) diag += static_cast<long long>(p) * (p - 1);
    dm.diag[k] = diag;

    std::map<Exp, long long> f;
    for (Exp& e : padded_permutations(mu, M)) f.emplace(std::move(e), 1);
    std::map<Exp, long long> pairwise;
    for (int i = 0; i < M; ++i)
      for (int j = i + 1; j < M; ++j)
        map_add(pairwise, divided_difference(f, i, j));

    // read off m-coefficients and confirm they account for every term
    std::map<Exp, long long> rebuilt;
    for (const auto& [e, c] : pairwise) {
      Exp s = e;
      std::sort(s.begin(), s.end(), std::greater<int>());
      if (s != e) continue;  // not the decreasing representative
      Partition nu = sorted_to_partition(e);
      auto pos = index.find(nu);
      if (pos == index.end())
        fail(Errc::InternalInconsistency,
             "operator image left the monomial basis");
      dm.b[k][pos->second] = c;
      for (Exp& perm : padded_permutations(nu, M)) {
        auto [slot, fresh] = rebuilt.emplace(std::move(perm), c);
        if (!fresh) slot->second += c;
      }
    }
    for (auto rit = rebuilt.begin(); rit != rebuilt.end();)
      rit = rit->second == 0 ? rebuilt.erase(rit) : std::next(rit);
    if (rebuilt != pairwise)
      fail(Errc::InternalInconsistency,
           "operator image is not symmetric in the m-basis");

    // dominance-triangularity, seen through the lex refinement
    for (std::size_t col = 0; col < k; ++col)
      if (dm.b[k][col] != 0)
        fail(Errc::InternalInconsistency,
             "operator action broke triangularity");
  }
  return dmat_.emplace(std::move(key), std::move(dm)).first->second;
}

RatFun JackOracle::eigenvalue(const DMatrix& dm, std::size_t idx) const {
  // e = diag/(2r) + b[idx][idx]
  UniPoly two_r = UniPoly::var().scaled(Rat(2));
  return RatFun(UniPoly(Rat(dm.diag[idx])), two_r) +
         RatFun(Rat(dm.b[idx][idx]));
}

const SymPoly& JackOracle::jack_polynomial(const Partition& lam, int M) {
  check_scale(lam, M);
  auto key = std::make_pair(lam, M);
  auto it = jack_.find(key);
  if (it != jack_.end()) return it->second;

  const DMatrix& dm = dmatrix(lam.size(), M);
  std::size_t lam_idx = static_cast<std::size_t>(
      std::find(dm.basis.begin(), dm.basis.end(), lam) - dm.basis.begin());
  RatFun e_lam = eigenvalue(dm, lam_idx);

  std::vector<RatFun> v(dm.basis.size(), RatFun(0));
  v[lam_idx] = RatFun(1);
  for (std::size_t nu = lam_idx + 1; nu < dm.basis.size(); ++nu) {
    RatFun num(0);
    for (std::size_t mu = lam_idx; mu < nu; ++mu) {
      if (v[mu].is_zero() || dm.b[mu][nu] == 0) continue;
      num += v[mu] * RatFun(Rat(dm.b[mu][nu]));
    }
    if (num.is_zero()) continue;
    RatFun gap = e_lam - eigenvalue(dm, nu);
    if (gap.is_zero())
      fail(Errc::DegenerateEigenvalue,
           "eigenvalue collision between " + lam.str() + " and " +
               dm.basis[nu].str());
    v[nu] = num / gap;
  }

  SymPoly p;
  p.nvars = M;
  for (std::size_t k = lam_idx; k < dm.basis.size(); ++k)
    if (!v[k].is_zero()) p.coeffs.emplace(dm.basis[k], std::move(v[k]));
  return jack_.emplace(std::move(key), std::move(p)).first->second;
}

RatFun JackOracle::jack_eval_ones(const Partition& lam, int M) {
  const SymPoly& p = jack_polynomial(lam, M);
  RatFun out(0);
  for (const auto& [mu, c] : p.coeffs)
    out += c * RatFun(Rat(padded_permutation_count(mu, M)));
  return out;
}

const std::map<Partition, RatFun>& JackOracle::binomial_oracle_all(
    const Partition& lam, int M) {
  check_scale(lam, M);
  auto key = std::make_pair(lam, M);
  auto it = binom_.find(key);
  if (it != binom_.end()) return it->second;

  const int n = lam.size();
  const SymPoly& p_lam = jack_polynomial(lam, M);

  // m_ν(1+x) = Σ_κ T[ν][κ]·m_κ(x): integer shift matrix over the support
  // of P_λ, κ running over all partitions of ≤ n with ≤ M parts.
  std::vector<std::vector<Partition>> strata(n + 1);
  for (int k = 0; k <= n; ++k) strata[k] = partitions_of(k, M);

  std::map<Partition, RatFun> w;  // m-coefficients of P_λ(1+x)
  for (const auto& [nu, coeff] : p_lam.coeffs) {
    auto perms = padded_permutations(nu, M);
    for (int k = 0; k <= n; ++k) {
      for (const Partition& kappa : strata[k]) {
        Exp kp(M, 0);
        for (int i = 0; i < kappa.length(); ++i) kp[i] = kappa.parts()[i];
        long long t = 0;
        for (const Exp& a : perms) {
          long long prod = 1;
          for (int i = 0; i < M && prod != 0; ++i)
            prod *= binom_ll(a[i], kp[i]);
          t += prod;
        }
        if (t == 0) continue;
        RatFun add = coeff * RatFun(Rat(t));
        auto [slot, fresh] = w.emplace(kappa, add);
        if (!fresh) slot->second += add;
      }
    }
  }

  // change of basis m -> P, degree by degree, largest partition first
  RatFun p_lam_ones = jack_eval_ones(lam, M);
  std::map<Partition, RatFun> out;
  for (int k = 0; k <= n; ++k) {
    std::map<Partition, RatFun> btilde;
    for (const Partition& kappa : strata[k]) {  // decreasing lex
      RatFun c = w.count(kappa) ? w.at(kappa) : RatFun(0);
      for (const auto& [tau, bt] : btilde)
        c -= bt * jack_polynomial(tau, M).coeff(kappa);
      if (!c.is_zero()) btilde.emplace(kappa, std::move(c));
    }
    for (auto& [kappa, bt] : btilde) {
      RatFun b = bt * jack_eval_ones(kappa, M) / p_lam_ones;
      if (!b.is_zero()) out.emplace(kappa, std::move(b));
    }
  }
  return binom_.emplace(std::move(key), std::move(out)).first->second;
}

RatFun JackOracle::binomial_oracle(const Partition& lam, const Partition& mu,
                                   int M) {
  if (mu.length() > M)
    fail(Errc::TooManyParts, mu.str() + " has more than " +
                                 std::to_string(M) + " parts");
  const auto& all = binomial_oracle_all(lam, M);
  auto it = all.find(mu);
  return it == all.end() ? RatFun(0) : it->second;
}

bool JackOracle::eigen_check(const Partition& lam, int M) {
  const SymPoly& p = jack_polynomial(lam, M);
  std::map<Exp, RatFun> expansion;
  for (const auto& [mu, c] : p.coeffs)
    for (Exp& e : padded_permutations(mu, M)) expansion.emplace(std::move(e), c);

  const RatFun half_alpha(UniPoly(Rat(1)), UniPoly::var().scaled(Rat(2)));
  std::map<Exp, RatFun> image;
  for (const auto& [e, c] : expansion) {
    long long s = 0;
    for (int x : e) s += static_cast<long long>(x) * (x - 1);
    if (s != 0) {
      RatFun scaled = c * half_alpha * RatFun(Rat(s));
      auto [it, fresh] = image.emplace(e, scaled);
      if (!fresh) it->second += scaled;
    }
  }
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      map_add(image, divided_difference(expansion, i, j));

  const DMatrix& dm = dmatrix(lam.size(), M);
  std::size_t lam_idx = static_cast<std::size_t>(
      std::find(dm.basis.begin(), dm.basis.end(), lam) - dm.basis.begin());
  RatFun e_lam = eigenvalue(dm, lam_idx);

  std::map<Exp, RatFun> expected;
  for (const auto& [e, c] : expansion) {
    RatFun scaled = c * e_lam;
    if (!scaled.is_zero()) expected.emplace(e, std::move(scaled));
  }
  for (auto it2 = image.begin(); it2 != image.end();)
    it2 = it2->second.is_zero() ? image.erase(it2) : std::next(it2);
  return image == expected;
}

}  // namespace jackleaf
