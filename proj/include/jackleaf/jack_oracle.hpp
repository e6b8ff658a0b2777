#pragma once

#include <map>
#include <vector>

#include "jackleaf/partition.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

// Explicit polynomial in x_1..x_M, exponent vectors of length M.
struct XPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;
};

// Symmetric polynomial in M variables in the monomial basis; coefficients
// are rational functions of r. Components of different degrees may be mixed.
struct SymPoly {
  int nvars = 0;
  std::map<Partition, RatFun> coeffs;

  RatFun coeff(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? RatFun(0) : it->second;
  }
};

// m_μ in M variables: the sum of all distinct rearrangements of μ padded
// with zeros. TooManyParts when len(μ) > M.
XPoly monomial_expand(const Partition& mu, int M);

// Desk-scale ground truth for Jack polynomials and their binomial
// coefficients, built directly from the eigenproblem of the
// Laplace-Beltrami operator
//   D(α) = (α/2)·Σ x_i²∂²_i + Σ_{i≠j} x_i²/(x_i−x_j)·∂_i,
// realized by symbolic differentiation and exact division on explicit
// expansions. All outputs are in r = 1/α. Caches are per-instance and not
// synchronized; use one oracle per thread.
class JackOracle {
 public:
  // Refuses |λ| or M beyond this bound with ScaleLimit.
  explicit JackOracle(int scale_cap = 10) : cap_(scale_cap) {}

  // P_λ in M variables: monomial-leading, dominance-triangular eigenfunction.
  const SymPoly& jack_polynomial(const Partition& lam, int M);

  // P_λ(1, ..., 1).
  RatFun jack_eval_ones(const Partition& lam, int M);

  // b^λ_μ from the defining expansion of P_λ(1+x_1, ..., 1+x_M).
  RatFun binomial_oracle(const Partition& lam, const Partition& mu, int M);

  // All coefficients of the expansion at once; partitions absent from the
  // map have coefficient zero.
  const std::map<Partition, RatFun>& binomial_oracle_all(const Partition& lam,
                                                         int M);

  // End-to-end eigenfunction check: expands P_λ explicitly, applies D to
  // the expansion, and compares with e_λ·P_λ. Exact.
  bool eigen_check(const Partition& lam, int M);

 private:
  struct DMatrix {
    std::vector<Partition> basis;           // partitions of n, decreasing lex
    std::vector<long long> diag;            // Σ μ_i(μ_i−1)
    std::vector<std::vector<long long>> b;  // pairwise part, m-basis
  };

  const DMatrix& dmatrix(int n, int M);
  RatFun eigenvalue(const DMatrix& dm, std::size_t idx) const;
  void check_scale(const Partition& lam, int M) const;

  int cap_;
  std::map<std::pair<int, int>, DMatrix> dmat_;
  std::map<std::pair<Partition, int>, SymPoly> jack_;
  std::map<std::pair<Partition, int>, std::map<Partition, RatFun>> binom_;
};

}  // namespace jackleaf
