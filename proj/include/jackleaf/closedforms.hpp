#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackleaf/multipoly.hpp"
#include "jackleaf/partition.hpp"

namespace jackleaf {

struct LeafFormulaInput {
  int u = 0;
  int d = 0;
  int m = 0;
  MultiPoly y;  // critical hook g + l·r, or the symbolic variable y
};

// The two-row leaf formula with d' = d - m:
//   L(u,d;m,y) = Σ_{l=0}^{d'} C(d',l) Π_{i=0}^{l-1}(m+i+1-r)(i+r)
//                             Π_{j=l+1}^{d'}(y+d'+r-j)(y+u+r+j).
// InvalidOverlap when m > d or m < 0.
MultiPoly closed_leaf(const LeafFormulaInput& input);
MultiPoly closed_leaf(int u, int d, int m, const MultiPoly& y);

// Gap-case family: closed_leaf with m = 0 and symbolic y.
MultiPoly q_gap(int u, int d);

// Overlap-case family: closed_leaf with y = 0; requires 1 ≤ m ≤ min(u,d).
MultiPoly p_overlap(int u, int d, int m);

// Auxiliary bivariate family in z and theta, with ρ_i = i + 1/2:
//   M^u_d(z;θ) = Σ_k C(d,k) Π_{i<k}(θ+ρ_i²) Π_{j=k+1}^d (z-j)(z+j+u-d).
MultiPoly m_aux(int u, int d);

// Index-shifted overlap family; p_overlap(u,d,m) equals this at (u, d-m, m).
MultiPoly n_shifted(int u, int d, int m);

// φ_k(y) = Π_{i=1}^k (y+i)(y+i-1+2r), symbolic y.
MultiPoly phi_prod(int k);
// ψ_k evaluated at integer argument x: Π_{i=1}^k (x+i)(i-1+2r).
MultiPoly psi_prod(int k, int x);
// ψ_k with its argument carried in the y slot.
MultiPoly psi_prod_symbolic(int k);

// L(u,d;m,y) together with the normalizing product
// Π_{i=1}^{d-m}(y+m+i)(y+i-1+2r); quotient present when division is exact.
struct ReducedLeaf {
  MultiPoly leaf;
  MultiPoly divisor;
  std::optional<MultiPoly> quotient;
};
ReducedLeaf reduced_leaf(const LeafFormulaInput& input);  // needs u,d ≥ m

struct SuiteCaps {
  int u_max = 6;
  int d_max = 6;
  int m_max = 6;
};

struct SuiteCheck {
  std::string identity;
  std::string params;
  bool pass = false;
  std::string residual;  // empty on pass
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool all_pass() const;
  std::size_t failures() const;
};

// Families of exact polynomial identities, one residual check per parameter
// tuple. UnknownSuite for unrecognized names; identity_suite_names() lists
// the valid ones.
SuiteReport identity_suite(const std::string& name, const SuiteCaps& caps);
std::vector<std::string> identity_suite_names();

}  // namespace jackleaf
