#pragma once

#include <string>
#include <vector>

#include "jackleaf/closedforms.hpp"
#include "jackleaf/partition.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

// Desk-scale verification drivers shared by the verify subcommand and the
// acceptance suite. Each returns a SuiteReport with one check per instance.

// Two-row data, stem, and leaf for the two reference pairs.
SuiteReport verify_reference_fixtures();

// Recursion = chain sum = eigenfunction oracle for every μ ⊆ λ, |λ| ≤ n_max,
// oracle in M variables; also checks the oracle never emits a coefficient
// for μ ⊄ λ.
SuiteReport verify_oracle_triangle(int n_max = 6, int M = 6);

// leaf(λ,μ) = closed_leaf(two_row_data(λ,μ)) over abstract two-row shapes
// embedded in their minimal containers.
SuiteReport verify_main_theorem(int u_max = 5, int d_max = 5,
                                int col_gap_max = 3, int row_gap_max = 2);

// Equal skew box sets give equal leaves across all realizations with
// |λ| ≤ lam_max and at most skew_max skew boxes.
SuiteReport verify_skew_invariance(int skew_max = 6, int lam_max = 9);

// All closed-form identity families at the given caps.
SuiteReport verify_identity_suites(const SuiteCaps& caps = SuiteCaps{});

// binomial_oracle(λ,·,M) identical at M = len(λ) and len(λ)+2, |λ| ≤ n_max.
SuiteReport verify_oracle_stability(int n_max = 5);

// Eigenfunction property of the oracle on explicit expansions.
SuiteReport verify_eigenfunctions(int n_max = 5, int M = 5);

// Both leaf recurrences vanish for every proper pair μ ⊂ λ with |λ| ≤ n_max.
SuiteReport verify_recurrences(int n_max = 7);

// One table row per pair μ ⊆ λ. Shape fields are only set for skew shapes
// of at most two rows.
struct LeafTableRow {
  Partition lam, mu;
  bool two_row = false;
  int u = 0, d = 0, m = 0;
  MultiPoly y;
  RatFun stem, leaf;
  bool leaf_polynomial = false;
  bool leaf_nonneg_integer = false;  // polynomial with nonnegative integer coeffs
};

enum class ShapeFilter { all, two_row, gap, overlap };

std::vector<LeafTableRow> leaf_table(int n_max,
                                     ShapeFilter filter = ShapeFilter::all);

// Positivity scan over the two-row rows of leaf_table(n_max): every leaf a
// polynomial in r with nonnegative integer coefficients. Report-style; the
// caller decides whether failures gate anything.
SuiteReport verify_positivity(int n_max = 8);

}  // namespace jackleaf
