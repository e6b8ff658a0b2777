#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jackleaf/multipoly.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

// Integer partition, identified with its Young diagram (left-justified rows,
// row 1 on top). Canonical form has no trailing zeros; the empty partition
// is the zero partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // NotAPartition on violation

  // Comma-separated parts, e.g. "7,3,3,1"; "" is the zero partition.
  // Trailing zeros are stripped. ParseError / NotAPartition.
  static Partition parse(const std::string& text);

  int size() const;  // |λ|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // λ_row for 1-based row; 0 beyond the last row.
  int part(int row) const;
  // λ'_col for 1-based col: number of rows with at least col boxes.
  int conj_part(int col) const;
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // μ ⊆ λ componentwise
  bool has_box(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
  }

  // Adds one box at (row, part(row)+1); the result must be a partition.
  Partition with_box_in_row(int row) const;
  // Removes the last box of the given row; must stay a partition.
  Partition without_box_in_row(int row) const;

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

struct Box {
  int row = 0;  // 1-based, top-down
  int col = 0;  // 1-based, left-right
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

enum class BoxLabel : char { S = 'S', R = 'R', C = 'C', J = 'J', N = 'N' };

// Labeling of every box of λ relative to μ: S = skew, then for boxes of μ,
// J/R/C/N according to whether the box's row and/or column gained boxes.
struct DecompLabels {
  std::map<Box, BoxLabel> labels;
  std::vector<Box> with_label(BoxLabel l) const;
};

struct BoxHooks {
  int arm = 0;
  int leg = 0;
  MultiPoly lower;  // arm + r·leg + r
  MultiPoly upper;  // arm + r·leg + 1
};

// Two-row skew shape parameters: u upper-row boxes, d lower-row boxes,
// m overlapping columns, y the critical hook (a polynomial g + l·r).
struct TwoRowData {
  int u = 0;
  int d = 0;
  int m = 0;
  MultiPoly y;
};

struct CriticalData {
  std::optional<Box> xstar;
  MultiPoly y;
};

int arm_length(const Partition& lam, Box b);  // BoxOutOfDiagram
int leg_length(const Partition& lam, Box b);
BoxHooks box_hooks(const Partition& lam, Box b);

// Hooks as univariate polynomials in r, the fast path for stem/binomial
// arithmetic.
UniPoly lower_hook(const Partition& lam, Box b);  // arm + r·leg + r
UniPoly upper_hook(const Partition& lam, Box b);  // arm + r·leg + 1

DecompLabels induced_decomposition(const Partition& lam, const Partition& mu);

CriticalData critical_data(const Partition& lam, const Partition& mu);

// NotTwoRow when the skew spans three or more rows. Empty skew: (0,0,0,0);
// single row: (u,0,0,0).
TwoRowData two_row_data(const Partition& lam, const Partition& mu);

enum class CoverDirection { remove_from_lam, add_to_mu };

// remove_from_lam: all κ with κ ⊂: λ and μ ⊆ κ.
// add_to_mu:       all ν with μ ⊂: ν and ν ⊆ λ.
std::vector<Partition> covers_between(const Partition& mu,
                                      const Partition& lam,
                                      CoverDirection direction);

// One line per row of λ, labels from {S,R,C,J,N}, critical box as '*'.
std::string render_decomposition(const Partition& lam, const Partition& mu);

// Skew box set of λ/μ, row-major.
std::vector<Box> skew_boxes(const Partition& lam, const Partition& mu);
// Distinct row indices of λ/μ.
std::vector<int> skew_rows(const Partition& lam, const Partition& mu);

// All partitions of n with at most max_len parts, decreasing lex order.
std::vector<Partition> partitions_of(int n, int max_len = 1 << 20);
// All μ ⊆ λ.
std::vector<Partition> subpartitions(const Partition& lam);

}  // namespace jackleaf
