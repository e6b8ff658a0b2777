#include "jackleaf/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jackleaf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(Errc::NotAPartition, "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(Errc::NotAPartition, "parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::string trimmed;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed.empty()) return Partition();  // zero partition
  std::vector<int> parts;
  std::string token;
  std::istringstream in(trimmed);
  while (std::getline(in, token, ',')) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      fail(Errc::ParseError, "bad partition token '" + token + "'");
    parts.push_back(std::stoi(token));
  }
  // validate weak monotonicity before stripping zeros, so "1,0,2" fails
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      fail(Errc::NotAPartition, "parts must be weakly decreasing");
  return Partition(std::move(parts));
}

int Partition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

int Partition::part(int row) const {
  if (row < 1 || row > length()) return 0;
  return parts_[row - 1];
}

int Partition::conj_part(int col) const {
  int count = 0;
  for (int p : parts_) {
    if (p >= col) ++count;
    else break;
  }
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.assign(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

Partition Partition::with_box_in_row(int row) const {
  std::vector<int> p = parts_;
  if (row == length() + 1) p.push_back(1);
  else p[row - 1] += 1;
  return Partition(std::move(p));
}

Partition Partition::without_box_in_row(int row) const {
  std::vector<int> p = parts_;
  p[row - 1] -= 1;
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Box> DecompLabels::with_label(BoxLabel l) const {
  std::vector<Box> out;
  for (const auto& [b, lbl] : labels)
    if (lbl == l) out.push_back(b);
  return out;
}

namespace {
void require_box(const Partition& lam, Box b) {
  if (!lam.has_box(b.row, b.col))
    fail(Errc::BoxOutOfDiagram, "box (" + std::to_string(b.row) + "," +
                                    std::to_string(b.col) +
                                    ") outside the diagram");
}
void require_contains(const Partition& lam, const Partition& mu) {
  if (!lam.contains(mu))
    fail(Errc::NotContained, mu.str() + " is not contained in " + lam.str());
}
}  // namespace

int arm_length(const Partition& lam, Box b) {
  require_box(lam, b);
  return lam.part(b.row) - b.col;
}

int leg_length(const Partition& lam, Box b) {
  require_box(lam, b);
  return lam.conj_part(b.col) - b.row;
}

BoxHooks box_hooks(const Partition& lam, Box b) {
  BoxHooks h;
  h.arm = arm_length(lam, b);
  h.leg = leg_length(lam, b);
  h.lower = MultiPoly::linear(Rat(h.arm), Rat(h.leg + 1), Var::r);
  h.upper = MultiPoly::linear(Rat(h.arm + 1), Rat(h.leg), Var::r);
  return h;
}

UniPoly lower_hook(const Partition& lam, Box b) {
  require_box(lam, b);
  return UniPoly::linear(Rat(lam.part(b.row) - b.col),
                         Rat(lam.conj_part(b.col) - b.row + 1));
}

UniPoly upper_hook(const Partition& lam, Box b) {
  require_box(lam, b);
  return UniPoly::linear(Rat(lam.part(b.row) - b.col + 1),
                         Rat(lam.conj_part(b.col) - b.row));
}

DecompLabels induced_decomposition(const Partition& lam, const Partition& mu) {
  require_contains(lam, mu);
  DecompLabels out;
  for (int i = 1; i <= lam.length(); ++i) {
    bool row_gained = mu.part(i) < lam.part(i);
    for (int j = 1; j <= lam.part(i); ++j) {
      BoxLabel l;
      if (j > mu.part(i)) {
        l = BoxLabel::S;
      } else {
        bool col_gained = mu.conj_part(j) < lam.conj_part(j);
        l = row_gained ? (col_gained ? BoxLabel::J : BoxLabel::R)
                       : (col_gained ? BoxLabel::C : BoxLabel::N);
      }
      out.labels[Box{i, j}] = l;
    }
  }
  return out;
}

std::vector<Box> skew_boxes(const Partition& lam, const Partition& mu) {
  require_contains(lam, mu);
  std::vector<Box> out;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = mu.part(i) + 1; j <= lam.part(i); ++j)
      out.push_back(Box{i, j});
  return out;
}

std::vector<int> skew_rows(const Partition& lam, const Partition& mu) {
  require_contains(lam, mu);
  std::vector<int> rows;
  for (int i = 1; i <= lam.length(); ++i)
    if (mu.part(i) < lam.part(i)) rows.push_back(i);
  return rows;
}

CriticalData critical_data(const Partition& lam, const Partition& mu) {
  DecompLabels dec = induced_decomposition(lam, mu);
  CriticalData out;
  out.y = MultiPoly(0);
  Box best{0, 0};
  bool found = false;
  for (const auto& [b, l] : dec.labels) {
    if (l != BoxLabel::J) continue;
    // rightmost box of J; ties broken by the topmost row
    if (!found || b.col > best.col || (b.col == best.col && b.row < best.row)) {
      best = b;
      found = true;
    }
  }
  if (!found) return out;
  out.xstar = best;
  std::vector<int> rows = skew_rows(lam, mu);
  if (rows.size() == 2) {
    int m = std::max(0, lam.part(rows[1]) - mu.part(rows[0]));
    if (m == 0)
      out.y = MultiPoly::linear(Rat(arm_length(mu, best)),
                                Rat(leg_length(mu, best)), Var::r);
  }
  return out;
}

TwoRowData two_row_data(const Partition& lam, const Partition& mu) {
  std::vector<int> rows = skew_rows(lam, mu);
  if (rows.size() > 2)
    fail(Errc::NotTwoRow, "skew shape " + lam.str() + "/" + mu.str() +
                              " spans more than two rows");
  TwoRowData out;
  out.y = MultiPoly(0);
  if (rows.empty()) return out;
  out.u = lam.part(rows[0]) - mu.part(rows[0]);
  if (rows.size() == 1) return out;
  out.d = lam.part(rows[1]) - mu.part(rows[1]);
  // columns occupied by both rows: (mu_i1, lam_i1] ∩ (mu_i2, lam_i2]
  out.m = std::max(0, std::min(lam.part(rows[0]), lam.part(rows[1])) -
                          std::max(mu.part(rows[0]), mu.part(rows[1])));
  out.y = critical_data(lam, mu).y;
  return out;
}

std::vector<Partition> covers_between(const Partition& mu,
                                      const Partition& lam,
                                      CoverDirection direction) {
  require_contains(lam, mu);
  std::vector<Partition> out;
  if (direction == CoverDirection::remove_from_lam) {
    for (int i = 1; i <= lam.length(); ++i) {
      bool corner = lam.part(i) > lam.part(i + 1);
      if (corner && lam.part(i) - 1 >= mu.part(i))
        out.push_back(lam.without_box_in_row(i));
    }
  } else {
    for (int i = 1; i <= mu.length() + 1; ++i) {
      bool addable = i == 1 || mu.part(i - 1) > mu.part(i);
      if (addable && mu.part(i) + 1 <= lam.part(i))
        out.push_back(mu.with_box_in_row(i));
    }
  }
  return out;
}

std::string render_decomposition(const Partition& lam, const Partition& mu) {
  DecompLabels dec = induced_decomposition(lam, mu);
  std::optional<Box> xstar = critical_data(lam, mu).xstar;
  std::string out;
  for (int i = 1; i <= lam.length(); ++i) {
    if (i > 1) out += "\n";
    for (int j = 1; j <= lam.part(i); ++j) {
      Box b{i, j};
      if (xstar && b == *xstar)
        out += '*';
      else
        out += static_cast<char>(dec.labels.at(b));
    }
  }
  return out;
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;  // recursion emits decreasing lex order
}

std::vector<Partition> subpartitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row) -> void {
    if (row > lam.length()) {
      out.push_back(Partition(std::vector<int>(cur)));
      return;
    }
    int upper = std::min(lam.part(row), row == 1 ? lam.part(1)
                                                 : cur[row - 2]);
    for (int p = upper; p >= 0; --p) {
      cur.push_back(p);
      self(self, row + 1);
      cur.pop_back();
      if (p == 0) break;
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace jackleaf
