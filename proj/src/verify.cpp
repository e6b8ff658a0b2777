#include "jackleaf/verify.hpp"

#include <map>

#include "jackleaf/binomial.hpp"
#include "jackleaf/jack_oracle.hpp"
#include "jackleaf/stemleaf.hpp"

namespace jackleaf {

namespace {

void push(SuiteReport& rep, const std::string& identity,
          const std::string& params, bool pass,
          const std::string& detail = "") {
  SuiteCheck c;
  c.identity = identity;
  c.params = params;
  c.pass = pass;
  if (!pass) c.residual = detail;
  rep.checks.push_back(std::move(c));
}

std::string pair_str(const Partition& lam, const Partition& mu) {
  return "lambda=(" + lam.str() + ") mu=(" + mu.str() + ")";
}

}  // namespace

SuiteReport verify_reference_fixtures() {
  SuiteReport rep;
  rep.suite = "fixtures";
  BinomialContext ctx;
  auto lin = [](long a, long b) { return UniPoly::linear(Rat(a), Rat(b)); };

  struct Fixture {
    Partition lam, mu;
    TwoRowData data;
    RatFun stem_expect, leaf_expect;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back(
      {Partition::parse("7,3,3,1"), Partition::parse("4,3,1,1"),
       {3, 2, 0, MultiPoly::linear(Rat(1), Rat(1), Var::r)},
       RatFun(lin(7, 3).scaled(Rat(4)),
              lin(4, 3) * lin(1, 1) * lin(1, 1) * lin(1, 1) * lin(2, 1)),
       RatFun(UniPoly::from_coeffs(
           {Rat(60), Rat(238), Rat(275), Rat(90), Rat(9)}))});
  fixtures.push_back(
      {Partition::parse("6,5,3,1"), Partition::parse("6,2,1,1"),
       {3, 2, 1, MultiPoly(0)},
       RatFun(lin(4, 3).scaled(Rat(3)) * lin(1, 2) * lin(5, 2),
              UniPoly::var() * lin(4, 2) * lin(2, 1) * lin(1, 1)),
       RatFun(UniPoly::var().scaled(Rat(6)))});

  for (const Fixture& f : fixtures) {
    std::string where = pair_str(f.lam, f.mu);
    TwoRowData t = two_row_data(f.lam, f.mu);
    bool data_ok = t.u == f.data.u && t.d == f.data.d && t.m == f.data.m &&
                   t.y == f.data.y;
    push(rep, "two-row-data", where, data_ok,
         "(u,d,m) = (" + std::to_string(t.u) + "," + std::to_string(t.d) +
             "," + std::to_string(t.m) + "), y = " + t.y.str());
    RatFun s = stem(f.lam, f.mu);
    push(rep, "stem", where, s == f.stem_expect, s.str());
    RatFun l = leaf(f.lam, f.mu, ctx);
    push(rep, "leaf", where, l == f.leaf_expect, l.str());
  }
  return rep;
}

SuiteReport verify_oracle_triangle(int n_max, int M) {
  SuiteReport rep;
  rep.suite = "oracle-triangle";
  JackOracle oracle;
  BinomialContext ctx;
  for (int n = 0; n <= n_max; ++n) {
    for (const Partition& lam : partitions_of(n, M)) {
      const auto& all = oracle.binomial_oracle_all(lam, M);
      for (const auto& [mu, b] : all) {
        if (!lam.contains(mu))
          push(rep, "oracle-support", pair_str(lam, mu), false,
               "nonzero coefficient outside the containment order");
      }
      for (const Partition& mu : subpartitions(lam)) {
        RatFun recursion = binomial(lam, mu, ctx);
        RatFun chain = binomial_chain_sum(lam, mu, n_max + 1);
        RatFun direct = oracle.binomial_oracle(lam, mu, M);
        bool ok = recursion == chain && chain == direct;
        push(rep, "triple-agreement", pair_str(lam, mu), ok,
             "recursion=" + recursion.str() + " chain=" + chain.str() +
                 " oracle=" + direct.str());
      }
    }
  }
  return rep;
}

SuiteReport verify_main_theorem(int u_max, int d_max, int col_gap_max,
                                int row_gap_max) {
  SuiteReport rep;
  rep.suite = "main-theorem";
  BinomialContext ctx;

  auto check_shape = [&](const Partition& lam, const Partition& mu, int u,
                         int d, int m, const MultiPoly& y) {
    std::string where = pair_str(lam, mu);
    TwoRowData t = two_row_data(lam, mu);
    bool data_ok = t.u == u && t.d == d && t.m == m && t.y == y;
    push(rep, "shape-data", where, data_ok,
         "(u,d,m) = (" + std::to_string(t.u) + "," + std::to_string(t.d) +
             "," + std::to_string(t.m) + "), y = " + t.y.str());
    RatFun lhs = leaf(lam, mu, ctx);
    RatFun rhs(closed_leaf(t.u, t.d, t.m, t.y).to_unipoly());
    push(rep, "leaf-equals-closed-form", where, lhs == rhs,
         "leaf=" + lhs.str() + " closed=" + rhs.str());
  };

  // single skew row at a few offsets
  for (int u = 1; u <= u_max; ++u)
    for (int p = 0; p <= 2; ++p) {
      Partition lam({p + u});
      Partition mu(p > 0 ? std::vector<int>{p} : std::vector<int>{});
      check_shape(lam, mu, u, 0, 0, MultiPoly(0));
    }

  // gap case: lower row at columns 1..d, upper row after a column gap g,
  // rows separated by rg empty rows; minimal container
  for (int u = 1; u <= u_max; ++u)
    for (int d = 1; d <= d_max; ++d)
      for (int g = 0; g <= col_gap_max; ++g)
        for (int rg = 0; rg <= row_gap_max; ++rg) {
          int p = d + g;
          std::vector<int> lam_parts{p + u};
          std::vector<int> mu_parts{p};
          for (int k = 0; k < rg; ++k) {
            lam_parts.push_back(d);
            mu_parts.push_back(d);
          }
          lam_parts.push_back(d);
          Partition lam(std::move(lam_parts));
          Partition mu(std::move(mu_parts));
          check_shape(lam, mu, u, d, 0,
                      MultiPoly::linear(Rat(g), Rat(rg), Var::r));
        }

  // overlap case: adjacent rows sharing m columns; minimal container
  for (int u = 1; u <= u_max; ++u)
    for (int d = 1; d <= d_max; ++d)
      for (int m = 1; m <= std::min(u, d); ++m) {
        std::vector<int> lam_parts{d - m + u, d};
        std::vector<int> mu_parts;
        if (d - m > 0) mu_parts.push_back(d - m);
        Partition lam(std::move(lam_parts));
        Partition mu(std::move(mu_parts));
        check_shape(lam, mu, u, d, m, MultiPoly(0));
      }
  return rep;
}

SuiteReport verify_skew_invariance(int skew_max, int lam_max) {
  SuiteReport rep;
  rep.suite = "skew-invariance";
  BinomialContext ctx;
  struct Seen {
    Partition lam, mu;
    RatFun leaf;
  };
  std::map<std::vector<Box>, Seen> seen;
  std::size_t groups_with_repeats = 0;
  for (int n = 1; n <= lam_max; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Partition& mu : subpartitions(lam)) {
        if (lam.size() - mu.size() > skew_max) continue;
        auto key = skew_boxes(lam, mu);
        RatFun l = leaf(lam, mu, ctx);
        auto it = seen.find(key);
        if (it == seen.end()) {
          seen.emplace(std::move(key), Seen{lam, mu, std::move(l)});
          continue;
        }
        ++groups_with_repeats;
        push(rep, "same-skew-same-leaf",
             pair_str(lam, mu) + " vs " + pair_str(it->second.lam,
                                                   it->second.mu),
             l == it->second.leaf,
             l.str() + " != " + it->second.leaf.str());
      }
    }
  }
  push(rep, "coverage",
       "revisited=" + std::to_string(groups_with_repeats) +
           " shapes=" + std::to_string(seen.size()),
       groups_with_repeats > 100);
  return rep;
}

SuiteReport verify_identity_suites(const SuiteCaps& caps) {
  SuiteReport rep = identity_suite("all", caps);
  rep.suite = "identities";
  return rep;
}

SuiteReport verify_oracle_stability(int n_max) {
  SuiteReport rep;
  rep.suite = "oracle-stability";
  JackOracle oracle;
  for (int n = 0; n <= n_max; ++n)
    for (const Partition& lam : partitions_of(n)) {
      int m0 = lam.length();
      const auto& narrow = oracle.binomial_oracle_all(lam, m0);
      const auto& wide = oracle.binomial_oracle_all(lam, m0 + 2);
      push(rep, "stability",
           "lambda=(" + lam.str() + ") M=" + std::to_string(m0) + "," +
               std::to_string(m0 + 2),
           narrow == wide);
    }
  return rep;
}

SuiteReport verify_eigenfunctions(int n_max, int M) {
  SuiteReport rep;
  rep.suite = "eigenfunctions";
  JackOracle oracle;
  for (int n = 0; n <= n_max; ++n)
    for (const Partition& lam : partitions_of(n, M))
      push(rep, "eigenfunction", "lambda=(" + lam.str() + ")",
           oracle.eigen_check(lam, M));
  return rep;
}

SuiteReport verify_recurrences(int n_max) {
  SuiteReport rep;
  rep.suite = "recurrences";
  BinomialContext ctx;
  for (int n = 1; n <= n_max; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : subpartitions(lam)) {
        if (lam == mu) continue;
        RatFun res = leaf_recurrence_residual(lam, mu, ctx);
        push(rep, "leaf-recurrence", pair_str(lam, mu), res.is_zero(),
             res.str());
        RatFun dual = dual_recurrence_residual(lam, mu, ctx);
        push(rep, "dual-recurrence", pair_str(lam, mu), dual.is_zero(),
             dual.str());
      }
  return rep;
}

std::vector<LeafTableRow> leaf_table(int n_max, ShapeFilter filter) {
  std::vector<LeafTableRow> rows;
  BinomialContext ctx;
  for (int n = 1; n <= n_max; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Partition& mu : subpartitions(lam)) {
        LeafTableRow row;
        row.lam = lam;
        row.mu = mu;
        row.two_row = skew_rows(lam, mu).size() <= 2;
        if (row.two_row) {
          TwoRowData t = two_row_data(lam, mu);
          row.u = t.u;
          row.d = t.d;
          row.m = t.m;
          row.y = t.y;
        }
        if (filter == ShapeFilter::two_row && !row.two_row) continue;
        if (filter == ShapeFilter::gap && !(row.two_row && row.m == 0))
          continue;
        if (filter == ShapeFilter::overlap && !(row.two_row && row.m > 0))
          continue;
        StemLeaf sl = stem_leaf(lam, mu, ctx);
        row.stem = std::move(sl.stem);
        row.leaf = std::move(sl.leaf);
        row.leaf_polynomial = row.leaf.is_polynomial();
        row.leaf_nonneg_integer = row.leaf_polynomial;
        if (row.leaf_polynomial)
          for (const Rat& c : row.leaf.num().coeffs())
            if (!c.is_integer() || c.sign() < 0) {
              row.leaf_nonneg_integer = false;
              break;
            }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

SuiteReport verify_positivity(int n_max) {
  SuiteReport rep;
  rep.suite = "positivity-scan";
  std::size_t scanned = 0;
  for (const LeafTableRow& row : leaf_table(n_max, ShapeFilter::two_row)) {
    ++scanned;
    if (!row.leaf_nonneg_integer)
      push(rep, "two-row-leaf-positivity", pair_str(row.lam, row.mu), false,
           "leaf = " + row.leaf.str());
  }
  push(rep, "scan-summary",
       "two-row pairs scanned=" + std::to_string(scanned), scanned > 0);
  return rep;
}

}  // namespace jackleaf
