#include <doctest.h>

#include <random>
#include <set>

#include "jackleaf/partition.hpp"

using namespace jackleaf;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

Partition random_partition(std::mt19937& rng, int max_size = 10) {
  std::uniform_int_distribution<int> size(0, max_size);
  int n = size(rng);
  auto all = partitions_of(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}
}  // namespace

TEST_CASE("parsing") {
  CHECK(P("7,3,3,1").parts() == std::vector<int>{7, 3, 3, 1});
  CHECK(P("").empty());
  CHECK(P("4,3,1,0,0") == P("4,3,1"));
  CHECK_THROWS_AS(P("1,2"), Error);
  CHECK_THROWS_AS(P("1,0,2"), Error);
  CHECK_THROWS_AS(P("a,2"), Error);
  CHECK_THROWS_AS(P("3,-1"), Error);
  CHECK(P("7,3,3,1").str() == "7,3,3,1");
  CHECK(P("").str() == "");
}

TEST_CASE("containment") {
  CHECK(P("7,3,3,1").contains(P("4,3,1,1")));
  CHECK(P("2").contains(P("2")));
  CHECK_FALSE(P("2").contains(P("1,1")));
  CHECK(P("6,5,3,1").contains(P("6,2,1,1")));
}

TEST_CASE("hooks") {
  SUBCASE("single box") {
    BoxHooks h = box_hooks(P("1"), Box{1, 1});
    CHECK(h.arm == 0);
    CHECK(h.leg == 0);
    CHECK(h.lower == MultiPoly::variable(Var::r));
    CHECK(h.upper == MultiPoly(1));
  }
  SUBCASE("inside 7,3,3,1") {
    BoxHooks h = box_hooks(P("7,3,3,1"), Box{1, 3});
    CHECK(h.arm == 4);
    CHECK(h.leg == 2);
    CHECK(h.lower == MultiPoly::linear(Rat(4), Rat(3), Var::r));
    CHECK(h.upper == MultiPoly::linear(Rat(5), Rat(2), Var::r));
  }
  SUBCASE("corner of 2,1") {
    BoxHooks h = box_hooks(P("2,1"), Box{1, 1});
    CHECK(h.arm == 1);
    CHECK(h.leg == 1);
    CHECK(h.lower == MultiPoly::linear(Rat(1), Rat(2), Var::r));
    CHECK(h.upper == MultiPoly::linear(Rat(2), Rat(1), Var::r));
  }
  CHECK_THROWS_AS(box_hooks(P("2,1"), Box{2, 2}), Error);
}

TEST_CASE("conjugation duality arm(i,j) = leg'(j,i)") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    Partition lam = random_partition(rng);
    Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.length(); ++i)
      for (int j = 1; j <= lam.part(i); ++j) {
        CHECK(arm_length(lam, Box{i, j}) == leg_length(conj, Box{j, i}));
        CHECK(leg_length(lam, Box{i, j}) == arm_length(conj, Box{j, i}));
      }
  }
}

TEST_CASE("induced decomposition, worked example") {
  DecompLabels dec = induced_decomposition(P("8,7,3,3,1"), P("8,4,3,1,1"));
  auto row_string = [&](int i, int len) {
    std::string s;
    for (int j = 1; j <= len; ++j)
      s += static_cast<char>(dec.labels.at(Box{i, j}));
    return s;
  };
  CHECK(row_string(1, 8) == "NCCNCCCN");
  CHECK(row_string(2, 7) == "RJJRSSS");
  CHECK(row_string(3, 3) == "NCC");
  CHECK(row_string(4, 3) == "RSS");
  CHECK(row_string(5, 1) == "N");
}

TEST_CASE("induced decomposition, degenerate cases") {
  DecompLabels all_n = induced_decomposition(P("3,1"), P("3,1"));
  for (const auto& [b, l] : all_n.labels) CHECK(l == BoxLabel::N);

  DecompLabels rs = induced_decomposition(P("2"), P("1"));
  CHECK(rs.labels.at(Box{1, 1}) == BoxLabel::R);
  CHECK(rs.labels.at(Box{1, 2}) == BoxLabel::S);

  CHECK_THROWS_AS(induced_decomposition(P("2"), P("1,1")), Error);
}

TEST_CASE("decomposition partitions the diagram") {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Partition& mu : subpartitions(lam)) {
        DecompLabels dec = induced_decomposition(lam, mu);
        CHECK(static_cast<int>(dec.labels.size()) == lam.size());
        auto skew = skew_boxes(lam, mu);
        std::set<Box> s_set(skew.begin(), skew.end());
        for (const auto& [b, l] : dec.labels) {
          CHECK((l == BoxLabel::S) == s_set.contains(b));
          if (l == BoxLabel::J) {
            // J boxes share a row and a column with skew boxes
            bool row_hit = false, col_hit = false;
            for (const Box& s : skew) {
              row_hit |= s.row == b.row;
              col_hit |= s.col == b.col;
            }
            CHECK(row_hit);
            CHECK(col_hit);
          }
        }
      }
    }
  }
}

TEST_CASE("critical data") {
  SUBCASE("table fixture, gap") {
    CriticalData cd = critical_data(P("7,3,3,1"), P("4,3,1,1"));
    REQUIRE(cd.xstar.has_value());
    CHECK(*cd.xstar == Box{1, 3});
    CHECK(cd.y == MultiPoly::linear(Rat(1), Rat(1), Var::r));
  }
  SUBCASE("table fixture, overlap") {
    CriticalData cd = critical_data(P("6,5,3,1"), P("6,2,1,1"));
    REQUIRE(cd.xstar.has_value());
    CHECK(*cd.xstar == Box{2, 2});
    CHECK(cd.y == MultiPoly(0));
  }
  SUBCASE("empty skew") {
    CriticalData cd = critical_data(P("3,2"), P("3,2"));
    CHECK_FALSE(cd.xstar.has_value());
    CHECK(cd.y == MultiPoly(0));
  }
}

TEST_CASE("two-row data") {
  TwoRowData t1 = two_row_data(P("7,3,3,1"), P("4,3,1,1"));
  CHECK(t1.u == 3);
  CHECK(t1.d == 2);
  CHECK(t1.m == 0);
  CHECK(t1.y == MultiPoly::linear(Rat(1), Rat(1), Var::r));

  TwoRowData t2 = two_row_data(P("6,5,3,1"), P("6,2,1,1"));
  CHECK(t2.u == 3);
  CHECK(t2.d == 2);
  CHECK(t2.m == 1);
  CHECK(t2.y == MultiPoly(0));

  TwoRowData single = two_row_data(P("3"), P("1"));
  CHECK(single.u == 2);
  CHECK(single.d == 0);
  CHECK(single.m == 0);
  CHECK(single.y == MultiPoly(0));

  TwoRowData empty = two_row_data(P("2,2"), P("2,2"));
  CHECK(empty.u == 0);
  CHECK(empty.d == 0);

  CHECK_THROWS_AS(two_row_data(P("3,2,1"), P("1")), Error);
}

TEST_CASE("two-row invariants on enumerated shapes") {
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Partition& mu : subpartitions(lam)) {
        auto rows = skew_rows(lam, mu);
        if (rows.size() > 2) continue;
        TwoRowData t = two_row_data(lam, mu);
        DecompLabels dec = induced_decomposition(lam, mu);
        auto j = dec.with_label(BoxLabel::J);
        if (rows.size() == 2) {
          // J sits in one row and has d - m boxes
          CHECK(static_cast<int>(j.size()) == t.d - t.m);
          for (const Box& b : j) CHECK(b.row == j.front().row);
          // m > 0 forces successive rows
          if (t.m > 0) CHECK(rows[1] == rows[0] + 1);
          if (t.d > 0) CHECK(t.m <= std::min(t.u, t.d));
        } else {
          CHECK(j.empty());
        }
      }
    }
  }
}

TEST_CASE("two-row data is translation invariant") {
  // one abstract shape (u=2, d=2, m=0, column gap 1, adjacent rows)
  // realized at three positions
  TwoRowData a = two_row_data(P("5,2"), P("3"));
  TwoRowData b = two_row_data(P("6,3,1"), P("4,1,1"));
  TwoRowData c = two_row_data(P("6,6,3,1"), P("6,4,1,1"));
  for (const TwoRowData* t : {&b, &c}) {
    CHECK(a.u == t->u);
    CHECK(a.d == t->d);
    CHECK(a.m == t->m);
    CHECK(a.y == t->y);
  }

  // exhaustively: group every two-row realization with |lambda| <= 8 by its
  // skew box set shifted to the origin; each group must share (u,d,m,y)
  std::map<std::vector<Box>, TwoRowData> groups;
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : subpartitions(lam)) {
        auto rows = skew_rows(lam, mu);
        if (rows.empty() || rows.size() > 2) continue;
        auto boxes = skew_boxes(lam, mu);
        int min_row = boxes.front().row, min_col = boxes.front().col;
        for (const Box& bx : boxes) {
          min_row = std::min(min_row, bx.row);
          min_col = std::min(min_col, bx.col);
        }
        for (Box& bx : boxes) {
          bx.row -= min_row - 1;
          bx.col -= min_col - 1;
        }
        TwoRowData t = two_row_data(lam, mu);
        auto [it, fresh] = groups.emplace(std::move(boxes), t);
        if (!fresh) {
          CAPTURE(lam.str());
          CAPTURE(mu.str());
          CHECK(it->second.u == t.u);
          CHECK(it->second.d == t.d);
          CHECK(it->second.m == t.m);
          CHECK(it->second.y == t.y);
        }
      }
  CHECK(groups.size() > 30);
}

TEST_CASE("covers") {
  auto removed = covers_between(P(""), P("2,1"),
                                CoverDirection::remove_from_lam);
  CHECK(removed == std::vector<Partition>{P("1,1"), P("2")});
  auto added = covers_between(P(""), P("2,1"), CoverDirection::add_to_mu);
  CHECK(added == std::vector<Partition>{P("1")});
  CHECK(covers_between(P("2,1"), P("2,1"), CoverDirection::remove_from_lam)
            .empty());
  CHECK(covers_between(P("2,1"), P("2,1"), CoverDirection::add_to_mu).empty());
  CHECK_THROWS_AS(covers_between(P("3"), P("2"), CoverDirection::add_to_mu),
                  Error);
}

TEST_CASE("render") {
  CHECK(render_decomposition(P("2"), P("1")) == "RS");
  CHECK(render_decomposition(P("1"), P("1")) == "N");
  CHECK(render_decomposition(P("7,3,3,1"), P("4,3,1,1")) ==
        "RJ*RSSS\nNCC\nRSS\nN");
}

TEST_CASE("partition enumeration helpers") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);  // 4, 31, 22
  CHECK(partitions_of(0).size() == 1);
  CHECK(subpartitions(P("2,1")).size() == 5);  // (), 1, 11, 2, 21
  // decreasing lex, the order the basis-change code relies on
  auto p4 = partitions_of(4);
  for (std::size_t i = 1; i < p4.size(); ++i) CHECK(p4[i] < p4[i - 1]);
  CHECK(p4.front() == P("4"));
  CHECK(p4.back() == P("1,1,1,1"));
}
