#include <doctest.h>

#include "jackleaf/closedforms.hpp"
#include "jackleaf/stemleaf.hpp"

using namespace jackleaf;

namespace {
MultiPoly R() { return MultiPoly::variable(Var::r); }
MultiPoly Yv() { return MultiPoly::variable(Var::y); }

MultiPoly poly_r(std::vector<long> ascending) {
  MultiPoly out(0);
  MultiPoly power(1);
  for (long c : ascending) {
    out += MultiPoly(Rat(c)) * power;
    power *= R();
  }
  return out;
}
}  // namespace

TEST_CASE("closed leaf fixtures") {
  // gap fixture: (3,2,0,1+r) -> 60+238r+275r^2+90r^3+9r^4
  MultiPoly y1 = MultiPoly::linear(Rat(1), Rat(1), Var::r);
  CHECK(closed_leaf(3, 2, 0, y1) == poly_r({60, 238, 275, 90, 9}));
  // overlap fixture: (3,2,1,0) -> 6r
  CHECK(closed_leaf(3, 2, 1, MultiPoly(0)) == poly_r({0, 6}));
  // d' = 0 collapses to the empty product
  for (int u = 0; u <= 4; ++u)
    for (int m = 0; m <= 3; ++m)
      CHECK(closed_leaf(u, m, m, MultiPoly(0)) == MultiPoly(1));
  // hand-expanded small cases
  CHECK(closed_leaf(1, 1, 0, MultiPoly(0)) == poly_r({0, 3}));
  CHECK(closed_leaf(1, 2, 1, MultiPoly(0)) == poly_r({0, 4}));
  CHECK_THROWS_AS(closed_leaf(2, 1, 2, MultiPoly(0)), Error);
}

TEST_CASE("gap family") {
  CHECK(q_gap(3, 0) == MultiPoly(1));
  for (int d = 0; d <= 5; ++d) CHECK(q_gap(0, d) == phi_prod(d));
  // the first reference leaf from the symbolic family at y = 1+r
  MultiPoly at_y = q_gap(3, 2).subst(
      {{Var::y, MultiPoly::linear(Rat(1), Rat(1), Var::r)}});
  CHECK(at_y == poly_r({60, 238, 275, 90, 9}));
}

TEST_CASE("overlap family") {
  CHECK(p_overlap(3, 2, 1) == poly_r({0, 6}));
  CHECK(p_overlap(4, 2, 2) == MultiPoly(1));
  for (int d = 1; d <= 5; ++d)
    for (int m = 1; m <= d; ++m)
      CHECK(p_overlap(m, d, m) == psi_prod(d - m, m));
  CHECK_THROWS_AS(p_overlap(3, 2, 0), Error);
  CHECK_THROWS_AS(p_overlap(1, 3, 2), Error);
}

TEST_CASE("auxiliary bivariate family") {
  CHECK(m_aux(0, 0) == MultiPoly(1));
  for (int u = 0; u <= 5; ++u) CHECK(m_aux(u, 0) == MultiPoly(1));
  // substitution z -> y+d+r, theta -> -(r-1/2)^2 recovers the gap family
  MultiPoly half(Rat(1, 2));
  MultiPoly theta_img = -((R() - half) * (R() - half));
  MultiPoly z_img = Yv() + MultiPoly(2) + R();
  CHECK(m_aux(3, 2).subst({{Var::z, z_img}, {Var::theta, theta_img}}) ==
        q_gap(3, 2));
}

TEST_CASE("phi and psi products") {
  CHECK(phi_prod(0) == MultiPoly(1));
  CHECK(psi_prod(0, 3) == MultiPoly(1));
  CHECK(phi_prod(1) == (Yv() + MultiPoly(1)) * (Yv() + MultiPoly(2) * R()));
  CHECK(psi_prod_symbolic(1) ==
        (Yv() + MultiPoly(1)) * (MultiPoly(2) * R()));
  CHECK(psi_prod(1, 2) == MultiPoly(6) * R());
}

TEST_CASE("reduced leaf") {
  // u = d: the ratio is symmetric by construction, and at small sizes the
  // division happens to be exact
  ReducedLeaf rl = reduced_leaf({2, 2, 0, Yv()});
  CHECK(rl.leaf == q_gap(2, 2));
  CHECK(rl.divisor == phi_prod(2));
  ReducedLeaf overlap = reduced_leaf({3, 2, 1, MultiPoly(0)});
  CHECK(overlap.divisor == psi_prod(1, 1));
  CHECK_THROWS_AS(reduced_leaf({1, 3, 2, MultiPoly(0)}), Error);
}

TEST_CASE("identity suites pass at small caps") {
  SuiteCaps caps{4, 4, 4};
  for (const std::string& name : identity_suite_names()) {
    SuiteReport rep = identity_suite(name, caps);
    CAPTURE(name);
    CHECK(rep.checks.size() > 0);
    for (const auto& c : rep.checks) {
      CAPTURE(c.identity);
      CAPTURE(c.params);
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(identity_suite("no-such-suite", caps), Error);
  CHECK(identity_suite("all", SuiteCaps{2, 2, 2}).all_pass());
}

TEST_CASE("degenerate boundary of the P-recurrence") {
  SuiteCaps caps{1, 1, 1};
  SuiteReport rep = identity_suite("P-recurrence", caps);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].params == "u=1 d=1 m=1");
  CHECK(rep.checks[0].pass);
}

TEST_CASE("gap formula with m at zero matches the gap family at y = 0") {
  for (int u = 0; u <= 5; ++u)
    for (int d = 0; d <= 5; ++d)
      CHECK(closed_leaf(u, d, 0, MultiPoly(0)) ==
            q_gap(u, d).subst({{Var::y, MultiPoly(0)}}));
}

TEST_CASE("main theorem at small scale") {
  BinomialContext ctx;
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : subpartitions(lam)) {
        if (skew_rows(lam, mu).size() > 2) continue;
        TwoRowData t = two_row_data(lam, mu);
        CAPTURE(lam.str());
        CAPTURE(mu.str());
        RatFun closed(closed_leaf(t.u, t.d, t.m, t.y).to_unipoly());
        CHECK(leaf(lam, mu, ctx) == closed);
      }
}
