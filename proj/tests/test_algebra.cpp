#include <doctest.h>

#include <random>

#include "jackleaf/json_io.hpp"
#include "jackleaf/multipoly.hpp"
#include "jackleaf/rational.hpp"
#include "jackleaf/unipoly.hpp"

using namespace jackleaf;

namespace {

MultiPoly R() { return MultiPoly::variable(Var::r); }
MultiPoly Y() { return MultiPoly::variable(Var::y); }

MultiPoly random_poly(std::mt19937& rng, int max_terms = 5, int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  MultiPoly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    MultiPoly term(Rat(coef(rng), den(rng)));
    int er = deg(rng), ey = deg(rng);
    for (int i = 0; i < er; ++i) term *= R();
    for (int i = 0; i < ey; ++i) term *= Y();
    p += term;
  }
  return p;
}

UniPoly random_unipoly(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (;;) {
    std::vector<Rat> c(deg(rng) + 1, Rat(0));
    for (auto& x : c) x = Rat(coef(rng));
    UniPoly p = UniPoly::from_coeffs(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(7, 3).str() == "7/3");
  CHECK(Rat::parse("-14/21") == Rat(-2, 3));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("x"), Error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
}

TEST_CASE("poly add/mul basics") {
  CHECK(R() + MultiPoly(1) == MultiPoly::linear(Rat(1), Rat(1), Var::r));

  // (y+1)(y+2r) = y^2 + 2ry + y + 2r
  MultiPoly lhs = (Y() + MultiPoly(1)) * (Y() + MultiPoly(2) * R());
  MultiPoly expect = Y() * Y() + MultiPoly(2) * R() * Y() + Y() +
                     MultiPoly(2) * R();
  CHECK(lhs == expect);

  MultiPoly a = MultiPoly::linear(Rat(1), Rat(1), Var::r);   // 1+r
  MultiPoly b = MultiPoly::linear(Rat(2), Rat(1), Var::r);   // 2+r
  CHECK(MultiPoly::exact_div(a * b, a) == b);
  CHECK_THROWS_AS(MultiPoly::exact_div(b, a), Error);
  CHECK_THROWS_AS(MultiPoly::exact_div(a, MultiPoly(0)), Error);
}

TEST_CASE("poly substitution") {
  // z - 1 with z -> y + 2 + r gives y + r + 1
  MultiPoly p = MultiPoly::variable(Var::z) - MultiPoly(1);
  MultiPoly img = p.subst(
      {{Var::z, Y() + MultiPoly(2) + R()}});
  CHECK(img == Y() + R() + MultiPoly(1));

  // theta + 1/4 with theta -> -(r - 1/2)^2 gives r - r^2
  MultiPoly theta = MultiPoly::variable(Var::theta);
  MultiPoly half = MultiPoly(Rat(1, 2));
  MultiPoly binding = -((R() - half) * (R() - half));
  MultiPoly img2 = (theta + MultiPoly(Rat(1, 4))).subst({{Var::theta, binding}});
  CHECK(img2 == R() - R() * R());

  CHECK(p.subst({}) == p);
  // binding an absent variable is a no-op
  CHECK(p.subst({{Var::y, R()}}) == p);
}

TEST_CASE("ratfun canonicalization") {
  UniPoly r = UniPoly::var();
  // 2r / r = 2
  CHECK(RatFun(r.scaled(Rat(2)), r) == RatFun(2));
  // (2+r)/(1+r) stays put
  RatFun f(UniPoly::linear(Rat(2), Rat(1)), UniPoly::linear(Rat(1), Rat(1)));
  CHECK(f.num() == UniPoly::linear(Rat(2), Rat(1)));
  CHECK(f.den() == UniPoly::linear(Rat(1), Rat(1)));
  // zero
  CHECK(RatFun(UniPoly(), UniPoly::linear(Rat(1), Rat(1))) == RatFun(0));
  CHECK_THROWS_AS(RatFun(r, UniPoly()), Error);
  // denominator normalized monic: (1+r)/(2+2r) = (1/2 + r/2)/(1+r)
  RatFun g(UniPoly::linear(Rat(1), Rat(1)), UniPoly::linear(Rat(2), Rat(2)));
  CHECK(g == RatFun(Rat(1, 2)));
}

TEST_CASE("unipoly gcd") {
  UniPoly r = UniPoly::var();
  UniPoly r2m1 = r * r - UniPoly(1);
  UniPoly rm1 = r - UniPoly(1);
  CHECK(UniPoly::gcd(r2m1, rm1) == rm1);
  CHECK(UniPoly::gcd(UniPoly::linear(Rat(1), Rat(1)),
                     UniPoly::linear(Rat(2), Rat(1))) == UniPoly(1));
  CHECK(UniPoly::gcd(UniPoly(), r.scaled(Rat(3))) == r);
  CHECK_THROWS_AS(UniPoly::gcd(UniPoly(), UniPoly()), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("ratfun cancellation invariance") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly a = random_unipoly(rng);
    UniPoly b = random_unipoly(rng, true);
    UniPoly c = random_unipoly(rng, true);
    CHECK(RatFun(a * c, b * c) == RatFun(a, b));
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p = random_poly(rng);
    MultiPoly q = MultiPoly::from_terms(
        std::vector<Var>(p.vars()), MultiPoly::TermMap(p.terms()));
    CHECK(p == q);
    UniPoly a = random_unipoly(rng);
    UniPoly b = random_unipoly(rng, true);
    RatFun f(a, b);
    CHECK(RatFun(f.num(), f.den()) == f);
  }
}

TEST_CASE("evaluation commutes with structural equality") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    MultiPoly lhs = (a + b) * (a - b);
    MultiPoly rhs = a * a - b * b;
    CHECK(lhs == rhs);
    for (int pt = 0; pt < 20; ++pt) {
      std::map<Var, Rat> point{{Var::r, Rat(num(rng), den(rng))},
                               {Var::y, Rat(num(rng), den(rng))}};
      CHECK(lhs.eval(point) == rhs.eval(point));
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly p = random_poly(rng);
    CHECK(multipoly_from_json(to_json(p)) == p);
    RatFun f(random_unipoly(rng), random_unipoly(rng, true));
    CHECK(ratfun_from_json(to_json(f)) == f);
  }
  // the documented shape
  MultiPoly p = MultiPoly(238) * R();
  Json j = to_json(p);
  CHECK(j["vars"] == Json::array({"r"}));
  CHECK(j["terms"][0]["exp"] == Json::array({1}));
  CHECK(j["terms"][0]["coef"] == "238");
}
