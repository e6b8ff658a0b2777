#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jackleaf/rational.hpp"

namespace jackleaf {

// Dense univariate polynomial in r over Q. Coefficients stored ascending,
// no trailing zeros; the zero polynomial has an empty coefficient vector
// and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rat& constant);
  UniPoly(long constant) : UniPoly(Rat(constant)) {}
  UniPoly(int constant) : UniPoly(Rat(constant)) {}

  static UniPoly var();  // the polynomial r
  static UniPoly from_coeffs(std::vector<Rat> ascending);
  // a + b*r, the shape every hook takes
  static UniPoly linear(const Rat& a, const Rat& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  Rat coeff(int k) const;
  Rat leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  UniPoly scaled(const Rat& s) const;
  UniPoly monic() const;  // leading coefficient 1; zero stays zero

  // Euclidean division over Q; den must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num,
                                            const UniPoly& den);

  // Monic gcd over Q. UndefinedGcd when both arguments are zero.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  Rat eval(const Rat& x) const;

  std::string str(const std::string& var = "r") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Canonical quotient of univariate polynomials in r: den is monic,
// gcd(num, den) = 1, zero is 0/1. Equality is representational equality,
// which canonicalization makes semantic.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(int n) : RatFun(UniPoly(Rat(n))) {}
  RatFun(long n) : RatFun(UniPoly(Rat(n))) {}
  RatFun(const Rat& x) : RatFun(UniPoly(x)) {}
  RatFun(UniPoly num) : num_(std::move(num)), den_(Rat(1)) {}
  RatFun(const UniPoly& num, const UniPoly& den);  // canonicalizes

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) {
    return !(a == b);
  }

  Rat eval(const Rat& r) const;  // DivisionByZero if den vanishes at r

  std::string str() const;

 private:
  UniPoly num_, den_;
};

}  // namespace jackleaf
