#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "jackleaf/error.hpp"

namespace jackleaf {

// Exact rational number. Canonical form throughout: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Backed by GMP; the wrapper pins the invariants and
// the "p/q" decimal text form used by the JSON layer.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<long>(n)) {}
  Rat(long long n);
  Rat(long long num, long long den);

  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "p" or "p/q" with optional sign. ParseError on malformed input,
  // DivisionByZero on q = 0.
  static Rat parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }

  std::string str() const;  // "p" or "p/q" (q omitted when 1)

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

}  // namespace jackleaf
