#include "jackleaf/unipoly.hpp"

#include <algorithm>

namespace jackleaf {

UniPoly::UniPoly(const Rat& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly UniPoly::var() {
  UniPoly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rat> ascending) {
  UniPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

UniPoly UniPoly::linear(const Rat& a, const Rat& b) {
  return from_coeffs({a, b});
}

bool UniPoly::is_one() const {
  return c_.size() == 1 && c_[0] == Rat(1);
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

Rat UniPoly::leading() const {
  return c_.empty() ? Rat(0) : c_.back();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly p;
  p.c_.reserve(c_.size());
  for (const auto& x : c_) p.c_.push_back(-x);
  return p;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly p;
  p.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) p.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) p.c_[i] += b.c_[i];
  p.trim();
  return p;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  p.trim();
  return p;
}

UniPoly UniPoly::scaled(const Rat& s) const {
  if (s.is_zero()) return UniPoly();
  UniPoly p;
  p.c_.reserve(c_.size());
  for (const auto& x : c_) p.c_.push_back(x * s);
  return p;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num,
                                            const UniPoly& den) {
  if (den.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  UniPoly q, rem = num;
  const int dd = den.degree();
  const Rat lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rat c = rem.leading() / lead;
    // rem -= c * r^k * den
    std::vector<Rat> qc(static_cast<std::size_t>(k) + 1, Rat(0));
    qc[k] = c;
    UniPoly shift = UniPoly::from_coeffs(std::move(qc));
    q += shift;
    rem -= shift * den;
  }
  return {q, rem};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero())
    fail(Errc::UndefinedGcd, "gcd(0, 0) is undefined");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly rem = divmod(x, y).second;
    x = y;
    y = rem.monic();
  }
  return x.monic();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    Rat c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rat mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string m;
    if (k == 0) {
      m = mag.str();
    } else {
      std::string pw = k == 1 ? var : var + "^" + std::to_string(k);
      m = mag == Rat(1) ? pw : mag.str() + "*" + pw;
    }
    out += m;
  }
  return out;
}

RatFun::RatFun(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero())
    fail(Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly(Rat(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num, den);
  UniPoly n = UniPoly::divmod(num, g).first;
  UniPoly d = UniPoly::divmod(den, g).first;
  Rat lead = d.leading();
  num_ = n.scaled(Rat(1) / lead);
  den_ = d.scaled(Rat(1) / lead);
}

RatFun RatFun::operator-() const {
  RatFun f;
  f.num_ = -num_;
  f.den_ = den_;
  return f;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero())
    fail(Errc::DivisionByZero, "rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFun::eval(const Rat& r) const {
  Rat d = den_.eval(r);
  if (d.is_zero())
    fail(Errc::DivisionByZero, "denominator vanishes at the given point");
  return num_.eval(r) / d;
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace jackleaf
