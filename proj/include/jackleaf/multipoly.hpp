#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jackleaf/rational.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

// The fixed variable universe. Order here is the canonical variable order.
enum class Var : int { r = 0, y = 1, z = 2, theta = 3 };

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

// Sparse multivariate polynomial over Q in a subset of {r, y, z, theta}.
// Canonical form: variable list sorted and containing only variables that
// actually occur; exponent vectors dense over that list; no zero
// coefficients. Equality of canonical forms is semantic equality.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rat>;

  MultiPoly() = default;  // zero
  MultiPoly(const Rat& constant);
  MultiPoly(int constant) : MultiPoly(Rat(constant)) {}
  MultiPoly(long constant) : MultiPoly(Rat(constant)) {}

  static MultiPoly variable(Var v);
  // a + b*v, e.g. hooks g + l*r
  static MultiPoly linear(const Rat& a, const Rat& b, Var v);
  static MultiPoly from_terms(std::vector<Var> vars, TermMap terms);

  const std::vector<Var>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  int total_degree() const;    // -1 for zero
  int degree_in(Var v) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  // Exact quotient; InexactDivision when the divisor does not divide,
  // DivisionByZero on a zero divisor.
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

  // Simultaneous substitution; unbound variables pass through, bindings for
  // variables absent from the polynomial are ignored.
  MultiPoly subst(const std::map<Var, MultiPoly>& bindings) const;

  // Full evaluation; every occurring variable must be bound.
  Rat eval(const std::map<Var, Rat>& point) const;

  // Conversions for polynomials lying in Q[r].
  bool is_univariate_r() const;
  UniPoly to_unipoly() const;  // InternalInconsistency unless vars ⊆ {r}
  static MultiPoly from_unipoly(const UniPoly& p);

  std::string str() const;  // graded-lex term order, deterministic

 private:
  void canonicalize();
  static void lift(const MultiPoly& a, const MultiPoly& b,
                   std::vector<Var>& vars, TermMap& ta, TermMap& tb);

  std::vector<Var> vars_;  // sorted by Var order
  TermMap terms_;
};

// Graded-lex order on exponent vectors (total degree first, then lex),
// the order used for serialized term lists.
bool grlex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b);

}  // namespace jackleaf
