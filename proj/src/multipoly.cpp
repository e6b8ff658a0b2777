#include "jackleaf/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace jackleaf {

const char* var_name(Var v) {
  switch (v) {
    case Var::r: return "r";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::theta: return "theta";
  }
  return "?";
}

std::optional<Var> var_from_name(const std::string& name) {
  if (name == "r") return Var::r;
  if (name == "y") return Var::y;
  if (name == "z") return Var::z;
  if (name == "theta" || name == "θ") return Var::theta;
  return std::nullopt;
}

bool grlex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(const Rat& constant) {
  if (!constant.is_zero()) terms_[{}] = constant;
}

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly p;
  p.vars_ = {v};
  p.terms_[{1}] = Rat(1);
  return p;
}

MultiPoly MultiPoly::linear(const Rat& a, const Rat& b, Var v) {
  MultiPoly p;
  p.vars_ = {v};
  if (!a.is_zero()) p.terms_[{0}] = a;
  if (!b.is_zero()) p.terms_[{1}] = b;
  p.canonicalize();
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Var> vars, TermMap terms) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first ==
                                    Exponents(vars_.size(), 0));
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant())
    fail(Errc::InternalInconsistency, "polynomial is not constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

void MultiPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  // drop variables with zero exponent everywhere
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::find(used.begin(), used.end(), false) == used.end()) return;
  std::vector<Var> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(nv.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt[std::move(ne)] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

void MultiPoly::lift(const MultiPoly& a, const MultiPoly& b,
                     std::vector<Var>& vars, TermMap& ta, TermMap& tb) {
  vars.clear();
  std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
             std::back_inserter(vars));
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto remap = [&vars](const MultiPoly& p, TermMap& out) {
    std::vector<std::size_t> pos(p.vars_.size());
    for (std::size_t i = 0; i < p.vars_.size(); ++i)
      pos[i] = static_cast<std::size_t>(
          std::find(vars.begin(), vars.end(), p.vars_[i]) - vars.begin());
    for (const auto& [e, c] : p.terms_) {
      Exponents ne(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      out[std::move(ne)] = c;
    }
  };
  remap(a, ta);
  remap(b, tb);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  std::vector<Var> vars;
  MultiPoly::TermMap ta, tb;
  MultiPoly::lift(a, b, vars, ta, tb);
  for (const auto& [e, c] : tb) {
    auto [it, fresh] = ta.emplace(e, c);
    if (!fresh) it->second += c;
  }
  return MultiPoly::from_terms(std::move(vars), std::move(ta));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  std::vector<Var> vars;
  MultiPoly::TermMap ta, tb;
  MultiPoly::lift(a, b, vars, ta, tb);
  MultiPoly::TermMap out;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      MultiPoly::Exponents e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.emplace(std::move(e), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  return MultiPoly::from_terms(std::move(vars), std::move(out));
}

MultiPoly MultiPoly::exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MultiPoly();
  std::vector<Var> vars;
  TermMap ta, tb;
  lift(a, b, vars, ta, tb);
  // lex-leading term of the divisor (map order is lex on exponents)
  const auto& ltb = *tb.rbegin();
  TermMap rem = ta, quot;
  while (!rem.empty()) {
    const auto& lta = *rem.rbegin();
    Exponents qe(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      qe[i] = lta.first[i] - ltb.first[i];
      if (qe[i] < 0)
        fail(Errc::InexactDivision, "divisor does not divide exactly");
    }
    Rat qc = lta.second / ltb.second;
    quot[qe] = qc;
    for (const auto& [e, c] : tb) {
      Exponents pe(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) pe[i] = qe[i] + e[i];
      auto [it, fresh] = rem.emplace(pe, -(qc * c));
      if (!fresh) {
        it->second -= qc * c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  return from_terms(std::move(vars), std::move(quot));
}

MultiPoly MultiPoly::subst(const std::map<Var, MultiPoly>& bindings) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto bound = bindings.find(vars_[i]);
      MultiPoly base = bound != bindings.end() ? bound->second
                                               : MultiPoly::variable(vars_[i]);
      for (int k = 0; k < e[i]; ++k) term *= base;
    }
    out += term;
  }
  return out;
}

Rat MultiPoly::eval(const std::map<Var, Rat>& point) const {
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it == point.end())
        fail(Errc::InternalInconsistency,
             std::string("unbound variable ") + var_name(vars_[i]));
      for (int k = 0; k < e[i]; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

bool MultiPoly::is_univariate_r() const {
  return vars_.empty() || (vars_.size() == 1 && vars_[0] == Var::r);
}

UniPoly MultiPoly::to_unipoly() const {
  if (!is_univariate_r())
    fail(Errc::InternalInconsistency, "polynomial is not univariate in r");
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : terms_) {
    int k = vars_.empty() ? 0 : e[0];
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, Rat(0));
    coeffs[k] = c;
  }
  return UniPoly::from_coeffs(std::move(coeffs));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p) {
  MultiPoly out;
  out.vars_ = {Var::r};
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) out.terms_[{k}] = p.coeff(k);
  out.canonicalize();
  return out;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::vector<const TermMap::value_type*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) {
              return grlex_less(a->first, b->first);
            });
  std::string out;
  for (const auto* t : ordered) {
    const auto& [e, c] = *t;
    bool neg = c.sign() < 0;
    Rat mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(vars_[i]);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rat(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace jackleaf
