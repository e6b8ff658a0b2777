#include "jackleaf/json_io.hpp"

#include <algorithm>

namespace jackleaf {

Json to_json(const MultiPoly& p) {
  Json j;
  j["vars"] = Json::array();
  for (Var v : p.vars()) j["vars"].push_back(var_name(v));
  std::vector<const MultiPoly::TermMap::value_type*> ordered;
  for (const auto& t : p.terms()) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return grlex_less(a->first, b->first);
  });
  j["terms"] = Json::array();
  for (const auto* t : ordered) {
    Json term;
    term["exp"] = t->first;
    term["coef"] = t->second.str();
    j["terms"].push_back(std::move(term));
  }
  return j;
}

MultiPoly multipoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    fail(Errc::ParseError, "polynomial JSON needs 'vars' and 'terms'");
  std::vector<Var> vars;
  for (const auto& name : j.at("vars")) {
    auto v = var_from_name(name.get<std::string>());
    if (!v) fail(Errc::ParseError, "unknown variable in polynomial JSON");
    vars.push_back(*v);
  }
  MultiPoly::TermMap terms;
  for (const auto& term : j.at("terms")) {
    MultiPoly::Exponents e = term.at("exp").get<MultiPoly::Exponents>();
    if (e.size() != vars.size())
      fail(Errc::ParseError, "exponent vector length mismatch");
    Rat c = Rat::parse(term.at("coef").get<std::string>());
    auto [it, fresh] = terms.emplace(std::move(e), c);
    if (!fresh) it->second += c;
  }
  return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

Json to_json(const UniPoly& p) {
  return to_json(MultiPoly::from_unipoly(p));
}

Json to_json(const RatFun& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(Errc::ParseError, "rational function JSON needs 'num' and 'den'");
  return RatFun(multipoly_from_json(j.at("num")).to_unipoly(),
                multipoly_from_json(j.at("den")).to_unipoly());
}

}  // namespace jackleaf
