#include "jackleaf/rational.hpp"

#include <cctype>
#include <ostream>

namespace jackleaf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::UndefinedGcd: return "UndefinedGcd";
    case Errc::ParseError: return "ParseError";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::BoxOutOfDiagram: return "BoxOutOfDiagram";
    case Errc::NotContained: return "NotContained";
    case Errc::NotTwoRow: return "NotTwoRow";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::EmptySkew: return "EmptySkew";
    case Errc::InvalidOverlap: return "InvalidOverlap";
    case Errc::TooManyParts: return "TooManyParts";
    case Errc::ScaleLimit: return "ScaleLimit";
    case Errc::DegenerateEigenvalue: return "DegenerateEigenvalue";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

namespace {
mpz_class mpz_from_ll(long long n) {
  bool neg = n < 0;
  unsigned long long mag =
      neg ? ~static_cast<unsigned long long>(n) + 1ULL
          : static_cast<unsigned long long>(n);
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  return neg ? mpz_class(-z) : z;
}
}  // namespace

Rat::Rat(long long n) : v_(mpz_from_ll(n)) {}

Rat::Rat(long long num, long long den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(mpz_from_ll(num), mpz_from_ll(den));
  v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  auto check_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string s = text;
  auto slash = s.find('/');
  std::string p = slash == std::string::npos ? s : s.substr(0, slash);
  std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(p) || !check_int(q))
    fail(Errc::ParseError, "bad rational '" + text + "'");
  mpz_class den(q);
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  mpq_class v(mpz_class(p), den);
  v.canonicalize();
  return Rat(v);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace jackleaf
