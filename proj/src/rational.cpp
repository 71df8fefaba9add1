#include "rthy/rational.hpp"

#include <cctype>

#include "rthy/errors.hpp"

namespace rthy {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::NotReflexiveTransitive: return "NotReflexiveTransitive";
    case ErrorKind::NotRightInvariant: return "NotRightInvariant";
    case ErrorKind::NotLeftInvariant: return "NotLeftInvariant";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::HypothesisMismatch: return "HypothesisMismatch";
    case ErrorKind::WrongHypothesisCount: return "WrongHypothesisCount";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroReference: return "ZeroReference";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadStratumBounds: return "BadStratumBounds";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

static bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(s) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(s) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace rthy
