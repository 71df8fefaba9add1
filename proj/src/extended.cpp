#include "rthy/extended.hpp"

#include <stdexcept>

namespace rthy {

Extended Extended::parse(std::string_view s) {
  if (s == "+inf" || s == "inf") return pos_inf();
  if (s == "-inf") return neg_inf();
  return Extended(Rational::parse(s));
}

const Rational& Extended::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of infinite Extended");
  return v_;
}

std::string Extended::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return v_.str();
}

}  // namespace rthy
