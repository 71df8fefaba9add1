#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "rthy/rational.hpp"

namespace rthy {

// Rational extended by -inf and +inf, totally ordered.
class Extended {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Extended() = default;
  Extended(const Rational& v) : kind_(Kind::Finite), v_(v) {}  // NOLINT
  Extended(long v) : kind_(Kind::Finite), v_(v) {}             // NOLINT
  static Extended pos_inf() { return Extended(Kind::PosInf); }
  static Extended neg_inf() { return Extended(Kind::NegInf); }
  // Accepts rationals and "+inf", "inf", "-inf".
  static Extended parse(std::string_view s);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  // Only valid when finite.
  const Rational& value() const;
  std::string str() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }

 private:
  explicit Extended(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational v_;
};

}  // namespace rthy
