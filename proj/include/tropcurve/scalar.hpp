#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "tropcurve/errors.hpp"

namespace trop {

// Exact arbitrary-precision arithmetic backbone. All lengths, offsets,
// function values and slopes in this library are rationals or integers;
// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& text);  // throws ParseError

// Extended rational: Q ∪ {±∞} with the total order −∞ < finite < +∞.
class ExtRat {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRat() : kind_(Kind::Finite), value_(0) {}
  ExtRat(Rat value) : kind_(Kind::Finite), value_(std::move(value)) {}
  ExtRat(int value) : kind_(Kind::Finite), value_(value) {}

  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }
  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Finite value; throws Internal if not finite.
  const Rat& value() const;

  ExtRat operator-() const;
  ExtRat operator+(const ExtRat& other) const;  // throws IndeterminateSum on ∞ + (−∞)
  ExtRat operator-(const ExtRat& other) const { return *this + (-other); }

  // n·x with n a (possibly negative) integer; n = 0 requires x finite.
  ExtRat scaled(const Int& n) const;

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  std::string str() const;
  static ExtRat parse(const std::string& text);  // "p/q" | "p" | "inf" | "-inf"

 private:
  explicit ExtRat(Kind kind) : kind_(kind), value_(0) {}

  Kind kind_;
  Rat value_;
};

ExtRat min(const ExtRat& a, const ExtRat& b);
ExtRat max(const ExtRat& a, const ExtRat& b);

// A tropical scalar: element of T = Q ∪ {−∞} with ⊕ = max and ⊙ = +.
// +∞ is not representable.
class TropVal {
 public:
  TropVal() : v_(Rat(0)) {}
  TropVal(Rat value) : v_(std::move(value)) {}
  TropVal(int value) : v_(Rat(value)) {}
  explicit TropVal(const ExtRat& v);  // throws Internal if v = +∞

  static TropVal zero() { return TropVal(ExtRat::neg_inf()); }  // ⊕-identity −∞
  static TropVal one() { return TropVal(Rat(0)); }              // ⊙-identity 0

  bool is_zero() const { return v_.is_neg_inf(); }
  const ExtRat& extended() const { return v_; }
  const Rat& finite_value() const { return v_.value(); }

  friend bool operator==(const TropVal& a, const TropVal& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const TropVal& a, const TropVal& b) {
    return a.v_ <=> b.v_;
  }

  std::string str() const { return v_.str(); }
  static TropVal parse(const std::string& text);

 private:
  ExtRat v_;
};

TropVal trop_add(const TropVal& a, const TropVal& b);  // a ⊕ b = max
TropVal trop_mul(const TropVal& a, const TropVal& b);  // a ⊙ b = a + b, −∞ absorbing
// a^{⊙n} = n·a; trop_pow(a, −1) is the ⊙-inverse. Throws NonInvertibleZero
// when a = −∞ and n < 0.
TropVal trop_pow(const TropVal& a, const Int& n);

// The semiring homomorphism T → B collapsing every finite value to 0.
TropVal collapse_to_boolean(const TropVal& a);

}  // namespace trop
