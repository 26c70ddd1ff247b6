#include "tropcurve/scalar.hpp"

#include <cctype>

namespace trop {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotOnInfiniteEdge: return "NotOnInfiniteEdge";
    case ErrorCode::CannotSubdivideAtInfinity: return "CannotSubdivideAtInfinity";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NonInvertibleZero: return "NonInvertibleZero";
    case ErrorCode::BottomFunction: return "BottomFunction";
    case ErrorCode::IndeterminateSum: return "IndeterminateSum";
    case ErrorCode::DegenerateResult: return "DegenerateResult";
    case ErrorCode::OracleLawViolation: return "OracleLawViolation";
    case ErrorCode::EmptyFiber: return "EmptyFiber";
    case ErrorCode::FiberInconsistency: return "FiberInconsistency";
    case ErrorCode::TrilaterationAmbiguity: return "TrilaterationAmbiguity";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string rat_to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  // Accept an optional leading sign, digits, and at most one '/'.
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash != std::string::npos || i == 0 || i + 1 == text.size())
        throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
      slash = i;
    } else if (c == '-' || c == '+') {
      if (i != 0) throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    }
  }
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
}

const Rat& ExtRat::value() const {
  if (kind_ != Kind::Finite) throw Error(ErrorCode::Internal, "value() on infinite ExtRat");
  return value_;
}

ExtRat ExtRat::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: return ExtRat(Rat(-value_));
  }
  return ExtRat();
}

ExtRat ExtRat::operator+(const ExtRat& other) const {
  if (kind_ == Kind::Finite && other.kind_ == Kind::Finite)
    return ExtRat(Rat(value_ + other.value_));
  if (kind_ == Kind::Finite) return other;
  if (other.kind_ == Kind::Finite) return *this;
  if (kind_ != other.kind_)
    throw Error(ErrorCode::IndeterminateSum, "cannot add +inf and -inf");
  return *this;
}

ExtRat ExtRat::scaled(const Int& n) const {
  if (kind_ == Kind::Finite) return ExtRat(Rat(value_ * Rat(n)));
  if (n == 0) throw Error(ErrorCode::Internal, "0 * infinity is undefined");
  if (n > 0) return *this;
  return -*this;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  auto rank = [](ExtRat::Kind k) {
    switch (k) {
      case ExtRat::Kind::NegInf: return -1;
      case ExtRat::Kind::Finite: return 0;
      case ExtRat::Kind::PosInf: return 1;
    }
    return 0;
  };
  int ra = rank(a.kind_), rb = rank(b.kind_);
  if (ra != rb) return ra <=> rb;
  if (a.kind_ != ExtRat::Kind::Finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ == b.value_) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: return rat_to_string(value_);
  }
  return "";
}

ExtRat ExtRat::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtRat(rat_from_string(text));
}

ExtRat min(const ExtRat& a, const ExtRat& b) { return a <= b ? a : b; }
ExtRat max(const ExtRat& a, const ExtRat& b) { return a >= b ? a : b; }

TropVal::TropVal(const ExtRat& v) : v_(v) {
  if (v.is_pos_inf()) throw Error(ErrorCode::Internal, "+inf is not a tropical scalar");
}

TropVal TropVal::parse(const std::string& text) { return TropVal(ExtRat::parse(text)); }

TropVal trop_add(const TropVal& a, const TropVal& b) {
  return TropVal(max(a.extended(), b.extended()));
}

TropVal trop_mul(const TropVal& a, const TropVal& b) {
  if (a.is_zero() || b.is_zero()) return TropVal::zero();
  return TropVal(Rat(a.finite_value() + b.finite_value()));
}

TropVal trop_pow(const TropVal& a, const Int& n) {
  if (n == 0) return TropVal::one();
  if (a.is_zero()) {
    if (n < 0) throw Error(ErrorCode::NonInvertibleZero, "(-inf)^n undefined for n < 0");
    return TropVal::zero();
  }
  return TropVal(Rat(a.finite_value() * Rat(n)));
}

TropVal collapse_to_boolean(const TropVal& a) {
  return a.is_zero() ? TropVal::zero() : TropVal::one();
}

}  // namespace trop
