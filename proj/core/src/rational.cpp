#include "elliptica/rational.hpp"

#include <cctype>

#include "elliptica/error.hpp"

namespace elliptica {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kStructural: return "structural error";
    case ErrorKind::kContextMismatch: return "context mismatch";
    case ErrorKind::kNotHomogeneous: return "not homogeneous";
    case ErrorKind::kInvalidContext: return "invalid graded context";
    case ErrorKind::kInvalidPresentation: return "invalid presentation";
    case ErrorKind::kInvalidDegreeType: return "invalid degree type";
    case ErrorKind::kInconsistentDegreeType: return "inconsistent degree type";
    case ErrorKind::kDegeneratePresentation: return "degenerate presentation";
    case ErrorKind::kPrecondition: return "precondition violation";
    case ErrorKind::kNoEllipticSample: return "no elliptic sample found";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kOutOfRange: return "out of range";
    case ErrorKind::kInternal: return "internal invariant violated";
  }
  return "unknown error";
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw Error(ErrorKind::kStructural, "zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kStructural, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw Error(ErrorKind::kParse, "malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (negative) n = -n;
  return Rational(n, d);
}

}  // namespace elliptica
