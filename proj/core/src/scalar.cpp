#include "hompre/scalar.hpp"

#include <ostream>

#include "hompre/errors.hpp"

namespace hompre {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(std::int64_t value) : value_(static_cast<long>(value)) {}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DivisionByZero("zero denominator");
  value_ = mpq_class(static_cast<long>(numerator), static_cast<long>(denominator));
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_decimal_integer(num)) throw ParseError("malformed rational \"" + std::string(text) + "\"");
  if (num.size() > 1 && (num[0] == '0' || (num[0] == '-' && num[1] == '0')))
    throw ParseError("non-canonical integer \"" + std::string(text) + "\"");
  if (num == "-0") throw ParseError("non-canonical zero \"-0\"");
  mpz_class n(std::string(num), 10);
  if (slash == std::string_view::npos) return Scalar(mpq_class(n));

  const std::string_view den = text.substr(slash + 1);
  if (!is_decimal_integer(den) || den[0] == '-' || den[0] == '0')
    throw ParseError("denominator must be a positive integer in \"" + std::string(text) + "\"");
  mpz_class d(std::string(den), 10);
  if (d == 1) throw ParseError("non-canonical denominator 1 in \"" + std::string(text) + "\"");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw ParseError("\"" + std::string(text) + "\" not in lowest terms");
  mpq_class q(n, d);
  return Scalar(q);
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Scalar::numerator_str() const { return value_.get_num().get_str(); }
std::string Scalar::denominator_str() const { return value_.get_den().get_str(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Scalar(mpq_class(1) / value_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hompre
