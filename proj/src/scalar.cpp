#include "hombra/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hombra/errors.hpp"

namespace hombra {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw DivisionByZero();
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  // mpz_class rejects a leading '+'.
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpq_class value;
  value.get_num() = mpz_class(num_str, 10);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    value.get_den() = mpz_class(std::string(den), 10);
    if (sgn(value.get_den()) == 0) throw DivisionByZero();
  }
  value.canonicalize();
  return Scalar(std::move(value));
}

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(mpq_class(1) / value_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

Scalar pow(Scalar base, long exponent) {
  if (exponent < 0) {
    base = base.inverse();
    exponent = -exponent;
  }
  Scalar result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hombra
