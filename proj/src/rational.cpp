#include "mysticum/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mysticum {

Rat::Rat(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(text), 10));
    return Rat(BigInt(std::string(text.substr(0, slash)), 10),
               BigInt(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
  }
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
  return Rat(mpq_class(1) / value_);
}

long double Rat::to_long_double() const {
  // Scale so the quotient of two large integers stays in range and keeps
  // the extra mantissa bits of long double.
  const long nbits = static_cast<long>(mpz_sizeinbase(num().get_mpz_t(), 2));
  const long dbits = static_cast<long>(mpz_sizeinbase(den().get_mpz_t(), 2));
  const long shift = 80 - (nbits - dbits);
  BigInt scaled = num();
  BigInt d = den();
  if (shift > 0) scaled <<= static_cast<mp_bitcnt_t>(shift);
  else d <<= static_cast<mp_bitcnt_t>(-shift);
  BigInt q = scaled / d;
  // q has roughly 80 significant bits; split into two doubles-worth of limbs.
  const BigInt hi = q >> 40;
  const BigInt lo = q - (hi << 40);
  const long double v = static_cast<long double>(hi.get_d()) * std::ldexp(1.0L, 40) +
                        static_cast<long double>(lo.get_d());
  return std::ldexp(v, static_cast<int>(-shift));
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  value_ /= o.value_;
  return *this;
}
Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

bool rational_sqrt(const Rat& value, Rat& root) {
  if (value.sign() < 0) return false;
  if (!mpz_perfect_square_p(value.num().get_mpz_t()) ||
      !mpz_perfect_square_p(value.den().get_mpz_t()))
    return false;
  root = Rat(sqrt(value.num()), sqrt(value.den()));
  return true;
}

}  // namespace mysticum
