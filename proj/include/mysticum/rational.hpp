#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace mysticum {

using BigInt = mpz_class;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every operation returns a
/// canonical value, so structural equality is numeric equality.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p" or "p/q".
  static Rat parse(std::string_view text);

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rat abs() const;
  Rat reciprocal() const;

  double to_double() const { return value_.get_d(); }
  long double to_long_double() const;

  /// "p" for integers, otherwise "p/q".
  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& gmp() const { return value_; }

 private:
  explicit Rat(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

/// True iff the value is the square of a rational; on success stores the root.
bool rational_sqrt(const Rat& value, Rat& root);

}  // namespace mysticum
