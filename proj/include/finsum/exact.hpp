#pragma once

// Exact integer and rational arithmetic plus the floor and sawtooth
// primitives that every finite sum in this library is built from.
//
// Int is GMP's mpz_class. Rational wraps mpq_class and is canonical at all
// times: lowest terms, positive denominator, zero stored as 0/1. Because of
// that, operator== is structural equality of (num, den).

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finsum {

using Int = mpz_class;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (zero divisor, non-positive modulus, negative index).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a caller violates a stated hypothesis (coprimality, parity).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT(implicit)

  Rational(const Int& n) : value_(n) {}  // NOLINT(implicit)

  /// num/den reduced to lowest terms. Throws DomainError when den == 0.
  Rational(const Int& num, const Int& den);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
  static Rational parse(std::string_view text);

  const Int& num() const { return value_.get_num(); }
  const Int& den() const { return value_.get_den(); }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  /// "n" when integral, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

/// Integer power with a non-negative exponent.
Rational pow(const Rational& base, std::uint64_t exponent);

/// floor(p / q), rounding toward negative infinity. Throws DomainError if q == 0.
Int floor_div(const Int& p, const Int& q);

/// p - q * floor_div(p, q); lies in [0, q) for q > 0.
Int floor_mod(const Int& p, const Int& q);

/// Greatest integer not exceeding x.
Int floor(const Rational& x);

/// ((x)) = x - floor(x) - 1/2 for non-integral x, 0 at integers.
Rational sawtooth(const Rational& x);

/// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);
bool is_coprime(const Int& a, const Int& b);

bool is_odd(const Int& n);
inline bool is_even(const Int& n) { return !is_odd(n); }

/// (-1)^n, valid for negative n.
int neg_one_pow(const Int& n);

/// Parses a decimal integer with optional sign. Throws std::invalid_argument.
Int parse_int(std::string_view text);

/// Converts to a machine integer, throwing DomainError when out of range.
std::int64_t to_int64(const Int& n);

}  // namespace finsum
