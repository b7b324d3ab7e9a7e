#include "finsum/exact.hpp"

#include <ostream>

namespace finsum {

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + std::string(text));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.value_ = -r.value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result = 1;
  Rational square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Int floor_div(const Int& p, const Int& q) {
  if (q == 0) throw DomainError("floor_div by zero");
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return out;
}

Int floor_mod(const Int& p, const Int& q) {
  if (q == 0) throw DomainError("floor_mod by zero");
  Int out;
  mpz_fdiv_r(out.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return out;
}

Int floor(const Rational& x) { return floor_div(x.num(), x.den()); }

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return 0;
  return x - Rational(floor(x)) - Rational(1, 2);
}

Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool is_coprime(const Int& a, const Int& b) { return gcd(a, b) == 1; }

bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

int neg_one_pow(const Int& n) { return is_odd(n) ? -1 : 1; }

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

std::int64_t to_int64(const Int& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) throw DomainError("integer out of machine range: " + n.get_str());
  return static_cast<std::int64_t>(n.get_si());
}

}  // namespace finsum
