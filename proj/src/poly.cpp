#include "finsum/poly.hpp"

#include <sstream>

#include "finsum/finite_sums.hpp"

namespace finsum {

namespace {

std::uint64_t exponent_of(const Int& n) {
  if (n < 0 || !mpz_fits_ulong_p(n.get_mpz_t())) throw DomainError("exponent out of range: " + n.get_str());
  return n.get_ui();
}

void require_two_term_args(const Int& a, const Int& b, const char* what) {
  if (a <= 0 || b <= 0) {
    throw DomainError(std::string(what) + ": requires a, b > 0, got (" + a.get_str() + ", " + b.get_str() + ")");
  }
}

}  // namespace

BivarPoly BivarPoly::constant(const Int& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Int& coeff, std::uint64_t u_exp, std::uint64_t v_exp) {
  BivarPoly p;
  p.add_term(coeff, u_exp, v_exp);
  return p;
}

Int BivarPoly::coefficient(std::uint64_t u_exp, std::uint64_t v_exp) const {
  const auto it = terms_.find({u_exp, v_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void BivarPoly::add_term(const Int& coeff, std::uint64_t u_exp, std::uint64_t v_exp) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({u_exp, v_exp}, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  }
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag < 0) mag = -mag;
    const bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) os << mag.get_str() << (bare ? "" : "*");
    bool need_star = false;
    if (e.first > 0) {
      os << "u";
      if (e.first > 1) os << "^" << e.first;
      need_star = true;
    }
    if (e.second > 0) {
      if (need_star) os << "*";
      os << "v";
      if (e.second > 1) os << "^" << e.second;
    }
    first = false;
  }
  return os.str();
}

BivarPoly poly_add(const BivarPoly& p, const BivarPoly& q) { return p + q; }
BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }
BivarPoly poly_neg(const BivarPoly& p) { return -p; }

BivarPoly poly_partial_u(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.first == 0) continue;
    out.add_term(c * Int(static_cast<unsigned long>(e.first)), e.first - 1, e.second);
  }
  return out;
}

BivarPoly poly_partial_v(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.second == 0) continue;
    out.add_term(c * Int(static_cast<unsigned long>(e.second)), e.first, e.second - 1);
  }
  return out;
}

Rational poly_eval(const BivarPoly& p, const Rational& u0, const Rational& v0) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += Rational(c) * pow(u0, e.first) * pow(v0, e.second);
  return acc;
}

BivarPoly two_term_lhs(const Int& a, const Int& b) {
  require_two_term_args(a, b, "two_term_lhs");
  if (!is_coprime(a, b)) {
    throw PreconditionError("two_term_lhs: requires gcd(a, b) = 1, got (" + a.get_str() + ", " + b.get_str() + ")");
  }
  BivarPoly first;
  for (Int x = 1; x < a; ++x) first.add_term(1, exponent_of(x - 1), exponent_of(floor_div(b * x, a)));
  BivarPoly second;
  for (Int y = 1; y < b; ++y) second.add_term(1, exponent_of(floor_div(a * y, b)), exponent_of(y - 1));
  const BivarPoly one = BivarPoly::constant(1);
  return (BivarPoly::u() - one) * first + (BivarPoly::v() - one) * second;
}

BivarPoly two_term_rhs(const Int& a, const Int& b) {
  require_two_term_args(a, b, "two_term_rhs");
  return BivarPoly::monomial(1, exponent_of(a - 1), exponent_of(b - 1)) - BivarPoly::constant(1);
}

bool verify_two_term(const Int& a, const Int& b) { return two_term_lhs(a, b) == two_term_rhs(a, b); }

DerivativeBridge derivative_bridge(const Int& h, const Int& k) {
  const Rational minus_one = -1;
  DerivativeBridge out;
  out.lhs_derivative = poly_eval(poly_partial_u(two_term_lhs(h, k)), minus_one, minus_one);
  out.rhs_derivative = poly_eval(poly_partial_u(two_term_rhs(h, k)), minus_one, minus_one);

  // h * mixed_sum(k, h) is sum_{x=1}^{h-1} x (-1)^(x + floor(kx/h)).
  const Rational weighted = Rational(h) * mixed_sum(k, h);
  const Rational tail = Rational(-2) * weighted - Rational(2) * b1_sum(h, k);
  out.sum_form = -hardy_sum(HardyKind::S, k, h) + tail;
  out.swapped_first_term = -hardy_sum(HardyKind::S, h, k) + tail;
  out.closed_form = Rational(h - 1) * Rational(neg_one_pow(h + k - 1));
  return out;
}

}  // namespace finsum
