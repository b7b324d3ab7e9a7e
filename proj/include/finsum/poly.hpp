#pragma once

// Sparse bivariate polynomials in u, v with exact integer coefficients,
// and the two-term floor-exponent relation built on them.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "finsum/exact.hpp"

namespace finsum {

class BivarPoly {
 public:
  /// (exponent of u, exponent of v)
  using Exponents = std::pair<std::uint64_t, std::uint64_t>;
  using Terms = std::map<Exponents, Int>;

  BivarPoly() = default;

  static BivarPoly constant(const Int& c);
  static BivarPoly monomial(const Int& coeff, std::uint64_t u_exp, std::uint64_t v_exp);
  static BivarPoly u() { return monomial(1, 1, 0); }
  static BivarPoly v() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of u^i v^j, zero when absent.
  Int coefficient(std::uint64_t u_exp, std::uint64_t v_exp) const;

  /// Adds coeff * u^i v^j in place, dropping the entry if it cancels.
  void add_term(const Int& coeff, std::uint64_t u_exp, std::uint64_t v_exp);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

  /// Human-readable form such as "u*v^2 - 1".
  std::string str() const;

 private:
  Terms terms_;
};

BivarPoly poly_add(const BivarPoly& p, const BivarPoly& q);
BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q);
BivarPoly poly_neg(const BivarPoly& p);

/// Formal derivative with respect to u.
BivarPoly poly_partial_u(const BivarPoly& p);

BivarPoly poly_partial_v(const BivarPoly& p);

Rational poly_eval(const BivarPoly& p, const Rational& u0, const Rational& v0);

/// (u-1) sum_{x=1}^{a-1} u^(x-1) v^floor(bx/a)
///   + (v-1) sum_{y=1}^{b-1} v^(y-1) u^floor(ay/b)
/// Requires a, b > 0 and gcd(a, b) = 1.
BivarPoly two_term_lhs(const Int& a, const Int& b);

/// u^(a-1) v^(b-1) - 1. Requires a, b > 0.
BivarPoly two_term_rhs(const Int& a, const Int& b);

/// Whether the two sides agree as polynomials.
bool verify_two_term(const Int& a, const Int& b);

/// Values obtained by differentiating the two-term relation (a = h, b = k)
/// in u and setting u = v = -1.
struct DerivativeBridge {
  Rational lhs_derivative;  // d/du of the left side at (-1, -1)
  Rational rhs_derivative;  // d/du of the right side at (-1, -1)
  /// -S(k,h) - 2 sum_{x<h} x (-1)^(x + floor(kx/h)) - 2 B1(h,k), from the sums.
  Rational sum_form;
  /// (h - 1)(-1)^(h + k - 1)
  Rational closed_form;
  /// The same chain with S(h,k) in place of S(k,h) in the first term.
  Rational swapped_first_term;

  bool holds() const {
    return lhs_derivative == rhs_derivative && lhs_derivative == sum_form && sum_form == closed_form;
  }
};

/// Requires h, k > 0 and gcd(h, k) = 1.
DerivativeBridge derivative_bridge(const Int& h, const Int& k);

}  // namespace finsum
