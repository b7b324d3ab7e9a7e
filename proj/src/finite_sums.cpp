#include "finsum/finite_sums.hpp"

#include <string>
#include <vector>

namespace finsum {

namespace {

void require_positive_modulus(const Int& k, const char* what) {
  if (k <= 0) throw DomainError(std::string(what) + ": modulus k must be positive, got " + k.get_str());
}

void require_coprime(const Int& h, const Int& k, const char* what) {
  if (!is_coprime(h, k)) {
    throw PreconditionError(std::string(what) + ": requires gcd(h, k) = 1, got (" + h.get_str() + ", " +
                            k.get_str() + ")");
  }
}

// Walks j = 1 .. k-1 and exposes floor(hj/k), hj mod k and their parities
// without recomputing the products. The state is updated incrementally:
// h = k*step_q + step_r, so hj advances by step_q plus a carry.
class FloorWalk {
 public:
  FloorWalk(const Int& h, const Int& k)
      : k_(k), step_q_(floor_div(h, k)), step_r_(floor_mod(h, k)), step_q_odd_(is_odd(step_q_)) {
    q_ = step_q_;
    r_ = step_r_;
    q_odd_ = step_q_odd_;
  }

  bool done() const { return j_ >= k_; }

  void advance() {
    ++j_;
    j_odd_ = !j_odd_;
    r_ += step_r_;
    q_ += step_q_;
    bool flip = step_q_odd_;
    if (r_ >= k_) {
      r_ -= k_;
      ++q_;
      flip = !flip;
    }
    if (flip) q_odd_ = !q_odd_;
  }

  const Int& j() const { return j_; }
  const Int& quotient() const { return q_; }
  const Int& remainder() const { return r_; }
  bool j_odd() const { return j_odd_; }
  bool quotient_odd() const { return q_odd_; }

 private:
  Int k_;
  Int step_q_;
  Int step_r_;
  bool step_q_odd_;
  Int j_ = 1;
  Int q_;
  Int r_;
  bool j_odd_ = true;
  bool q_odd_ = false;
};

template <typename Fn>
void walk(const Int& h, const Int& k, Fn&& fn) {
  for (FloorWalk w(h, k); !w.done(); w.advance()) fn(w);
}

// 2k * ((hj/k)) for the current j; zero when k divides hj.
Int scaled_saw_hj(const FloorWalk& w, const Int& k) {
  if (w.remainder() == 0) return 0;
  return 2 * w.remainder() - k;
}

// 2k * ((j/k)); j never hits a multiple of k in 1 .. k-1.
Int scaled_saw_j(const FloorWalk& w, const Int& k) { return 2 * w.j() - k; }

void add_signed(Int& acc, bool negative, const Int& term) {
  if (negative) {
    acc -= term;
  } else {
    acc += term;
  }
}

}  // namespace

std::string_view to_string(HardyKind kind) {
  switch (kind) {
    case HardyKind::S: return "S";
    case HardyKind::S1: return "s1";
    case HardyKind::S2: return "s2";
    case HardyKind::S3: return "s3";
    case HardyKind::S4: return "s4";
    case HardyKind::S5: return "s5";
  }
  return "?";
}

std::string_view to_string(ParityClass parity) {
  switch (parity) {
    case ParityClass::BothOdd: return "BothOdd";
    case ParityClass::HOddKEven: return "HOddKEven";
    case ParityClass::HEvenKOdd: return "HEvenKOdd";
  }
  return "?";
}

Rational dedekind_naive(const Int& h, const Int& k) {
  require_positive_modulus(k, "dedekind_naive");
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) { acc += scaled_saw_hj(w, k) * scaled_saw_j(w, k); });
  return Rational(acc, 4 * k * k);
}

Rational dedekind_fast(const Int& h, const Int& k) {
  require_positive_modulus(k, "dedekind_fast");
  require_coprime(h, k, "dedekind_fast");
  // s(h, k) = R(h, k) - s(k mod h, h) with
  // R(h, k) = -1/4 + (h^2 + k^2 + 1) / (12hk); s(0, 1) = 0.
  Int a = floor_mod(h, k);
  Int m = k;
  Rational acc = 0;
  bool negate = false;
  while (m > 1) {
    Rational step(a * a + m * m + 1, 12 * a * m);
    step -= Rational(1, 4);
    if (negate) {
      acc -= step;
    } else {
      acc += step;
    }
    negate = !negate;
    Int next = floor_mod(m, a);
    m = a;
    a = std::move(next);
  }
  return acc;
}

Rational hardy_sum(HardyKind kind, const Int& h, const Int& k) {
  require_positive_modulus(k, "hardy_sum");
  Int acc = 0;
  switch (kind) {
    case HardyKind::S:
      // (-1)^(j + 1 + q)
      walk(h, k, [&](const FloorWalk& w) { acc += (w.j_odd() != w.quotient_odd()) ? 1 : -1; });
      return Rational(acc);
    case HardyKind::S1:
      walk(h, k, [&](const FloorWalk& w) { add_signed(acc, w.quotient_odd(), scaled_saw_j(w, k)); });
      return Rational(acc, 2 * k);
    case HardyKind::S2:
      walk(h, k, [&](const FloorWalk& w) {
        add_signed(acc, w.j_odd(), scaled_saw_j(w, k) * scaled_saw_hj(w, k));
      });
      return Rational(acc, 4 * k * k);
    case HardyKind::S3:
      walk(h, k, [&](const FloorWalk& w) { add_signed(acc, w.j_odd(), scaled_saw_hj(w, k)); });
      return Rational(acc, 2 * k);
    case HardyKind::S4:
      walk(h, k, [&](const FloorWalk& w) { acc += w.quotient_odd() ? -1 : 1; });
      return Rational(acc);
    case HardyKind::S5:
      walk(h, k, [&](const FloorWalk& w) {
        add_signed(acc, w.j_odd() != w.quotient_odd(), scaled_saw_j(w, k));
      });
      return Rational(acc, 2 * k);
  }
  throw DomainError("hardy_sum: unknown kind");
}

Rational s5_alt(const Int& h, const Int& k) {
  require_positive_modulus(k, "s5_alt");
  if (!is_odd(h) || !is_odd(k)) {
    throw PreconditionError("s5_alt: requires h and k odd, got (" + h.get_str() + ", " + k.get_str() + ")");
  }
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) { add_signed(acc, w.j_odd() != w.quotient_odd(), w.j()); });
  return Rational(acc, k);
}

Rational mixed_sum(const Int& h, const Int& k) {
  require_positive_modulus(k, "mixed_sum");
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) { add_signed(acc, w.j_odd() != w.quotient_odd(), w.j()); });
  return Rational(acc, k);
}

Rational simsek_y(const Int& h, const Int& k) {
  require_positive_modulus(k, "simsek_y");
  require_coprime(h, k, "simsek_y");
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) {
    add_signed(acc, w.j_odd() != w.quotient_odd(), scaled_saw_j(w, k));
  });
  // 4k * acc / (2k)
  return Rational(2 * acc);
}

Rational c1_sum(const Int& h, const Int& k) {
  require_positive_modulus(k, "c1_sum");
  require_coprime(h, k, "c1_sum");
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) {
    add_signed(acc, w.j_odd() != w.quotient_odd(), scaled_saw_hj(w, k));
  });
  return Rational(acc, 2 * k);
}

Rational b1_sum(const Int& h, const Int& k) {
  require_positive_modulus(k, "b1_sum");
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) { add_signed(acc, w.j_odd() != w.quotient_odd(), w.quotient()); });
  return Rational(acc);
}

Rational b1_variant_no_j(const Int& h, const Int& k) {
  require_positive_modulus(k, "b1_variant_no_j");
  Int acc = 0;
  walk(h, k, [&](const FloorWalk& w) { add_signed(acc, w.quotient_odd(), w.quotient()); });
  return Rational(acc);
}

Rational y_multi(std::span<const Int> args) {
  if (args.size() < 2) throw PreconditionError("y_multi: needs at least two arguments");
  for (const Int& a : args) {
    if (a <= 0) throw PreconditionError("y_multi: arguments must be positive, got " + a.get_str());
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      if (!is_coprime(args[i], args[j])) {
        throw PreconditionError("y_multi: arguments must be pairwise coprime, got " + args[i].get_str() +
                                " and " + args[j].get_str());
      }
    }
  }
  const Int& modulus = args.back();
  std::vector<FloorWalk> walks;
  walks.reserve(args.size() - 1);
  for (std::size_t i = 0; i + 1 < args.size(); ++i) walks.emplace_back(args[i], modulus);

  Int acc = 0;
  Int product;
  for (Int j = 1; j < modulus; ++j) {
    product = 2 * j - 1;
    bool negative = is_odd(j);
    for (const FloorWalk& w : walks) {
      product *= w.quotient();
      if (w.quotient_odd()) negative = !negative;
    }
    add_signed(acc, negative, product);
    for (FloorWalk& w : walks) w.advance();
  }
  return Rational(acc);
}

ParityClass parity_class(const Int& h, const Int& k) {
  const bool h_odd = is_odd(h);
  const bool k_odd = is_odd(k);
  if (h_odd && k_odd) return ParityClass::BothOdd;
  if (h_odd) return ParityClass::HOddKEven;
  if (k_odd) return ParityClass::HEvenKOdd;
  throw PreconditionError("parity_class: h and k both even (" + h.get_str() + ", " + k.get_str() +
                          ") cannot be coprime");
}

}  // namespace finsum
