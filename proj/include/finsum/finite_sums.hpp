#pragma once

// Direct evaluation of the Dedekind, Hardy-Berndt, Simsek, C1, B1 and
// multi-argument Y sums. Every "j mod k" sum runs over j = 1 .. k-1.
//
// All results are exact. The sums are evaluated from their defining
// formulas with all sawtooth terms put over a common denominator, so each
// call builds exactly one Rational at the end.

#include <span>
#include <string_view>

#include "finsum/exact.hpp"

namespace finsum {

enum class HardyKind { S, S1, S2, S3, S4, S5 };

std::string_view to_string(HardyKind kind);

enum class ParityClass { BothOdd, HOddKEven, HEvenKOdd };

std::string_view to_string(ParityClass parity);

/// s(h, k) summed term by term. Requires k > 0; coprimality is not needed.
Rational dedekind_naive(const Int& h, const Int& k);

/// s(h, k) by reciprocity descent; O(log k) steps. Requires k > 0 and
/// gcd(h, k) == 1.
Rational dedekind_fast(const Int& h, const Int& k);

/// One of S, s1 .. s5. Requires k > 0.
Rational hardy_sum(HardyKind kind, const Int& h, const Int& k);

/// (1/k) sum j (-1)^(j + floor(hj/k)); requires h, k odd and k > 0.
Rational s5_alt(const Int& h, const Int& k);

/// sum (-1)^(j + floor(hj/k)) (j/k). Requires k > 0.
Rational mixed_sum(const Int& h, const Int& k);

/// Y(h, k) = 4k sum (-1)^(j + floor(hj/k)) ((j/k)). Requires k > 0, gcd 1.
Rational simsek_y(const Int& h, const Int& k);

/// C1(h, k) = sum ((hj/k)) (-1)^(j + floor(hj/k)). Requires k > 0, gcd 1.
Rational c1_sum(const Int& h, const Int& k);

/// B1(h, k) = sum floor(hj/k) (-1)^(j + floor(hj/k)). Requires k > 0.
Rational b1_sum(const Int& h, const Int& k);

/// sum floor(hj/k) (-1)^floor(hj/k), the sign convention without j.
/// Kept for comparison only; none of the B1 laws hold for it.
Rational b1_variant_no_j(const Int& h, const Int& k);

/// Y_{n-1}(a_1, ..., a_{n-1}; a_n). The last entry is the modulus.
/// Requires at least two entries, a positive modulus and pairwise coprime
/// entries.
Rational y_multi(std::span<const Int> args);

/// Classifies a pair whose entries are not both even.
ParityClass parity_class(const Int& h, const Int& k);

}  // namespace finsum
