#pragma once

// Fibonacci numbers (F0 = 0, F1 = 1) and the Fibonacci pairs used by the
// symmetric-pair identities.

#include <cstdint>
#include <utility>

#include "finsum/exact.hpp"

namespace finsum {

using IntPair = std::pair<Int, Int>;

/// F_n by iterating F_{n+1} = F_n + F_{n-1}. Throws DomainError for n < 0.
Int fib(std::int64_t n);

/// (F_{2n+1}, F_{2n+3}); n >= 1.
IntPair symmetric_pair(std::int64_t n);

/// (F_{6n-1}, F_{6n+1}); n >= 1.
IntPair kuch_pair(std::int64_t n);

/// True when (h, k) == symmetric_pair(n) for some n >= 1.
bool is_symmetric_pair(const Int& h, const Int& k);

/// True when (h, k) == kuch_pair(n) for some n >= 1.
bool is_kuch_pair(const Int& h, const Int& k);

}  // namespace finsum
