#include "finsum/fibonacci.hpp"

#include <string>

namespace finsum {

namespace {

void require_pair_index(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": index must be >= 1, got " + std::to_string(n));
}

// Finds m with F_m == h and F_{m+step} == k, if any, and returns m (or -1).
std::int64_t fib_index_with_successor(const Int& h, const Int& k, std::int64_t step) {
  if (h <= 0 || k <= h) return -1;
  Int prev = 0;
  Int cur = 1;
  std::int64_t m = 1;
  while (cur < h) {
    Int next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
    ++m;
  }
  if (cur != h) return -1;
  for (std::int64_t i = 0; i < step; ++i) {
    Int next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur == k ? m : -1;
}

}  // namespace

Int fib(std::int64_t n) {
  if (n < 0) throw DomainError("fib: negative index " + std::to_string(n));
  Int prev = 0;
  Int cur = 1;
  if (n == 0) return prev;
  for (std::int64_t i = 1; i < n; ++i) {
    Int next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPair symmetric_pair(std::int64_t n) {
  require_pair_index(n, "symmetric_pair");
  return {fib(2 * n + 1), fib(2 * n + 3)};
}

IntPair kuch_pair(std::int64_t n) {
  require_pair_index(n, "kuch_pair");
  return {fib(6 * n - 1), fib(6 * n + 1)};
}

bool is_symmetric_pair(const Int& h, const Int& k) {
  const std::int64_t m = fib_index_with_successor(h, k, 2);
  // m = 2n + 1 with n >= 1
  return m >= 3 && m % 2 == 1;
}

bool is_kuch_pair(const Int& h, const Int& k) {
  const std::int64_t m = fib_index_with_successor(h, k, 2);
  // m = 6n - 1 with n >= 1
  return m >= 5 && (m + 1) % 6 == 0;
}

}  // namespace finsum
