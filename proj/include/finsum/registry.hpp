#pragma once

// Catalog of the identities and reciprocity laws relating the finite sums,
// with exact single-pair checks and a deterministic range scanner.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finsum/exact.hpp"

namespace finsum {

enum class IdentityMode { Law, Conjecture };

std::string_view to_string(IdentityMode mode);

using PairPredicate = std::function<bool(const Int& h, const Int& k)>;
using PairValue = std::function<Rational(const Int& h, const Int& k)>;

/// A side property recorded during scans without affecting pass/fail.
struct Observer {
  std::string name;
  PairPredicate holds;
};

struct Identity {
  std::string id;
  std::string description;
  std::string statement;   // the identity written out as a formula
  std::string hypothesis;  // when it is claimed to hold
  IdentityMode mode = IdentityMode::Law;
  PairPredicate applies;
  PairValue lhs;
  PairValue rhs;
  std::vector<Observer> observers;
};

struct CheckReport {
  std::string id;
  Int h;
  Int k;
  Rational lhs;
  Rational rhs;
  bool pass = false;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct ScanRange {
  std::int64_t h_min = 1;
  std::int64_t h_max = 1;
  std::int64_t k_min = 1;
  std::int64_t k_max = 1;

  friend bool operator==(const ScanRange&, const ScanRange&) = default;
};

struct ScanReport {
  std::string id;
  IdentityMode mode = IdentityMode::Law;
  ScanRange range;
  std::uint64_t checked = 0;
  /// Sorted by (h, k). For laws, scanning stops at the first failure.
  std::vector<CheckReport> failures;
  bool aborted = false;
  double elapsed_ms = 0.0;
  /// observer name -> "holds" or "fails at (h,k)"
  std::map<std::string, std::string> observations;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

class UnknownIdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotApplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The full catalog in a fixed order; built once and never modified.
const std::vector<Identity>& registry();

/// Throws UnknownIdentityError.
const Identity& find_identity(std::string_view id);

/// Expands selectors: "all", "all-laws", "all-conjectures" or a comma list
/// of ids. Group selectors expand in registry order.
std::vector<std::string> expand_selector(std::string_view selector);

/// Throws UnknownIdentityError or NotApplicableError.
CheckReport check_identity(std::string_view id, const Int& h, const Int& k);

/// Checks every coprime pair in the range that satisfies the identity's
/// hypotheses. Pairs are distributed over `jobs` threads; the report does
/// not depend on the thread count except for elapsed_ms.
ScanReport scan_identity(const Identity& identity, const ScanRange& range, unsigned jobs = 1);

std::vector<ScanReport> scan(std::span<const std::string> ids, std::int64_t h_max, std::int64_t k_max,
                             unsigned jobs = 1);

/// Combines scans of the same identity over disjoint ranges. The merged
/// failure list is re-sorted by (h, k).
ScanReport merge_scans(const ScanReport& a, const ScanReport& b);

/// B1 extended to negative moduli: for k < 0 the sum runs over
/// j = 1 .. |k|-1 and is evaluated after reindexing j -> |k| - j so that
/// every floor has a positive denominator.
Rational b1_extended(const Int& h, const Int& k);

/// The same extension evaluated straight from the definition with a signed
/// floor_div(hj, k).
Rational b1_extended_direct(const Int& h, const Int& k);

}  // namespace finsum
