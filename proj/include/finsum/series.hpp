#pragma once

// Floating-point evaluation of the tangent/cotangent representations of
// the Hardy sums and of B1, checked against the exact finite sums.
//
// Every trigonometric argument is pi times a rational with an integer
// numerator, so each argument is reduced modulo its period in integer
// arithmetic before any floating-point work, and singularities are decided
// by congruence rather than by magnitude.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finsum/exact.hpp"

namespace finsum {

enum class SeriesKind {
  FinS,
  FinS1,
  FinS2,
  FinS3,
  FinS4,
  FinS5,
  InfS,
  InfS1,
  InfS2,
  InfS3,
  InfS4,
  InfS5,
  FinB1SumOdd,
  FinB1BothOdd,
  InfB1SumOdd,
  InfB1BothOdd,
};

inline constexpr SeriesKind kAllSeriesKinds[] = {
    SeriesKind::FinS,        SeriesKind::FinS1,        SeriesKind::FinS2,       SeriesKind::FinS3,
    SeriesKind::FinS4,       SeriesKind::FinS5,        SeriesKind::InfS,        SeriesKind::InfS1,
    SeriesKind::InfS2,       SeriesKind::InfS3,        SeriesKind::InfS4,       SeriesKind::InfS5,
    SeriesKind::FinB1SumOdd, SeriesKind::FinB1BothOdd, SeriesKind::InfB1SumOdd, SeriesKind::InfB1BothOdd,
};

/// Upper-case names such as "FIN_S3" or "INF_B1_BOTHODD".
std::string_view to_string(SeriesKind kind);
std::optional<SeriesKind> parse_series_kind(std::string_view name);

bool is_infinite(SeriesKind kind);

/// The parity hypothesis of the representation, e.g. "h + k odd".
std::string_view parity_hypothesis(SeriesKind kind);

/// Coprime, k > 0 and the parity hypothesis of `kind`.
bool series_applies(SeriesKind kind, const Int& h, const Int& k);

/// A tangent or cotangent singularity at an index the formula keeps.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeriesResult {
  SeriesKind kind{};
  Int h;
  Int k;
  double approx = 0.0;
  Rational exact;
  double abs_error = 0.0;
  /// Number of indices n (or j) visited, excluded ones included.
  std::uint64_t depth = 0;
};

/// The exact value the representation converges to, from the finite sums.
Rational series_target(SeriesKind kind, const Int& h, const Int& k);

/// Evaluates a finite representation. Throws PreconditionError when the
/// hypotheses fail and PoleError on a kept singular index.
SeriesResult finite_series(SeriesKind kind, const Int& h, const Int& k);

/// Partial sum of an infinite representation over n = 1 .. periods*k.
SeriesResult infinite_series(SeriesKind kind, const Int& h, const Int& k, std::int64_t periods);

/// infinite_series at each entry of `periods`, which must be increasing.
std::vector<SeriesResult> convergence_table(SeriesKind kind, const Int& h, const Int& k,
                                            std::span<const std::int64_t> periods);

/// Dispatches on is_infinite(kind); `periods` is ignored for finite kinds.
SeriesResult evaluate_series(SeriesKind kind, const Int& h, const Int& k, std::int64_t periods);

}  // namespace finsum
