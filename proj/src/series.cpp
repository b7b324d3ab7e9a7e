#include "finsum/series.hpp"

#include <cmath>
#include <numbers>

#include "finsum/finite_sums.hpp"

namespace finsum {

namespace {

constexpr std::int64_t kMaxArgument = std::int64_t{1} << 30;
constexpr double kPi = std::numbers::pi;

struct KindInfo {
  SeriesKind kind;
  std::string_view name;
  std::string_view hypothesis;
};

constexpr KindInfo kKindInfo[] = {
    {SeriesKind::FinS, "FIN_S", "h + k odd"},
    {SeriesKind::FinS1, "FIN_S1", "h even, k odd"},
    {SeriesKind::FinS2, "FIN_S2", "h odd, k even"},
    {SeriesKind::FinS3, "FIN_S3", "k odd"},
    {SeriesKind::FinS4, "FIN_S4", "h odd"},
    {SeriesKind::FinS5, "FIN_S5", "h and k odd"},
    {SeriesKind::InfS, "INF_S", "h + k odd"},
    {SeriesKind::InfS1, "INF_S1", "h even, k odd"},
    {SeriesKind::InfS2, "INF_S2", "h odd, k even"},
    {SeriesKind::InfS3, "INF_S3", "k odd"},
    {SeriesKind::InfS4, "INF_S4", "h odd"},
    {SeriesKind::InfS5, "INF_S5", "h and k odd"},
    {SeriesKind::FinB1SumOdd, "FIN_B1_SUMODD", "h + k odd"},
    {SeriesKind::FinB1BothOdd, "FIN_B1_BOTHODD", "h and k odd"},
    {SeriesKind::InfB1SumOdd, "INF_B1_SUMODD", "h + k odd"},
    {SeriesKind::InfB1BothOdd, "INF_B1_BOTHODD", "h and k odd"},
};

const KindInfo& info(SeriesKind kind) {
  for (const KindInfo& i : kKindInfo) {
    if (i.kind == kind) return i;
  }
  throw DomainError("unknown series kind");
}

bool parity_ok(SeriesKind kind, bool h_odd, bool k_odd) {
  switch (kind) {
    case SeriesKind::FinS:
    case SeriesKind::InfS:
    case SeriesKind::FinB1SumOdd:
    case SeriesKind::InfB1SumOdd: return h_odd != k_odd;
    case SeriesKind::FinS1:
    case SeriesKind::InfS1: return !h_odd && k_odd;
    case SeriesKind::FinS2:
    case SeriesKind::InfS2: return h_odd && !k_odd;
    case SeriesKind::FinS3:
    case SeriesKind::InfS3: return k_odd;
    case SeriesKind::FinS4:
    case SeriesKind::InfS4: return h_odd;
    case SeriesKind::FinS5:
    case SeriesKind::InfS5:
    case SeriesKind::FinB1BothOdd:
    case SeriesKind::InfB1BothOdd: return h_odd && k_odd;
  }
  return false;
}

// Reduces a * b modulo m into [0, m) without overflow.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const __int128 p = static_cast<__int128>(a) * b;
  __int128 r = p % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Angle pi * num / den with num already reduced, den > 0.
struct Angle {
  std::int64_t num;
  std::int64_t den;
};

std::string describe(const Angle& a) {
  return "pi*" + std::to_string(a.num) + "/" + std::to_string(a.den);
}

// tan has period pi: reduce num into (-den/2, den/2].
double tan_pi(Angle a) {
  std::int64_t r = a.num % a.den;
  if (r < 0) r += a.den;
  if (2 * r == a.den) throw PoleError("tangent pole at " + describe(a));
  if (2 * r > a.den) r -= a.den;
  return std::tan(kPi * static_cast<double>(r) / static_cast<double>(a.den));
}

double cot_pi(Angle a) {
  std::int64_t r = a.num % a.den;
  if (r < 0) r += a.den;
  if (r == 0) throw PoleError("cotangent pole at " + describe(a));
  if (2 * r == a.den) return 0.0;
  if (2 * r > a.den) r -= a.den;
  return 1.0 / std::tan(kPi * static_cast<double>(r) / static_cast<double>(a.den));
}

struct MachinePair {
  std::int64_t h;
  std::int64_t k;
};

MachinePair checked_pair(SeriesKind kind, const Int& h, const Int& k) {
  if (k <= 0) throw DomainError("series: modulus k must be positive, got " + k.get_str());
  if (!series_applies(kind, h, k)) {
    throw PreconditionError(std::string(to_string(kind)) + " requires gcd(h,k) = 1 and " +
                            std::string(parity_hypothesis(kind)) + ", got (" + h.get_str() + ", " + k.get_str() +
                            ")");
  }
  const std::int64_t hh = to_int64(h);
  const std::int64_t kk = to_int64(k);
  if (hh > kMaxArgument || hh < -kMaxArgument || kk > kMaxArgument) {
    throw DomainError("series: arguments limited to |h|, k <= 2^30");
  }
  return {hh, kk};
}

// sum tan(pi h(2j-1)/2k) cot(pi(2j-1)/2k) over j = 1..k, optionally
// skipping j = (k+1)/2.
double odd_tan_cot(const MachinePair& p, bool skip_middle, bool first_is_tan, std::uint64_t& depth) {
  double acc = 0.0;
  const std::int64_t den = 2 * p.k;
  for (std::int64_t j = 1; j <= p.k; ++j) {
    ++depth;
    if (skip_middle && 2 * j == p.k + 1) continue;
    const std::int64_t m = 2 * j - 1;
    const Angle outer{mul_mod(p.h, m, den), den};
    const double first = first_is_tan ? tan_pi(outer) : cot_pi(outer);
    acc += first * cot_pi({m, den});
  }
  return acc;
}

// sum tan(pi hj/k) cot(pi j/k) over j = 1..k-1, optionally skipping j = k/2.
double plain_tan_cot(const MachinePair& p, bool skip_half, std::uint64_t& depth) {
  double acc = 0.0;
  for (std::int64_t j = 1; j < p.k; ++j) {
    ++depth;
    if (skip_half && 2 * j == p.k) continue;
    acc += tan_pi({mul_mod(p.h, j, p.k), p.k}) * cot_pi({j, p.k});
  }
  return acc;
}

enum class OddTrig { Tan, Cot };

// sum_{n=1}^{N} f(pi h(2n-1)/2k) / (2n-1), skipping k | (2n-1) if asked.
double odd_series(const MachinePair& p, std::int64_t terms, OddTrig trig, bool skip_multiples_of_k,
                  std::uint64_t& depth) {
  double acc = 0.0;
  const std::int64_t den = 2 * p.k;
  for (std::int64_t n = 1; n <= terms; ++n) {
    ++depth;
    const std::int64_t m = 2 * n - 1;
    if (skip_multiples_of_k && m % p.k == 0) continue;
    const Angle a{mul_mod(p.h, m, den), den};
    acc += (trig == OddTrig::Tan ? tan_pi(a) : cot_pi(a)) / static_cast<double>(m);
  }
  return acc;
}

// sum_{n=1}^{N} tan(pi hn/k) / n, skipping k | 2n if asked.
double plain_series(const MachinePair& p, std::int64_t terms, bool skip_half_multiples, std::uint64_t& depth) {
  double acc = 0.0;
  for (std::int64_t n = 1; n <= terms; ++n) {
    ++depth;
    if (skip_half_multiples && (2 * n) % p.k == 0) continue;
    acc += tan_pi({mul_mod(p.h, n, p.k), p.k}) / static_cast<double>(n);
  }
  return acc;
}

SeriesResult finish(SeriesKind kind, const Int& h, const Int& k, double approx, std::uint64_t depth) {
  SeriesResult out;
  out.kind = kind;
  out.h = h;
  out.k = k;
  out.approx = approx;
  out.exact = series_target(kind, h, k);
  out.abs_error = std::fabs(approx - out.exact.to_double());
  out.depth = depth;
  return out;
}

}  // namespace

std::string_view to_string(SeriesKind kind) { return info(kind).name; }

std::optional<SeriesKind> parse_series_kind(std::string_view name) {
  for (const KindInfo& i : kKindInfo) {
    if (i.name == name) return i.kind;
  }
  return std::nullopt;
}

bool is_infinite(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::InfS:
    case SeriesKind::InfS1:
    case SeriesKind::InfS2:
    case SeriesKind::InfS3:
    case SeriesKind::InfS4:
    case SeriesKind::InfS5:
    case SeriesKind::InfB1SumOdd:
    case SeriesKind::InfB1BothOdd: return true;
    default: return false;
  }
}

std::string_view parity_hypothesis(SeriesKind kind) { return info(kind).hypothesis; }

bool series_applies(SeriesKind kind, const Int& h, const Int& k) {
  return k > 0 && is_coprime(h, k) && parity_ok(kind, is_odd(h), is_odd(k));
}

Rational series_target(SeriesKind kind, const Int& h, const Int& k) {
  switch (kind) {
    case SeriesKind::FinS:
    case SeriesKind::InfS: return hardy_sum(HardyKind::S, h, k);
    case SeriesKind::FinS1:
    case SeriesKind::InfS1: return hardy_sum(HardyKind::S1, h, k);
    case SeriesKind::FinS2:
    case SeriesKind::InfS2: return hardy_sum(HardyKind::S2, h, k);
    case SeriesKind::FinS3:
    case SeriesKind::InfS3: return hardy_sum(HardyKind::S3, h, k);
    case SeriesKind::FinS4:
    case SeriesKind::InfS4: return hardy_sum(HardyKind::S4, h, k);
    case SeriesKind::FinS5:
    case SeriesKind::InfS5: return hardy_sum(HardyKind::S5, h, k);
    default: return b1_sum(h, k);
  }
}

SeriesResult finite_series(SeriesKind kind, const Int& h, const Int& k) {
  if (is_infinite(kind)) throw PreconditionError("finite_series: " + std::string(to_string(kind)) + " is infinite");
  const MachinePair p = checked_pair(kind, h, k);
  const double kd = static_cast<double>(p.k);
  const double hd = static_cast<double>(p.h);
  std::uint64_t depth = 0;
  double approx = 0.0;
  switch (kind) {
    case SeriesKind::FinS: approx = odd_tan_cot(p, false, true, depth) / kd; break;
    case SeriesKind::FinS1: approx = -odd_tan_cot(p, true, false, depth) / (2.0 * kd); break;
    case SeriesKind::FinS2: approx = -plain_tan_cot(p, true, depth) / (4.0 * kd); break;
    case SeriesKind::FinS3: approx = plain_tan_cot(p, false, depth) / (2.0 * kd); break;
    case SeriesKind::FinS4: approx = odd_tan_cot(p, false, false, depth) / kd; break;
    case SeriesKind::FinS5: approx = odd_tan_cot(p, true, true, depth) / (2.0 * kd); break;
    case SeriesKind::FinB1SumOdd:
      approx = (1.0 - hd) / (2.0 * kd) * odd_tan_cot(p, false, true, depth);
      break;
    case SeriesKind::FinB1BothOdd:
      approx = hd / (2.0 * kd) * odd_tan_cot(p, true, true, depth) + 1.0 / (2.0 * kd) - 0.5;
      break;
    default: break;
  }
  return finish(kind, h, k, approx, depth);
}

SeriesResult infinite_series(SeriesKind kind, const Int& h, const Int& k, std::int64_t periods) {
  if (!is_infinite(kind)) throw PreconditionError("infinite_series: " + std::string(to_string(kind)) + " is finite");
  if (periods < 1) throw DomainError("infinite_series: periods must be >= 1");
  const MachinePair p = checked_pair(kind, h, k);
  if (periods > (std::int64_t{1} << 40) / p.k) throw DomainError("infinite_series: truncation depth too large");
  const std::int64_t terms = periods * p.k;
  const double kd = static_cast<double>(p.k);
  const double hd = static_cast<double>(p.h);
  std::uint64_t depth = 0;
  double approx = 0.0;
  switch (kind) {
    case SeriesKind::InfS: approx = 4.0 / kPi * odd_series(p, terms, OddTrig::Tan, false, depth); break;
    case SeriesKind::InfS1: approx = -2.0 / kPi * odd_series(p, terms, OddTrig::Cot, true, depth); break;
    case SeriesKind::InfS2: approx = -1.0 / (2.0 * kPi) * plain_series(p, terms, true, depth); break;
    case SeriesKind::InfS3: approx = 1.0 / kPi * plain_series(p, terms, false, depth); break;
    case SeriesKind::InfS4: approx = 4.0 / kPi * odd_series(p, terms, OddTrig::Cot, false, depth); break;
    case SeriesKind::InfS5: approx = 2.0 / kPi * odd_series(p, terms, OddTrig::Tan, true, depth); break;
    case SeriesKind::InfB1SumOdd:
      approx = 2.0 * (1.0 - hd) / kPi * odd_series(p, terms, OddTrig::Tan, false, depth);
      break;
    case SeriesKind::InfB1BothOdd:
      approx = 2.0 * hd / kPi * odd_series(p, terms, OddTrig::Tan, true, depth) + 1.0 / (2.0 * kd) - 0.5;
      break;
    default: break;
  }
  return finish(kind, h, k, approx, depth);
}

std::vector<SeriesResult> convergence_table(SeriesKind kind, const Int& h, const Int& k,
                                            std::span<const std::int64_t> periods) {
  std::vector<SeriesResult> out;
  out.reserve(periods.size());
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i > 0 && periods[i] <= periods[i - 1]) {
      throw PreconditionError("convergence_table: depths must be strictly increasing");
    }
    out.push_back(infinite_series(kind, h, k, periods[i]));
  }
  return out;
}

SeriesResult evaluate_series(SeriesKind kind, const Int& h, const Int& k, std::int64_t periods) {
  return is_infinite(kind) ? infinite_series(kind, h, k, periods) : finite_series(kind, h, k);
}

}  // namespace finsum
