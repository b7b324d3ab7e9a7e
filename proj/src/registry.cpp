#include "finsum/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "finsum/fibonacci.hpp"
#include "finsum/finite_sums.hpp"

namespace finsum {

namespace {

using R = Rational;

bool both_positive(const Int& h, const Int& k) { return h > 0 && k > 0; }
bool sum_odd(const Int& h, const Int& k) { return is_odd(h) != is_odd(k); }
bool both_odd(const Int& h, const Int& k) { return is_odd(h) && is_odd(k); }

// Base hypothesis shared by every sum identity: k > 0 and gcd(h, k) = 1.
bool base(const Int& h, const Int& k) { return k > 0 && is_coprime(h, k); }

R ded(const Int& h, const Int& k) { return dedekind_naive(h, k); }
R hs(HardyKind kind, const Int& h, const Int& k) { return hardy_sum(kind, h, k); }
R big_s(const Int& h, const Int& k) { return hardy_sum(HardyKind::S, h, k); }
R s5(const Int& h, const Int& k) { return hardy_sum(HardyKind::S5, h, k); }
R y1(const Int& h, const Int& k) {
  const Int args[] = {h, k};
  return y_multi(args);
}

R half() { return R(1, 2); }

// 1/(2k) - 1/2
R b1_offset(const Int& k) { return R(1, 2 * k) - half(); }

Observer y_integral() {
  return {"Y_integral", [](const Int& h, const Int& k) {
            return simsek_y(h, k).is_integer() && (!both_positive(h, k) || simsek_y(k, h).is_integer());
          }};
}

// Sum of |sum| over every Hardy sum that the parity of (h, k) forces to zero.
R vanishing_total(const Int& h, const Int& k) {
  R total = 0;
  const bool h_odd = is_odd(h);
  const bool k_odd = is_odd(k);
  if (h_odd == k_odd) total += abs(hs(HardyKind::S, h, k));
  if (h_odd) total += abs(hs(HardyKind::S1, h, k));
  if (k_odd) total += abs(hs(HardyKind::S2, h, k));
  if (!k_odd) total += abs(hs(HardyKind::S3, h, k));
  if (!h_odd) total += abs(hs(HardyKind::S4, h, k));
  if (h_odd != k_odd) total += abs(hs(HardyKind::S5, h, k));
  return total;
}

std::vector<Identity> build_registry() {
  std::vector<Identity> out;
  auto law = [&out](std::string id, std::string description, std::string statement, std::string hypothesis,
                    PairPredicate applies, PairValue lhs, PairValue rhs) -> Identity& {
    out.push_back(Identity{std::move(id), std::move(description), std::move(statement), std::move(hypothesis),
                           IdentityMode::Law, std::move(applies), std::move(lhs), std::move(rhs), {}});
    return out.back();
  };

  law("DED-REC", "Dedekind reciprocity", "s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12",
      "h, k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k); },
      [](const Int& h, const Int& k) { return ded(h, k) + ded(k, h); },
      [](const Int& h, const Int& k) {
        return R(-1, 4) + R(1, 12) * (R(h, k) + R(k, h) + R(1, h * k));
      });

  law("S5-REC", "s5 reciprocity for odd pairs", "s5(h,k) + s5(k,h) = 1/2 - 1/(2hk)",
      "h, k > 0 odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && both_odd(h, k); },
      [](const Int& h, const Int& k) { return s5(h, k) + s5(k, h); },
      [](const Int& h, const Int& k) { return half() - R(1, 2 * h * k); });

  law("S5-VAN", "s5 vanishes when h + k is odd", "s5(h,k) = 0 (the (k,h) instance covers s5(k,h))",
      "h, k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return s5(h, k); }, [](const Int&, const Int&) { return R(0); });

  law("S-REC", "S reciprocity", "S(h,k) + S(k,h) = 1", "h, k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return big_s(h, k) + big_s(k, h); },
      [](const Int&, const Int&) { return R(1); });

  law("S-VAN", "S vanishes for odd pairs", "S(h,k) = 0 (the (k,h) instance covers S(k,h))",
      "h, k odd, k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && both_odd(h, k); },
      [](const Int& h, const Int& k) { return big_s(h, k); }, [](const Int&, const Int&) { return R(0); });

  law("EF1", "S in terms of Dedekind sums", "S(h,k) = 8s(h,2k) + 8s(2h,k) - 20s(h,k)",
      "k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return big_s(h, k); },
      [](const Int& h, const Int& k) { return R(8) * ded(h, 2 * k) + R(8) * ded(2 * h, k) - R(20) * ded(h, k); });

  law("EF2", "s1 in terms of Dedekind sums", "s1(h,k) = 2s(h,k) - 4s(h,2k)", "k > 0, h even, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && is_even(h); },
      [](const Int& h, const Int& k) { return hs(HardyKind::S1, h, k); },
      [](const Int& h, const Int& k) { return R(2) * ded(h, k) - R(4) * ded(h, 2 * k); });

  law("EF3", "s2 in terms of Dedekind sums", "s2(h,k) = -s(h,k) + 2s(2h,k)", "k > 0 even, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && is_even(k); },
      [](const Int& h, const Int& k) { return hs(HardyKind::S2, h, k); },
      [](const Int& h, const Int& k) { return -ded(h, k) + R(2) * ded(2 * h, k); });

  law("EF4", "s3 in terms of Dedekind sums", "s3(h,k) = 2s(h,k) - 4s(2h,k)", "k > 0 odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && is_odd(k); },
      [](const Int& h, const Int& k) { return hs(HardyKind::S3, h, k); },
      [](const Int& h, const Int& k) { return R(2) * ded(h, k) - R(4) * ded(2 * h, k); });

  law("EF5", "s4 in terms of Dedekind sums", "s4(h,k) = -4s(h,k) + 8s(h,2k)", "k > 0, h odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && is_odd(h); },
      [](const Int& h, const Int& k) { return hs(HardyKind::S4, h, k); },
      [](const Int& h, const Int& k) { return R(-4) * ded(h, k) + R(8) * ded(h, 2 * k); });

  law("EF6", "s5 in terms of Dedekind sums", "s5(h,k) = -10s(h,k) + 4s(2h,k) + 4s(h,2k)",
      "k > 0, h + k even, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && !sum_odd(h, k); },
      [](const Int& h, const Int& k) { return s5(h, k); },
      [](const Int& h, const Int& k) {
        return R(-10) * ded(h, k) + R(4) * ded(2 * h, k) + R(4) * ded(h, 2 * k);
      });

  law("EF-VANISH", "parity-forced zeros of the Hardy sums",
      "|S| (h+k even) + |s1| (h odd) + |s2| (k odd) + |s3| (k even) + |s4| (h even) + |s5| (h+k odd) = 0",
      "k > 0, gcd(h,k) = 1", [](const Int& h, const Int& k) { return base(h, k); }, vanishing_total,
      [](const Int&, const Int&) { return R(0); });

  law("EWSS", "S through s(h+k,2k)", "S(h,k) = 4s(h,k) - 8s(h+k,2k)", "k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return big_s(h, k); },
      [](const Int& h, const Int& k) { return R(4) * ded(h, k) - R(8) * ded(h + k, 2 * k); });

  law("Y-S5", "Simsek sum as a multiple of s5", "Y(h,k) = 4k s5(h,k)", "k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k); }, simsek_y,
      [](const Int& h, const Int& k) { return R(4 * k) * s5(h, k); })
      .observers.push_back(y_integral());

  // Only the odd case holds: for h + k odd both Y values vanish.
  law("Y-REC", "Simsek reciprocity", "hY(h,k) + kY(k,h) = 2hk - 2", "h, k > 0 odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && both_odd(h, k); },
      [](const Int& h, const Int& k) { return R(h) * simsek_y(h, k) + R(k) * simsek_y(k, h); },
      [](const Int& h, const Int& k) { return R(2 * h * k - 2); })
      .observers.push_back(y_integral());

  law("C1-ODD", "C1 for odd pairs", "C1(h,k) = 1/2 - 1/(2k)", "h, k > 0 odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && both_odd(h, k); }, c1_sum,
      [](const Int&, const Int& k) { return half() - R(1, 2 * k); });

  law("B1-NEG", "B1 is invariant under (h,k) -> (-h,-k)", "B1(-h,-k) = B1(h,k)", "k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k); },
      [](const Int& h, const Int& k) { return b1_extended(-h, -k); }, b1_sum);

  law("PEELA", "parity of floor through the sawtooth", "(-1)^floor(x) = 2((x)) - 4((x/2)), x = h/k",
      "k > 0, k does not divide h",
      [](const Int& h, const Int& k) { return k > 0 && floor_mod(h, k) != 0; },
      [](const Int& h, const Int& k) { return R(neg_one_pow(floor_div(h, k))); },
      [](const Int& h, const Int& k) {
        const R x(h, k);
        return R(2) * sawtooth(x) - R(4) * sawtooth(x * half());
      });

  law("B1-S", "B1 through S", "B1(h,k) = (1-h) S(h,k) / 2", "k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && sum_odd(h, k); }, b1_sum,
      [](const Int& h, const Int& k) { return half() * R(1 - h) * big_s(h, k); });

  law("B1-S5", "B1 through s5", "B1(h,k) = h s5(h,k) + 1/(2k) - 1/2", "h, k odd, k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && both_odd(h, k); }, b1_sum,
      [](const Int& h, const Int& k) { return R(h) * s5(h, k) + b1_offset(k); });

  law("B1-Y", "B1 through Y", "B1(h,k) = h Y(h,k) / (4k) + 1/(2k) - 1/2", "h, k odd, k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && both_odd(h, k); }, b1_sum,
      [](const Int& h, const Int& k) { return R(h, 4 * k) * simsek_y(h, k) + b1_offset(k); })
      .observers.push_back(y_integral());

  law("B1-MIX", "weighted B1 reciprocity for h + k odd", "(k-1)B1(h,k) + (h-1)B1(k,h) = -(k-1)(h-1)/2",
      "h, k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return R(k - 1) * b1_sum(h, k) + R(h - 1) * b1_sum(k, h); },
      [](const Int& h, const Int& k) { return -half() * R((k - 1) * (h - 1)); });

  law("B1-REC", "B1 reciprocity for odd pairs", "kB1(h,k) + hB1(k,h) = (h-1)(k-1)/2",
      "h, k > 0 odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && both_odd(h, k); },
      [](const Int& h, const Int& k) { return R(k) * b1_sum(h, k) + R(h) * b1_sum(k, h); },
      [](const Int& h, const Int& k) { return half() * R((h - 1) * (k - 1)); });

  law("Y1-A", "Y1 reciprocity, (k-1)/(h-1) weights", "Y1(h,k) + Y1(k,h) = 2(k-1)B1(h,k) + 2(h-1)B1(k,h)",
      "h, k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return y1(h, k) + y1(k, h); },
      [](const Int& h, const Int& k) { return R(2 * (k - 1)) * b1_sum(h, k) + R(2 * (h - 1)) * b1_sum(k, h); })
      .mode = IdentityMode::Conjecture;

  law("Y1-B", "Y1 reciprocity, k/h weights", "Y1(h,k) + Y1(k,h) = 2kB1(h,k) + 2hB1(k,h)",
      "h, k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return both_positive(h, k) && base(h, k) && sum_odd(h, k); },
      [](const Int& h, const Int& k) { return y1(h, k) + y1(k, h); },
      [](const Int& h, const Int& k) { return R(2 * k) * b1_sum(h, k) + R(2 * h) * b1_sum(k, h); })
      .mode = IdentityMode::Conjecture;

  law("B1-DED1", "B1 through s(h,2k), s(2h,k)", "B1(h,k) = (1-h)(4s(h,2k) + 4s(2h,k) - 10s(h,k))",
      "k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && sum_odd(h, k); }, b1_sum,
      [](const Int& h, const Int& k) {
        return R(1 - h) * (R(4) * ded(h, 2 * k) + R(4) * ded(2 * h, k) - R(10) * ded(h, k));
      });

  law("B1-DED2", "B1 through s(h+k,2k)", "B1(h,k) = 2(1-h)(s(h,k) - 2s(h+k,2k))",
      "k > 0, h + k odd, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && sum_odd(h, k); }, b1_sum,
      [](const Int& h, const Int& k) { return R(2 * (1 - h)) * (ded(h, k) - R(2) * ded(h + k, 2 * k)); });

  law("B1-DED3", "B1 through Dedekind sums for odd pairs",
      "B1(h,k) = -10h s(h,k) + 4h s(2h,k) + 4h s(h,2k) + 1/(2k) - 1/2", "h, k odd, k > 0, gcd(h,k) = 1",
      [](const Int& h, const Int& k) { return base(h, k) && both_odd(h, k); }, b1_sum,
      [](const Int& h, const Int& k) {
        const R hr(h);
        return R(-10) * hr * ded(h, k) + R(4) * hr * ded(2 * h, k) + R(4) * hr * ded(h, 2 * k) + b1_offset(k);
      });

  law("FIB-SYM", "Dedekind sums of symmetric Fibonacci pairs vanish", "s(h,k) = 0",
      "{h,k} = {F(2n+1), F(2n+3)}, n >= 1",
      [](const Int& h, const Int& k) { return is_symmetric_pair(h, k) || is_symmetric_pair(k, h); },
      [](const Int& h, const Int& k) { return dedekind_fast(h, k); },
      [](const Int&, const Int&) { return R(0); });

  law("FIB-KUCH", "s5 reciprocity on F(6n-1), F(6n+1)", "s5(h,k) + s5(k,h) = (h/k + k/h - 2)/2",
      "h = F(6n-1), k = F(6n+1), n >= 1", [](const Int& h, const Int& k) { return is_kuch_pair(h, k); },
      [](const Int& h, const Int& k) { return s5(h, k) + s5(k, h); },
      [](const Int& h, const Int& k) { return half() * (R(h, k) + R(k, h) - R(2)); });

  law("FIB-KUCH-Y", "Y reciprocity on F(6n-1), F(6n+1)", "hY(h,k) + kY(k,h) = 2h^2 + 2k^2 - 4hk",
      "h = F(6n-1), k = F(6n+1), n >= 1", [](const Int& h, const Int& k) { return is_kuch_pair(h, k); },
      [](const Int& h, const Int& k) { return R(h) * simsek_y(h, k) + R(k) * simsek_y(k, h); },
      [](const Int& h, const Int& k) { return R(2 * h * h + 2 * k * k - 4 * h * k); })
      .observers.push_back(y_integral());

  law("FIB-B1", "B1 reciprocity on F(6n-1), F(6n+1)", "kB1(h,k) + hB1(k,h) = (h^2 - h - k + k^2)/2 - hk + 1",
      "h = F(6n-1), k = F(6n+1), n >= 1", [](const Int& h, const Int& k) { return is_kuch_pair(h, k); },
      [](const Int& h, const Int& k) { return R(k) * b1_sum(h, k) + R(h) * b1_sum(k, h); },
      [](const Int& h, const Int& k) { return half() * R(h * h - h - k + k * k) - R(h * k) + R(1); });

  return out;
}

struct PairTask {
  std::int64_t h;
  std::int64_t k;
};

struct PairOutcome {
  CheckReport report;
  std::vector<bool> observed;
};

PairOutcome evaluate(const Identity& identity, const PairTask& task) {
  PairOutcome out;
  const Int h(static_cast<long>(task.h));
  const Int k(static_cast<long>(task.k));
  out.report.id = identity.id;
  out.report.h = h;
  out.report.k = k;
  out.report.lhs = identity.lhs(h, k);
  out.report.rhs = identity.rhs(h, k);
  out.report.pass = out.report.lhs == out.report.rhs;
  out.observed.reserve(identity.observers.size());
  for (const Observer& o : identity.observers) out.observed.push_back(o.holds(h, k));
  return out;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Exceptions are
// rethrown on the calling thread after all workers finish.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= n) return;
          try {
            fn(i);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(n);
            return;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

bool pair_less(const CheckReport& a, const CheckReport& b) {
  if (a.h != b.h) return a.h < b.h;
  return a.k < b.k;
}

}  // namespace

std::string_view to_string(IdentityMode mode) { return mode == IdentityMode::Law ? "law" : "conjecture"; }

const std::vector<Identity>& registry() {
  static const std::vector<Identity> catalog = build_registry();
  return catalog;
}

const Identity& find_identity(std::string_view id) {
  for (const Identity& identity : registry()) {
    if (identity.id == id) return identity;
  }
  throw UnknownIdentityError("unknown identity '" + std::string(id) + "'");
}

std::vector<std::string> expand_selector(std::string_view selector) {
  std::vector<std::string> out;
  auto add_group = [&out](auto keep) {
    for (const Identity& identity : registry()) {
      if (keep(identity)) out.push_back(identity.id);
    }
  };
  std::size_t start = 0;
  while (start <= selector.size()) {
    const std::size_t comma = std::min(selector.find(',', start), selector.size());
    const std::string_view item = selector.substr(start, comma - start);
    if (item == "all") {
      add_group([](const Identity&) { return true; });
    } else if (item == "all-laws") {
      add_group([](const Identity& i) { return i.mode == IdentityMode::Law; });
    } else if (item == "all-conjectures") {
      add_group([](const Identity& i) { return i.mode == IdentityMode::Conjecture; });
    } else if (!item.empty()) {
      out.push_back(find_identity(item).id);
    }
    start = comma + 1;
  }
  if (out.empty()) throw UnknownIdentityError("empty identity selector");
  return out;
}

CheckReport check_identity(std::string_view id, const Int& h, const Int& k) {
  const Identity& identity = find_identity(id);
  if (!identity.applies(h, k)) {
    throw NotApplicableError(identity.id + " does not apply to (" + h.get_str() + ", " + k.get_str() +
                             "): requires " + identity.hypothesis);
  }
  CheckReport report{identity.id, h, k, identity.lhs(h, k), identity.rhs(h, k), false};
  report.pass = report.lhs == report.rhs;
  return report;
}

ScanReport scan_identity(const Identity& identity, const ScanRange& range, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.id = identity.id;
  report.mode = identity.mode;
  report.range = range;

  std::vector<PairTask> tasks;
  for (std::int64_t h = range.h_min; h <= range.h_max; ++h) {
    for (std::int64_t k = range.k_min; k <= range.k_max; ++k) {
      const Int hi(static_cast<long>(h));
      const Int ki(static_cast<long>(k));
      if (is_coprime(hi, ki) && identity.applies(hi, ki)) tasks.push_back({h, k});
    }
  }

  std::vector<PairOutcome> outcomes(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { outcomes[i] = evaluate(identity, tasks[i]); });

  std::vector<std::string> first_miss(identity.observers.size());
  for (const PairOutcome& outcome : outcomes) {
    ++report.checked;
    for (std::size_t o = 0; o < identity.observers.size(); ++o) {
      if (!outcome.observed[o] && first_miss[o].empty()) {
        first_miss[o] = "fails at (" + outcome.report.h.get_str() + "," + outcome.report.k.get_str() + ")";
      }
    }
    if (!outcome.report.pass) {
      report.failures.push_back(outcome.report);
      if (identity.mode == IdentityMode::Law) {
        report.aborted = true;
        break;
      }
    }
  }
  for (std::size_t o = 0; o < identity.observers.size(); ++o) {
    report.observations[identity.observers[o].name] = first_miss[o].empty() ? "holds" : first_miss[o];
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ScanReport> scan(std::span<const std::string> ids, std::int64_t h_max, std::int64_t k_max,
                             unsigned jobs) {
  if (h_max < 1 || k_max < 1) throw DomainError("scan bounds must be >= 1");
  std::vector<ScanReport> out;
  out.reserve(ids.size());
  const ScanRange range{1, h_max, 1, k_max};
  for (const std::string& id : ids) out.push_back(scan_identity(find_identity(id), range, jobs));
  return out;
}

ScanReport merge_scans(const ScanReport& a, const ScanReport& b) {
  if (a.id != b.id) throw PreconditionError("merge_scans: different identities " + a.id + " and " + b.id);
  ScanReport out = a;
  out.range.h_min = std::min(a.range.h_min, b.range.h_min);
  out.range.h_max = std::max(a.range.h_max, b.range.h_max);
  out.range.k_min = std::min(a.range.k_min, b.range.k_min);
  out.range.k_max = std::max(a.range.k_max, b.range.k_max);
  out.checked = a.checked + b.checked;
  out.failures.insert(out.failures.end(), b.failures.begin(), b.failures.end());
  std::sort(out.failures.begin(), out.failures.end(), pair_less);
  out.aborted = a.aborted || b.aborted;
  out.elapsed_ms = a.elapsed_ms + b.elapsed_ms;
  for (const auto& [name, value] : b.observations) {
    auto [it, inserted] = out.observations.try_emplace(name, value);
    if (!inserted && it->second == "holds") it->second = value;
  }
  return out;
}

Rational b1_extended(const Int& h, const Int& k) {
  if (k == 0) throw DomainError("b1_extended: modulus must be non-zero");
  if (k > 0) return b1_sum(h, k);
  // floor(h(m-i)/k) with m = -k equals floor(hi/m) - h.
  const Int m = -k;
  Int acc = 0;
  for (Int i = 1; i < m; ++i) {
    const Int q = floor_div(h * i, m) - h;
    const Int exponent = (m - i) + q;
    if (is_odd(exponent)) {
      acc -= q;
    } else {
      acc += q;
    }
  }
  return Rational(acc);
}

Rational b1_extended_direct(const Int& h, const Int& k) {
  if (k == 0) throw DomainError("b1_extended_direct: modulus must be non-zero");
  const Int m = k < 0 ? Int(-k) : k;
  Int acc = 0;
  for (Int j = 1; j < m; ++j) {
    const Int q = floor_div(h * j, k);
    acc += neg_one_pow(j + q) * q;
  }
  return Rational(acc);
}

}  // namespace finsum
