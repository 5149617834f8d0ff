#include "abasis/primes.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <fmt/format.h>

namespace abasis {

namespace {

std::vector<Int> sieve(Int limit) {
  std::vector<Int> out;
  if (limit < 2) return out;
  out.push_back(2);
  // Odd-only: index i stands for 2i + 1.
  const auto half = static_cast<std::size_t>((limit - 1) / 2 + 1);
  std::vector<bool> composite(half, false);
  for (std::size_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const Int p = 2 * static_cast<Int>(i) + 1;
    out.push_back(p);
    for (Int q = p * p; q <= limit; q += 2 * p) composite[static_cast<std::size_t>(q / 2)] = true;
  }
  return out;
}

// Upper bound on p_n (Rosser): n (log n + log log n) for n ≥ 6.
Int nth_prime_upper_bound(std::size_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<Int>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

constexpr Int kAnchorIndex = 30;
constexpr Int kAnchorOrder = 1564;  // h_30

template <typename Real>
SweepResult sweep_with(int n_max) {
  using std::abs;
  using std::log;
  const PrimeTable& table = shared_primes();
  if (static_cast<std::size_t>(n_max) > table.size()) {
    throw CapacityError(fmt::format("sweep needs {} primes, table holds {}", n_max, table.size()));
  }
  const Real rhs_scale = Real(900) * log(Real(kAnchorOrder));
  const Real tie_tolerance = Real(1) / Real(1'000'000'000'000LL);
  SweepResult out;
  Real best(-1);
  for (int n = 2; n <= n_max; ++n) {
    const Int h = table.prefix_sum(static_cast<std::size_t>(n)) - n + 1;
    const Real lhs = Real(n) * Real(n) * Real(kAnchorOrder) * log(Real(h));
    const Real rhs = rhs_scale * Real(h);
    SweepRow row;
    row.n = n;
    row.h = h;
    row.c = c_coefficient(n);
    row.tie = abs(lhs - rhs) <= tie_tolerance * rhs;
    row.within = row.tie || lhs < rhs;
    const Real normalized = lhs / Real(h);
    if (normalized > best) {
      best = normalized;
      out.argmax = n;
    }
    if (!row.within) out.all_within = false;
    if (row.tie) out.ties.push_back(n);
    out.rows.push_back(row);
  }
  return out;
}

// Safe comparison of an exact integer with a rounded real: the rhs is inflated
// by a relative 1e-15 (far above long double rounding error) before comparing.
void record(InequalityCheck& check, Int n, Int lhs, long double rhs) {
  ++check.checked;
  const long double lhs_real = static_cast<long double>(lhs);
  const long double upper = rhs + std::fabs(rhs) * 1e-15L;
  const long double margin = (lhs_real - rhs) / lhs_real;
  if (check.checked == 1 || margin < check.worst_margin) {
    check.worst_margin = margin;
    check.worst_n = n;
  }
  if (lhs_real >= upper) return;
  ++check.failures;
  if (!check.first_failure) check.first_failure = n;
  check.last_failure = n;
}

}  // namespace

PrimeTable PrimeTable::up_to(Int limit) {
  PrimeTable out;
  out.limit_ = limit;
  out.primes_ = sieve(limit);
  out.prefix_.reserve(out.primes_.size() + 1);
  out.prefix_.push_back(0);
  for (Int p : out.primes_) out.prefix_.push_back(out.prefix_.back() + p);
  return out;
}

PrimeTable PrimeTable::first(std::size_t count) {
  PrimeTable out = up_to(nth_prime_upper_bound(count));
  out.primes_.resize(count);
  out.prefix_.resize(count + 1);
  return out;
}

Int PrimeTable::nth(std::size_t n) const {
  if (n < 1 || n > primes_.size()) throw CapacityError(fmt::format("prime index {} outside table of {}", n, primes_.size()));
  return primes_[n - 1];
}

Int PrimeTable::prefix_sum(std::size_t n) const {
  if (n > primes_.size()) throw CapacityError(fmt::format("prime index {} outside table of {}", n, primes_.size()));
  return prefix_[n];
}

const PrimeTable& shared_primes() {
  static const PrimeTable table = PrimeTable::first(kDefaultPrimeCapacity);
  return table;
}

Int nth_prime(std::size_t n) { return shared_primes().nth(n); }

std::vector<Int> primes_up_to(Int x) { return sieve(x); }

namespace {

Int primorial(int n, Int modulus_cap) {
  if (n < 1) throw PreconditionError("family index must be at least 1");
  Int q = 1;
  for (int i = 1; i <= n; ++i) {
    q = checked_mul(q, nth_prime(static_cast<std::size_t>(i)));
    if (q > modulus_cap) throw CapacityError(fmt::format("modulus exceeds cap {}", modulus_cap));
  }
  return q;
}

}  // namespace

EPS family_An(int n, Int modulus_cap) {
  const Int q = primorial(n, modulus_cap);
  std::vector<Int> cofactors;
  for (int i = 1; i <= n; ++i) cofactors.push_back(q / nth_prime(static_cast<std::size_t>(i)));
  return canonicalize({q, {0}, 0, std::move(cofactors)});
}

EPS family_Xn(int n, Int modulus_cap) {
  const Int q = primorial(n, modulus_cap);
  std::vector<Int> block;
  for (Int i = 1; i <= q; ++i) block.push_back(i);
  return canonicalize({q, {0}, 0, std::move(block)});
}

Int h_n(int n) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  return shared_primes().prefix_sum(static_cast<std::size_t>(n)) - n + 1;
}

long double growth_constant() { return 30.0L * std::sqrt(std::log(1564.0L) / 1564.0L); }

long double c_coefficient(int n) {
  if (n < 2) throw PreconditionError("n must be at least 2");
  const auto h = static_cast<long double>(h_n(n));
  return static_cast<long double>(n) * std::sqrt(std::log(h) / h);
}

bool SweepResult::holds() const {
  if (!all_within) return false;
  if (rows.empty() || rows.back().n < kAnchorIndex) return ties.empty();
  return ties == std::vector<int>{static_cast<int>(kAnchorIndex)};
}

SweepResult sweep_c(int n_max, int precision_bits) {
  if (n_max < 2) throw PreconditionError("n_max must be at least 2");
  if (precision_bits <= 64) return sweep_with<long double>(n_max);
  if (precision_bits <= 332) return sweep_with<boost::multiprecision::cpp_bin_float_100>(n_max);
  throw CapacityError(fmt::format("precision of {} bits is not supported (max 332)", precision_bits));
}

MrReport verify_mr(Int n_lo, Int n_hi) {
  if (n_lo < 2 || n_lo > n_hi) throw PreconditionError("need 2 <= n_lo <= n_hi");
  const PrimeTable& table = shared_primes();
  if (static_cast<std::size_t>(n_hi) > table.size()) {
    throw CapacityError(fmt::format("range needs {} primes, table holds {}", n_hi, table.size()));
  }
  MrReport out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.sum_lower.formula = "sum p_i >= (n^2/2)(log n + log log n - 1.5034)";
  out.square_log.formula = "sum p_i >= (1/2) n^2 log n";
  for (Int n = n_lo; n <= n_hi; ++n) {
    const Int sum = table.prefix_sum(static_cast<std::size_t>(n));
    const long double x = static_cast<long double>(n);
    const long double log_n = std::log(x);
    record(out.sum_lower, n, sum, x * x / 2.0L * (log_n + std::log(log_n) - 1.5034L));
    record(out.square_log, n, sum, x * x / 2.0L * log_n);
  }
  return out;
}

long double alpha_threshold(long double alpha) {
  if (alpha <= 2.0L) throw PreconditionError("alpha must exceed 2");
  const long double t = alpha * alpha - 4.0L;
  return std::exp(-3.5L * alpha * alpha * std::log(t) / t);
}

}  // namespace abasis
