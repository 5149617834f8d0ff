#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abasis/eps.hpp"

namespace abasis {

/// The first primes p_1 = 2 < p_2 < ... with running sums.
class PrimeTable {
public:
  /// Sieves enough to hold at least `count` primes.
  static PrimeTable first(std::size_t count);
  /// All primes ≤ limit.
  static PrimeTable up_to(Int limit);

  std::size_t size() const noexcept { return primes_.size(); }
  Int sieve_limit() const noexcept { return limit_; }
  std::span<const Int> primes() const noexcept { return primes_; }
  /// p_n, 1-based. Throws CapacityError past the end.
  Int nth(std::size_t n) const;
  /// p_1 + ... + p_n; prefix_sum(0) = 0.
  Int prefix_sum(std::size_t n) const;

private:
  Int limit_ = 0;
  std::vector<Int> primes_;
  std::vector<Int> prefix_;
};

inline constexpr std::size_t kDefaultPrimeCapacity = 2'000'000;

/// Process-wide table of the first kDefaultPrimeCapacity primes, built on first use.
const PrimeTable& shared_primes();

Int nth_prime(std::size_t n);
std::vector<Int> primes_up_to(Int x);

/// A_n = p_1⋯p_n ℕ ∪ {p_1⋯p̂_i⋯p_n : i = 1..n}.
EPS family_An(int n, Int modulus_cap);
/// X_n = p_1⋯p_n ℕ ∪ {1, ..., p_1⋯p_n}.
EPS family_Xn(int n, Int modulus_cap);

/// h_n = p_1 + ... + p_n - n + 1, the order of A_n.
Int h_n(int n);

/// C = 30 √(log 1564 / 1564).
long double growth_constant();
/// C_{h_n} = n √(log h_n / h_n).
long double c_coefficient(int n);

struct SweepRow {
  int n = 0;
  Int h = 0;
  long double c = 0;
  bool within = true;  // C_{h_n} ≤ C
  bool tie = false;    // |C_{h_n} - C| within relative 1e-12
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int argmax = 0;
  bool all_within = true;
  std::vector<int> ties;

  /// Every row within C and equality exactly at n = 30 (when the range reaches it).
  bool holds() const;
};

/// Compares C_{h_n} with C for 2 ≤ n ≤ n_max in the cross-multiplied form
/// n² · 1564 · log h_n  vs  900 · h_n · log 1564.
/// precision_bits ≤ 64 uses long double, ≤ 332 a software float; larger values are rejected.
SweepResult sweep_c(int n_max, int precision_bits = 64);

struct InequalityCheck {
  std::string formula;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<Int> first_failure;
  std::optional<Int> last_failure;
  long double worst_margin = 0;  // min over n of (lhs - rhs) / lhs
  Int worst_n = 0;

  bool holds() const noexcept { return failures == 0; }
};

struct MrReport {
  Int n_lo = 0;
  Int n_hi = 0;
  InequalityCheck sum_lower;   // Σ p_i ≥ (n²/2)(log n + log log n - 1.5034)
  InequalityCheck square_log;  // Σ p_i ≥ (1/2) n² log n

  bool holds() const noexcept { return sum_lower.holds() && square_log.holds(); }
};

MrReport verify_mr(Int n_lo, Int n_hi);

/// exp(-(7/2) α² log(α² - 4) / (α² - 4)), any α > 2. Only α ≤ C is meaningful
/// for the order bound, but the expression itself is not restricted.
long double alpha_threshold(long double alpha);

}  // namespace abasis
