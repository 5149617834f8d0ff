#include "abasis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <numeric>

#include "abasis/dessentializer.hpp"
#include "abasis/essentials.hpp"
#include "abasis/order.hpp"
#include "abasis/primes.hpp"
#include "abasis/progression.hpp"

namespace abasis::oracle {

namespace {

// Own gcd, kept separate from the library's on purpose.
Int euclid(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int gcd_of_gaps(std::span<const Int> values) {
  Int g = 0;
  for (std::size_t i = 1; i < values.size(); ++i) g = euclid(g, values[i] - values[0]);
  return g;
}

// Plain bitset over [0, size).
class Bits {
public:
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  // *this |= other << shift, truncated to size.
  void or_shifted(const Bits& other, std::size_t shift) {
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (std::size_t i = words_.size(); i-- > word_shift;) {
      const std::size_t src = i - word_shift;
      std::uint64_t w = other.words_[src] << bit_shift;
      if (bit_shift != 0 && src > 0) w |= other.words_[src - 1] >> (64 - bit_shift);
      words_[i] |= w;
    }
    trim();
  }

private:
  void trim() {
    if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

std::string join_parts(const std::vector<std::vector<Int>>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.push_back(fmt::format("{{{}}}", fmt::join(p, ",")));
  return fmt::format("[{}]", fmt::join(out, " "));
}

}  // namespace

NaiveOrder naive_order(std::span<const Int> elements, Int bound, int h_max, Int window) {
  if (window < 1 || bound < window) throw PreconditionError("naive_order needs 1 <= window <= bound");
  if (!std::is_sorted(elements.begin(), elements.end())) throw PreconditionError("elements must be ascending");
  if (elements.empty()) return {Verdict::NotABasis, 0};
  if (elements.back() > bound) throw PreconditionError("elements exceed the bound");
  if (elements.size() >= 2 && gcd_of_gaps(elements) > 1) return {Verdict::NotABasis, 0};

  const auto size = static_cast<std::size_t>(bound + 1);
  Bits base(size);
  for (Int x : elements) base.set(static_cast<std::size_t>(x));
  Bits level = base;
  for (int h = 1; h <= h_max; ++h) {
    if (h > 1) {
      Bits next(size);
      for (Int x : elements) next.or_shifted(level, static_cast<std::size_t>(x));
      level = std::move(next);
    }
    bool covered = true;
    for (Int n = bound - window + 1; covered && n <= bound; ++n) covered = level.test(static_cast<std::size_t>(n));
    if (covered) return {Verdict::Order, h};
  }
  return {Verdict::Inconclusive, 0};
}

// Past h·(t + m + max F) some summand of any h-sum sits at least m into the
// tail, so membership in hS is m-periodic there.
Int safe_bound(const EPS& s, int h_max, Int window) {
  const Int top_f = s.exceptional().empty() ? 0 : s.exceptional().back();
  return window + static_cast<Int>(h_max) * (s.threshold() + s.modulus() + top_f) + 1;
}

std::vector<std::vector<Int>> naive_essential_subsets(const EPS& s, std::size_t cap) {
  // Tail elements never belong to a minimal part: each is congruent to a
  // surviving tail element modulo m, so the candidates are the exceptional ones.
  const std::vector<Int>& pool = s.exceptional();
  if (pool.size() > cap) throw CapacityError(fmt::format("{} candidates exceed the cap of {}", pool.size(), cap));

  std::vector<std::uint32_t> killers;
  const std::uint32_t full = (std::uint32_t{1} << pool.size()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::vector<Int> part;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) part.push_back(pool[i]);
    }
    if (!is_basis(remove_finite(s, part))) killers.push_back(mask);
  }

  std::vector<std::vector<Int>> out;
  for (std::uint32_t mask : killers) {
    const bool minimal = std::none_of(killers.begin(), killers.end(), [&](std::uint32_t other) {
      return other != mask && (other & mask) == other;
    });
    if (!minimal) continue;
    std::vector<Int> part;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) part.push_back(pool[i]);
    }
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EmpiricalProfile empirical_profile(std::span<const Int> values, Int bound) {
  if (values.size() < 2) throw PreconditionError("empirical profile needs at least two elements");
  if (!std::is_sorted(values.begin(), values.end())) throw PreconditionError("stream must be ascending");
  EmpiricalProfile out;
  out.gcd = gcd_of_gaps(values);

  // Suffix gcd over the upper half of the sample; falls back to the last two
  // elements when the upper half is too thin.
  auto upper = std::lower_bound(values.begin(), values.end(), bound / 2);
  if (values.end() - upper < 2) upper = values.end() - 2;
  out.raison = gcd_of_gaps(std::span<const Int>(upper, values.end()));
  if (out.raison == 0) out.raison = 1;
  out.offset = values.back() % out.raison;
  for (Int x : values) {
    if (x % out.raison != out.offset) out.reservoir.push_back(x);
  }
  return out;
}

EPS random_basis(std::mt19937_64& rng) {
  auto uniform = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  for (;;) {
    const Int m = uniform(1, 40);
    // Pick a common step for the tail classes; a step ≥ 2 makes the tail alone
    // a non-basis, so the exceptional elements carry essential structure.
    std::vector<Int> steps;
    for (Int d = 1; d <= m; ++d) {
      if (m % d == 0) steps.push_back(d);
    }
    Int step = 1;
    if (uniform(0, 9) < 7 && steps.size() > 1) step = steps[static_cast<std::size_t>(uniform(1, static_cast<Int>(steps.size()) - 1))];
    const Int anchor = uniform(0, step - 1);
    std::vector<Int> residues;
    for (Int r = anchor; r < m; r += step) {
      if (uniform(0, 2) != 0) residues.push_back(r);
    }
    if (residues.empty()) residues.push_back(anchor);

    const Int threshold = uniform(0, 2 * m);
    std::vector<Int> exceptional;
    const Int count = uniform(0, 8);
    const Int spread = std::max<Int>(3 * m, 12);
    for (Int i = 0; i < count; ++i) exceptional.push_back(uniform(0, spread));
    if (step == m && uniform(0, 1) == 0) {
      // One element off the class for each prime p | m, on the class for the
      // others: each of them is then essential with divisor p.
      exceptional.clear();
      for (Int p : prime_divisors(m)) exceptional.push_back(anchor + (m / p) * uniform(1, p - 1) + m * uniform(0, 2));
    }

    const EPS s = canonicalize({m, residues, threshold, exceptional});
    if (euclid(gcd_of_gaps(s.witnesses()), s.modulus()) != 1) continue;
    try {
      const BasisDecision decision = decide_basis(s, {.h_max = 20});
      if (decision.is_basis && decision.certificate->order <= 20) return s;
    } catch (const CapacityError&) {
      // order above 20; draw again
    }
  }
}

InstanceReport check_instance(const EPS& s) {
  InstanceReport out;
  out.set = s.to_string();
  auto fail = [&](std::string what) { out.property_failures.push_back(std::move(what)); };

  try {
    // Basicity criterion: gcd of differences 1 ⟺ basis, on S and on S minus each part.
    auto criterion = [&](const EPS& x, const char* which) {
      if ((gcd_of_differences(x) == 1) != is_basis(x)) fail(fmt::format("gcd criterion disagrees on {}", which));
    };
    criterion(s, "S");

    const EssentialProfile ess = essential_elements(s);
    for (std::size_t i = 0; i < ess.divisors.size(); ++i) {
      for (std::size_t j = i + 1; j < ess.divisors.size(); ++j) {
        if (std::gcd(ess.divisors[i], ess.divisors[j]) != 1) fail("associated divisors not pairwise coprime");
      }
    }
    if (ess.module % ess.q != 0) fail("q does not divide the module");

    for (const BoundReport& r : {audit_order_sandwich(s), audit_divisor_sandwich(s), audit_prime_sum_bound(s)}) {
      if (!r.holds()) fail(fmt::format("{} violated", r.name));
    }

    const auto parts = essential_subsets(s);
    const PartCount count = audit_part_count(s);
    if (!count.holds()) fail("essential parts outside the reservoir or too many");
    for (const auto& part : parts) criterion(remove_finite(s, part), "S minus a part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (!audit_part_coprimality(s, parts[i], parts[j]).holds()) fail("divisors of two parts not coprime");
      }
    }

    const ProgressionProfile profile = raison_profile(s);
    if (raison_of(profile.dessentialized) != 1) fail("dessentialised set has raison above 1");
    const DecompositionAudit dec = audit_decomposition(s, profile.raison, profile.offset, profile.dessentialized);
    if (!dec.consistent() || !dec.same_raison) fail("decomposition audit inconsistent");

    if (!delta_bound(s).holds) fail("delta exceeds its bound");
    dessentialize_general(s);  // asserts its own invariants

    // Engine vs oracle.
    const int engine_order = order(s).order;
    const Int window = 2 * s.modulus();
    const int h_max = 25;
    const Int bound = safe_bound(s, h_max, window);
    const NaiveOrder naive = naive_order(s.enumerate(bound), bound, h_max, window);
    if (naive.verdict == Verdict::Order) {
      out.order_conclusive = true;
      if (naive.order != engine_order) {
        out.disagreements.push_back(fmt::format("order: engine {} oracle {}", engine_order, naive.order));
      }
    } else if (naive.verdict == Verdict::NotABasis) {
      out.disagreements.push_back("oracle says not a basis");
    }

    if (s.exceptional().size() <= 12) {
      out.subsets_compared = true;
      auto engine_parts = parts;
      std::sort(engine_parts.begin(), engine_parts.end());
      const auto naive_parts = naive_essential_subsets(s, 12);
      if (engine_parts != naive_parts) {
        out.disagreements.push_back(
            fmt::format("essential parts: engine {} oracle {}", join_parts(engine_parts), join_parts(naive_parts)));
      }
    }
  } catch (const std::exception& e) {
    fail(fmt::format("exception: {}", e.what()));
  }
  return out;
}

BatchReport check_random(std::uint64_t seed, int iterations) {
  BatchReport out;
  out.seed = seed;
  out.iterations = iterations;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < iterations; ++i) {
    InstanceReport r = check_instance(random_basis(rng));
    out.property_failures += static_cast<int>(r.property_failures.size());
    out.disagreements += static_cast<int>(r.disagreements.size());
    out.order_comparisons += r.order_conclusive ? 1 : 0;
    out.subset_comparisons += r.subsets_compared ? 1 : 0;
    if (!r.property_failures.empty() || !r.disagreements.empty()) out.failing.push_back(std::move(r));
  }
  return out;
}

}  // namespace abasis::oracle
