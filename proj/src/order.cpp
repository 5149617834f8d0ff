#include "abasis/order.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <fmt/format.h>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

namespace abasis {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

struct Generator {
  Int residue;
  Int value;
  bool flagged;
};

// One generator per (residue, flag) pair carrying the least value; larger
// representatives of the same pair never improve a min-plus sum.
std::vector<Generator> generators(const EPS& s) {
  const Int m = s.modulus();
  std::map<std::pair<Int, bool>, Int> best;
  auto offer = [&](Int residue, Int value, bool flagged) {
    auto [it, inserted] = best.try_emplace({residue, flagged}, value);
    if (!inserted) it->second = std::min(it->second, value);
  };
  for (Int r : s.residues()) offer(r, s.tail_start(r), true);
  for (Int f : s.exceptional()) offer(f % m, f, false);
  std::vector<Generator> out;
  for (const auto& [key, value] : best) out.push_back({key.first, value, key.second});
  return out;
}

// Min-plus dynamic programme over states (residue, uses-tail flag).
// State index: residue + modulus * flag.
class FlaggedSums {
public:
  explicit FlaggedSums(const EPS& s)
      : m_(s.modulus()), gens_(generators(s)), values_(static_cast<std::size_t>(2 * m_), kUnreached) {
    values_[0] = 0;
  }

  void step() {
    std::vector<Int> next(values_.size(), kUnreached);
    for (Int flag = 0; flag < 2; ++flag) {
      for (Int c = 0; c < m_; ++c) {
        const Int v = values_[static_cast<std::size_t>(c + m_ * flag)];
        if (v == kUnreached) continue;
        for (const Generator& g : gens_) {
          Int target = c + g.residue;
          if (target >= m_) target -= m_;
          const Int to_flag = flag | (g.flagged ? 1 : 0);
          Int& slot = next[static_cast<std::size_t>(target + m_ * to_flag)];
          slot = std::min(slot, checked_add(v, g.value));
        }
      }
    }
    values_ = std::move(next);
    ++steps_;
  }

  int steps() const { return steps_; }

  bool covers_all_residues() const {
    return std::all_of(values_.begin() + m_, values_.end(), [](Int v) { return v != kUnreached; });
  }

  // Reachability pattern, used as the key of the cycle detector.
  std::string pattern() const {
    std::string key(values_.size(), '0');
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] != kUnreached) key[i] = '1';
    }
    return key;
  }

  std::vector<Int> flagged() const {
    std::vector<Int> out(values_.begin() + m_, values_.end());
    for (Int& v : out) {
      if (v == kUnreached) v = -1;
    }
    return out;
  }

private:
  Int m_;
  std::vector<Generator> gens_;
  std::vector<Int> values_;
  int steps_ = 0;
};

OrderCertificate make_certificate(const FlaggedSums& sums, Int modulus) {
  OrderCertificate cert;
  cert.order = sums.steps();
  cert.modulus = modulus;
  cert.least_flagged_sums = sums.flagged();
  cert.coverage_threshold = *std::max_element(cert.least_flagged_sums.begin(), cert.least_flagged_sums.end());
  return cert;
}

}  // namespace

BasisDecision decide_basis(const EPS& s, const OrderOptions& options) {
  FlaggedSums sums(s);
  std::unordered_map<std::string, int> seen;
  seen.emplace(sums.pattern(), 0);
  for (;;) {
    if (options.h_max && sums.steps() >= *options.h_max) {
      throw CapacityError(fmt::format("no decision within {} summands", *options.h_max));
    }
    sums.step();
    if (sums.covers_all_residues()) return {true, make_certificate(sums, s.modulus()), std::nullopt};
    auto [it, inserted] = seen.emplace(sums.pattern(), sums.steps());
    if (!inserted) return {false, std::nullopt, CycleProof{it->second, sums.steps()}};
  }
}

bool is_basis(const EPS& s) { return decide_basis(s).is_basis; }

OrderCertificate order(const EPS& s, const OrderOptions& options) {
  BasisDecision decision = decide_basis(s, options);
  if (!decision.is_basis) throw NotABasis(fmt::format("{} is not an additive basis", s.to_string()));
  return std::move(*decision.certificate);
}

OrderCertificate order_at_most(const EPS& s, const OrderOptions& options) {
  return order(set_union(s, EPS::finite({0})), options);
}

std::vector<Int> least_flagged_sums(const EPS& s, int h) {
  if (h < 1) throw PreconditionError("h must be at least 1");
  FlaggedSums sums(s);
  while (sums.steps() < h) sums.step();
  return sums.flagged();
}

Int effective_bound(const EPS& s, int h) {
  const std::vector<Int> minima = least_flagged_sums(s, h);
  if (std::find(minima.begin(), minima.end(), -1) != minima.end()) {
    throw PreconditionError(fmt::format("{}-fold sums of {} are not cofinite", h, s.to_string()));
  }
  const Int n0 = *std::max_element(minima.begin(), minima.end());
  if (n0 == 0) return 0;

  // h-fold sums built only from exceptional elements, below n0.
  const auto size = static_cast<std::size_t>(n0);
  boost::dynamic_bitset<> exceptional_sums(size);
  exceptional_sums.set(0);
  for (int k = 0; k < h; ++k) {
    boost::dynamic_bitset<> next(size);
    for (Int f : s.exceptional()) {
      if (f >= n0) break;
      next |= exceptional_sums << static_cast<std::size_t>(f);
    }
    exceptional_sums = std::move(next);
  }

  const Int m = s.modulus();
  for (Int n = n0 - 1; n >= 0; --n) {
    const bool covered = n >= minima[static_cast<std::size_t>(n % m)] || exceptional_sums.test(static_cast<std::size_t>(n));
    if (!covered) return n + 1;
  }
  return 0;
}

std::vector<bool> sumset_membership_table(const EPS& s, int h, Int bound) {
  if (h < 1) throw PreconditionError("h must be at least 1");
  const auto size = static_cast<std::size_t>(bound + 1);
  const std::vector<Int> elements = s.enumerate(bound);
  boost::dynamic_bitset<> reach(size);
  reach.set(0);
  for (int k = 0; k < h; ++k) {
    boost::dynamic_bitset<> next(size);
    for (Int a : elements) next |= reach << static_cast<std::size_t>(a);
    reach = std::move(next);
  }
  std::vector<bool> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = reach.test(i);
  return out;
}

}  // namespace abasis
