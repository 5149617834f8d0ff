#include "abasis/eps.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>

namespace abasis {

namespace {

void sort_unique(std::vector<Int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has_residue(const std::vector<Int>& residues, Int r) {
  return std::binary_search(residues.begin(), residues.end(), r);
}

// Largest y <= x with y mod m in R, or -1 when there is none in [0, x].
Int prev_tail_position(Int x, Int m, const std::vector<Int>& residues) {
  if (x < 0) return -1;
  const Int base = x - x % m;
  auto it = std::upper_bound(residues.begin(), residues.end(), x % m);
  Int y = it != residues.begin() ? base + *std::prev(it) : base - m + residues.back();
  return y < 0 ? -1 : y;
}

// Smallest y >= x with y mod m in R.
Int next_tail_position(Int x, Int m, const std::vector<Int>& residues) {
  const Int base = x - x % m;
  auto it = std::lower_bound(residues.begin(), residues.end(), x % m);
  return it != residues.end() ? base + *it : base + m + residues.front();
}

// Shrinks m to the minimal period of R (as a subset of Z/m).
void minimize_period(Int& m, std::vector<Int>& residues) {
  for (Int p : prime_divisors(m)) {
    while (m % p == 0) {
      const Int d = m / p;
      std::vector<char> member(static_cast<std::size_t>(m), 0);
      for (Int r : residues) member[static_cast<std::size_t>(r)] = 1;
      bool invariant = true;
      for (Int r : residues) {
        if (!member[static_cast<std::size_t>((r + d) % m)]) {
          invariant = false;
          break;
        }
      }
      if (!invariant) break;
      m = d;
      for (Int& r : residues) r %= m;
      sort_unique(residues);
    }
  }
}

}  // namespace

EPS canonicalize(RawSet raw) {
  if (raw.modulus < 1) throw PreconditionError("modulus must be positive");
  if (raw.threshold < 0) throw PreconditionError("threshold must be non-negative");
  for (Int f : raw.exceptional) {
    if (f < 0) throw PreconditionError("negative element " + std::to_string(f));
  }

  EPS out;
  out.exceptional_ = std::move(raw.exceptional);
  sort_unique(out.exceptional_);
  if (raw.residues.empty()) return out;

  Int m = raw.modulus;
  std::vector<Int> residues = std::move(raw.residues);
  for (Int& r : residues) r = floor_mod(r, m);
  sort_unique(residues);
  minimize_period(m, residues);

  Int t = raw.threshold;
  auto& fs = out.exceptional_;
  std::erase_if(fs, [&](Int f) { return f >= t && has_residue(residues, f % m); });

  // Lower t while the tail position just below it is already a member.
  for (;;) {
    const Int y = prev_tail_position(t - 1, m, residues);
    if (y < 0) {
      t = 0;
      break;
    }
    auto it = std::lower_bound(fs.begin(), fs.end(), y);
    if (it == fs.end() || *it != y) {
      t = y + 1;
      break;
    }
    fs.erase(it);
    t = y;
  }
  t = next_tail_position(t, m, residues);

  out.modulus_ = m;
  out.residues_ = std::move(residues);
  out.threshold_ = t;
  return out;
}

EPS EPS::naturals() { return canonicalize({1, {0}, 0, {}}); }

EPS EPS::finite(std::vector<Int> elements) { return canonicalize({1, {}, 0, std::move(elements)}); }

EPS EPS::progression(Int step, Int offset, Int start) {
  if (step < 1) throw PreconditionError("progression step must be positive");
  return canonicalize({step, {floor_mod(offset, step)}, std::max<Int>(start, 0), {}});
}

std::optional<Int> EPS::min() const {
  std::optional<Int> best;
  if (!exceptional_.empty()) best = exceptional_.front();
  if (!residues_.empty() && (!best || threshold_ < *best)) best = threshold_;
  return best;
}

bool EPS::contains(Int n) const {
  if (n < 0) return false;
  if (n >= threshold_ && !residues_.empty() && has_residue(residues_, n % modulus_)) return true;
  return std::binary_search(exceptional_.begin(), exceptional_.end(), n);
}

std::vector<Int> EPS::enumerate(Int bound) const {
  std::vector<Int> out;
  for (Int f : exceptional_) {
    if (f > bound) break;
    out.push_back(f);
  }
  if (!residues_.empty()) {
    for (Int base = threshold_ - threshold_ % modulus_; base <= bound; base += modulus_) {
      for (Int r : residues_) {
        const Int x = base + r;
        if (x >= threshold_ && x <= bound) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int EPS::tail_start(Int residue) const { return threshold_ + floor_mod(residue - threshold_, modulus_); }

std::vector<Int> EPS::witnesses() const {
  std::vector<Int> out = exceptional_;
  for (Int r : residues_) out.push_back(tail_start(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::string EPS::to_string() const {
  std::vector<std::string> terms;
  for (Int r : residues_) {
    std::string term = fmt::format("{}N", modulus_);
    if (r != 0) term += fmt::format("+{}", r);
    const Int start = tail_start(r);
    if (start != r) term += fmt::format("@{}", start);
    terms.push_back(std::move(term));
  }
  if (!exceptional_.empty() || terms.empty()) terms.push_back(fmt::format("{{{}}}", fmt::join(exceptional_, ",")));
  return fmt::format("{}", fmt::join(terms, " U "));
}

EPS set_union(const EPS& a, const EPS& b) {
  if (a.is_finite() && b.is_finite()) {
    std::vector<Int> all = a.exceptional();
    all.insert(all.end(), b.exceptional().begin(), b.exceptional().end());
    return EPS::finite(std::move(all));
  }
  const Int m = checked_lcm(a.modulus(), b.modulus());
  const Int t = std::max(a.is_finite() ? 0 : a.threshold(), b.is_finite() ? 0 : b.threshold());
  std::vector<Int> residues;
  for (const EPS* s : {&a, &b}) {
    for (Int r : s->residues()) {
      for (Int k = r; k < m; k += s->modulus()) residues.push_back(k);
    }
  }
  std::vector<Int> below = a.enumerate(t - 1);
  const std::vector<Int> below_b = b.enumerate(t - 1);
  below.insert(below.end(), below_b.begin(), below_b.end());
  below.insert(below.end(), a.exceptional().begin(), a.exceptional().end());
  below.insert(below.end(), b.exceptional().begin(), b.exceptional().end());
  return canonicalize({m, std::move(residues), t, std::move(below)});
}

EPS translate(const EPS& s, Int k) {
  if (s.empty() || k == 0) return s;
  if (*s.min() + k < 0) throw PreconditionError("translation would produce negative elements");
  RawSet raw = s.raw();
  for (Int& r : raw.residues) r = floor_mod(r + k, raw.modulus);
  if (!raw.residues.empty()) raw.threshold += k;
  for (Int& f : raw.exceptional) f += k;
  return canonicalize(std::move(raw));
}

EPS affine_contract(const EPS& s, Int a, Int b) {
  if (a < 1) throw PreconditionError("contraction factor must be positive");
  auto conforms = [&](Int x) { return x >= b && floor_mod(x - b, a) == 0; };
  RawSet raw;
  for (Int f : s.exceptional()) {
    if (!conforms(f)) throw PreconditionError(fmt::format("element {} is not congruent to {} mod {}", f, b, a));
    raw.exceptional.push_back((f - b) / a);
  }
  if (!s.is_finite()) {
    if (s.modulus() % a != 0 || !conforms(s.threshold())) {
      throw PreconditionError(fmt::format("tail of {} is not contained in {}N+{}", s.to_string(), a, b));
    }
    raw.modulus = s.modulus() / a;
    for (Int r : s.residues()) {
      const Int start = s.tail_start(r);
      if (!conforms(start)) throw PreconditionError(fmt::format("tail residue {} is not congruent to {} mod {}", r, b, a));
      raw.residues.push_back(((start - b) / a) % raw.modulus);
    }
    raw.threshold = (s.threshold() - b) / a;
  }
  return canonicalize(std::move(raw));
}

EPS affine_image(const EPS& s, Int a, Int b) {
  if (a < 1 || b < 0) throw PreconditionError("affine image needs a >= 1 and b >= 0");
  RawSet raw;
  for (Int f : s.exceptional()) raw.exceptional.push_back(checked_add(checked_mul(a, f), b));
  if (!s.is_finite()) {
    raw.modulus = checked_mul(a, s.modulus());
    for (Int r : s.residues()) raw.residues.push_back((a * r + b) % raw.modulus);
    raw.threshold = checked_add(checked_mul(a, s.threshold()), b);
  }
  return canonicalize(std::move(raw));
}

EPS remove_finite(const EPS& s, std::span<const Int> removed) {
  if (removed.empty()) return s;
  std::vector<Int> drop(removed.begin(), removed.end());
  sort_unique(drop);
  for (Int x : drop) {
    if (!s.contains(x)) throw PreconditionError(fmt::format("{} is not an element of {}", x, s.to_string()));
  }
  if (s.is_finite()) {
    std::vector<Int> kept;
    std::set_difference(s.exceptional().begin(), s.exceptional().end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    return EPS::finite(std::move(kept));
  }
  const Int t = std::max(s.threshold(), drop.back() + 1);
  std::vector<Int> below = s.enumerate(t - 1);
  std::vector<Int> kept;
  std::set_difference(below.begin(), below.end(), drop.begin(), drop.end(), std::back_inserter(kept));
  for (Int f : s.exceptional()) {
    if (f >= t) kept.push_back(f);
  }
  return canonicalize({s.modulus(), s.residues(), t, std::move(kept)});
}

Int gcd_of_differences(std::span<const Int> values, Int period) {
  if (values.empty()) return period;
  const Int anchor = *std::min_element(values.begin(), values.end());
  Int g = period;
  for (Int v : values) g = std::gcd(g, v - anchor);
  return g;
}

Int gcd_of_differences(const EPS& s) {
  const std::vector<Int> w = s.witnesses();
  if (s.is_finite() && w.size() <= 1) return 0;
  return gcd_of_differences(w, s.is_finite() ? 0 : s.modulus());
}

bool is_equivalent_cofinite(const EPS& a, const EPS& b) {
  return a.modulus() == b.modulus() && a.residues() == b.residues();
}

bool is_equivalent_up_to_translation(const EPS& a, const EPS& b) {
  if (a.is_finite() || b.is_finite()) return a.is_finite() == b.is_finite();
  if (a.modulus() != b.modulus() || a.residues().size() != b.residues().size()) return false;
  const Int m = a.modulus();
  for (Int k = 0; k < m; ++k) {
    std::vector<Int> shifted;
    for (Int r : b.residues()) shifted.push_back((r + k) % m);
    std::sort(shifted.begin(), shifted.end());
    if (shifted == a.residues()) return true;
  }
  return false;
}

}  // namespace abasis
