#pragma once

// Brute-force oracles and random generators shared by the tests. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "achset/intervals.hpp"
#include "achset/numeric.hpp"

namespace achset::testing {

/// Every subset sum by bitmask enumeration (n <= 20).
template <class T>
std::vector<T> brute_force_subsums(std::span<const T> terms) {
  std::set<T> seen;
  const std::uint64_t subsets = std::uint64_t{1} << terms.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    T sum = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (mask >> i & 1) sum += terms[i];
    }
    seen.insert(sum);
  }
  return {seen.begin(), seen.end()};
}

inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline std::vector<Interval> random_intervals(std::mt19937_64& rng, std::size_t count) {
  std::vector<Interval> out;
  std::uniform_int_distribution<long> len(0, 12);
  for (std::size_t i = 0; i < count; ++i) {
    const Rational left = random_rational(rng, 40, 4);
    out.emplace_back(left, left + Rational(BigInt(len(rng)), BigInt(4)));
  }
  return out;
}

/// Measure of a raw family by inclusion-exclusion over all subfamilies
/// (count <= 10).
inline Rational inclusion_exclusion_measure(const std::vector<Interval>& raw) {
  Rational total;
  const std::uint64_t subsets = std::uint64_t{1} << raw.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Rational lo, hi;
    bool first = true;
    int bits = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      ++bits;
      if (first) {
        lo = raw[i].left();
        hi = raw[i].right();
        first = false;
      } else {
        lo = std::max(lo, raw[i].left());
        hi = std::min(hi, raw[i].right());
      }
    }
    if (lo < hi) total += (bits % 2 ? Rational(1) : Rational(-1)) * (hi - lo);
  }
  return total;
}

/// True when x lies in some raw interval.
inline bool raw_contains(const std::vector<Interval>& raw, const Rational& x) {
  return std::any_of(raw.begin(), raw.end(), [&](const Interval& iv) { return iv.contains(x); });
}

}  // namespace achset::testing
