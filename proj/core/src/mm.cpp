#include "achset/mm.hpp"

#include <algorithm>

namespace achset {

GroupSpec group_terms(int n) {
  if (n < 1) throw std::invalid_argument("group_terms: n must be >= 1");
  GroupSpec g{n, {}};
  for (int j = 1; j <= n + 2; ++j) g.terms.push_back(group_term(n, j));
  return g;
}

std::vector<BigInt> group_subsums_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("group_subsums_closed_form: n must be >= 1");
  const BigInt p = pow2(static_cast<std::uint64_t>(n));
  const BigInt half = pow2(static_cast<std::uint64_t>(n - 1));
  std::vector<BigInt> out;
  for (BigInt j = 1; j <= half; ++j) out.push_back(2 * j - 2);
  for (BigInt j = p; j <= 4 * p - 1; ++j) out.push_back(j);
  for (BigInt j = 1; j <= half; ++j) out.push_back(4 * p - 1 + 2 * j);
  return out;
}

std::vector<Rational> ck_set(const MMParams& params, std::size_t k) {
  const int n = params.n(k);
  const Rational q = params.q(k);
  std::vector<Rational> out;
  for (BigInt p = pow2(static_cast<std::uint64_t>(n)); p <= pow2(static_cast<std::uint64_t>(n) + 2) - 1; ++p) {
    out.push_back(Rational(p) * q);
  }
  return out;
}

bool ladder_step_identity(const MMParams& params, std::size_t k) {
  const int next = params.n(k + 1);
  const Rational q_next = params.q(k + 1);
  return params.q(k) + Rational(pow2(static_cast<std::uint64_t>(next))) * q_next ==
         Rational(pow2(static_cast<std::uint64_t>(next) + 2)) * q_next;
}

namespace {

Rational gamma_min(const MMParams& p, std::size_t k) {
  Rational s;
  for (std::size_t i = 1; i <= k; ++i) s += Rational(pow2(static_cast<std::uint64_t>(p.n(i)))) * p.q(i);
  return s;
}

Rational gamma_max(const MMParams& p, std::size_t k) {
  Rational s;
  for (std::size_t i = 1; i <= k; ++i) s += Rational(pow2(static_cast<std::uint64_t>(p.n(i)) + 2) - 1) * p.q(i);
  return s;
}

}  // namespace

Ladder build_ladder(const MMParams& params, std::size_t k, std::size_t cap) {
  if (k < 1) throw std::invalid_argument("build_ladder: k must be >= 1");
  Ladder ladder;
  ladder.k = k;
  ladder.min = gamma_min(params, k);
  ladder.max = gamma_max(params, k);
  const Rational qk = params.q(k);

  // Elements of D_k are multiples of q_k; span / q_k + 1 bounds its size.
  const Rational span_units = (ladder.max - ladder.min) / qk;
  if (!span_units.is_integer()) throw LadderError("build_ladder: D_k endpoints are not multiples of q_k");
  if (span_units.numerator() + 1 > BigInt(static_cast<unsigned long>(cap))) {
    for (std::size_t j = 1; j < k; ++j) {
      if (!ladder_step_identity(params, j)) {
        throw LadderError("build_ladder: step identity fails between levels " + std::to_string(j) + " and " +
                          std::to_string(j + 1));
      }
    }
    return ladder;
  }

  // D_j held as integers in units of q_j; C_j is the integer range [lo, hi].
  std::vector<BigInt> units;
  for (std::size_t j = 1; j <= k; ++j) {
    const auto n = static_cast<std::uint64_t>(params.n(j));
    const BigInt lo = pow2(n);
    const BigInt hi = pow2(n + 2) - 1;
    ladder.C_blocks.push_back(ck_set(params, j));
    if (j == 1) {
      for (BigInt p = lo; p <= hi; ++p) units.push_back(p);
      continue;
    }
    const Rational scale_q = params.q(j - 1) / params.q(j);
    if (!scale_q.is_integer()) throw LadderError("build_ladder: q_{j-1} / q_j is not an integer");
    const BigInt scale = scale_q.numerator();
    std::vector<BigInt> next;
    for (const auto& d : units) {
      const BigInt base = d * scale;
      BigInt from = base + lo;
      if (!next.empty() && from <= next.back()) from = next.back() + 1;
      for (BigInt v = from; v <= base + hi; ++v) next.push_back(v);
    }
    units = std::move(next);
  }

  ladder.materialized = true;
  ladder.D.reserve(units.size());
  for (const auto& u : units) ladder.D.push_back(Rational(u) * qk);
  for (std::size_t i = 1; i < ladder.D.size(); ++i) {
    Rational gap = ladder.D[i] - ladder.D[i - 1];
    if (ladder.max_gap < gap) ladder.max_gap = std::move(gap);
  }
  if (qk < ladder.max_gap) throw LadderError("build_ladder: consecutive gap exceeds q_k");
  if (ladder.D.front() != ladder.min || ladder.D.back() != ladder.max) {
    throw LadderError("build_ladder: min/max of D_k disagree with the closed forms");
  }
  return ladder;
}

bool ladder_within_subsums(const Ladder& ladder, const SubsumSet& f) {
  return std::includes(f.values.begin(), f.values.end(), ladder.D.begin(), ladder.D.end());
}

Rational delta_lower_bound(const MMParams& params, std::size_t k) {
  Rational s;
  for (std::size_t i = 1; i <= k; ++i) s += Rational(3 * pow2(static_cast<std::uint64_t>(params.n(i))) - 1) * params.q(i);
  return s;
}

DeltaCheck check_delta_bound(const MMParams& params, std::size_t k, std::size_t cap) {
  const Series s = mm_series(params);
  const auto f = initial_subsums(s, params.N(k), cap);
  DeltaCheck c;
  c.bound = delta_lower_bound(params, k);
  c.epsilon = params.group_remainder(k).lo();
  c.delta = delta(f.values, c.epsilon);
  c.holds = c.delta >= c.bound;
  return c;
}

RemainderBracket remainder_bracket(const MMParams& params, std::size_t k, unsigned budget) {
  if (k < 1) throw std::invalid_argument("remainder_bracket: k must be >= 1");
  const Rational qk = params.q(k);
  RemainderBracket b{qk, 2 * qk, params.group_remainder(k, 1), false};
  unsigned depth = 1;
  for (;;) {
    b.remainder = params.group_remainder(k, depth);
    const auto& r = b.remainder;
    if (qk < r.lo() && r.hi() < b.upper) {
      b.holds = true;
      return b;
    }
    if (r.hi() <= qk || b.upper <= r.lo()) return b;
    if (depth >= budget) throw UndecidedError(params.N(k), budget);
    depth = std::min(budget, depth * 2);
  }
}

}  // namespace achset
