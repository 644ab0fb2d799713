#include "achset/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace achset {

namespace {

void require_exact(const MMParams& p, const char* what) {
  if (!p.exact()) throw std::invalid_argument(std::string(what) + ": needs an eventually periodic group-size sequence");
}

Rational r_group(const MMParams& p, std::size_t k) {
  // r_{N_0} = r_0
  return p.group_remainder(k).lo();
}

BigInt product_plus_one(const MMParams& p, std::size_t upto) {
  BigInt prod = 1;
  for (std::size_t j = 1; j <= upto; ++j) prod *= pow2(static_cast<std::uint64_t>(p.n(j))) + 1;
  return prod;
}

}  // namespace

IntervalUnion mk_window(const MMParams& params, std::size_t k) {
  require_exact(params, "mk_window");
  if (k < 1) throw std::invalid_argument("mk_window: k must be >= 1");
  const auto n = static_cast<std::uint64_t>(params.n(k));
  const Rational q = params.q(k);
  const Rational r = r_group(params, k);
  const BigInt p = pow2(n);
  const BigInt half = pow2(n - 1);

  std::vector<Interval> raw;
  for (BigInt j = 1; j <= half; ++j) {
    const Rational left = Rational(2 * j - 2) * q;
    raw.emplace_back(left, left + r);
  }
  raw.emplace_back(Rational(p) * q, Rational(4 * p - 1) * q + r);
  for (BigInt j = 1; j <= half; ++j) {
    const Rational left = Rational(4 * p - 1 + 2 * j) * q;
    raw.emplace_back(left, left + r);
  }
  return normalize(std::move(raw));
}

IntervalUnion mk_window_direct(const MMParams& params, std::size_t k, std::size_t cap) {
  require_exact(params, "mk_window_direct");
  const Series s = mm_series(params);
  return intersect(iterate(s, params.N(k), cap), Interval(0, r_group(params, k - 1)));
}

LevelCensus level_census(const MMParams& params, std::size_t k) {
  require_exact(params, "level_census");
  if (k < 1) throw std::invalid_argument("level_census: k must be >= 1");
  LevelCensus c;
  c.k = k;
  c.gap_count = pow2(static_cast<std::uint64_t>(params.n(k))) * product_plus_one(params, k - 1);
  c.new_comp_count = c.gap_count;
  c.comp_count = product_plus_one(params, k);
  c.new_comp_length = r_group(params, k);
  c.gap_length = 2 * params.q(k) - c.new_comp_length;
  if (c.gap_length.sign() <= 0) throw std::logic_error("level_census: non-positive gap length");
  return c;
}

CensusCrossCheck census_cross_check(const MMParams& params, std::size_t k, std::size_t cap) {
  CensusCrossCheck x;
  x.census = level_census(params, k);
  const Series s = mm_series(params);
  const Interval ambient(0, r_group(params, 0));
  const auto before = gaps(iterate(s, params.N(k - 1), cap), ambient);
  const IntervalUnion now = iterate(s, params.N(k), cap);
  const auto after = gaps(now, ambient);

  x.measured_components = now.size();
  x.old_gaps_preserved = std::all_of(before.begin(), before.end(), [&](const Gap& g) {
    auto it = std::lower_bound(after.begin(), after.end(), g.left,
                               [](const Gap& a, const Rational& v) { return a.left < v; });
    return it != after.end() && *it == g;
  });
  std::vector<Gap> fresh;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh),
                      [](const Gap& a, const Gap& b) { return a.left < b.left; });
  x.measured_new_gaps = fresh.size();
  x.new_gap_lengths_match = std::all_of(fresh.begin(), fresh.end(),
                                        [&](const Gap& g) { return g.length() == x.census.gap_length; });
  x.matches = x.old_gaps_preserved && x.new_gap_lengths_match &&
              BigInt(static_cast<unsigned long>(x.measured_new_gaps)) == x.census.gap_count &&
              BigInt(static_cast<unsigned long>(x.measured_components)) == x.census.comp_count;
  return x;
}

Rational measure_E_truncated(const MMParams& params, std::size_t k) {
  require_exact(params, "measure_E_truncated");
  Rational m = r_group(params, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    const auto c = level_census(params, j);
    m -= c.gap_length * Rational(c.gap_count);
  }
  return m;
}

std::vector<EtaClass> eta_classes(const MMParams& params, std::size_t k_max) {
  require_exact(params, "eta_classes");
  std::vector<EtaClass> out;
  for (std::size_t eta = 0; eta <= k_max; ++eta) {
    EtaClass c;
    c.eta = eta;
    c.count = eta == 0 ? BigInt(1) : level_census(params, eta).new_comp_count;
    c.e_interval_length = r_group(params, eta) - params.weighted_tail(eta, GroupWeight::LeadingDouble).lo();
    if (c.e_interval_length.sign() <= 0) throw std::logic_error("eta_classes: non-positive E-interval length");
    out.push_back(std::move(c));
  }
  return out;
}

bool telescoping_check(const MMParams& params, std::size_t k) {
  if (k < 2) throw std::invalid_argument("telescoping_check: k must be >= 2");
  BigInt lhs = 1;
  BigInt running = 1;  // prod_{j<i} (2^{n_j} + 1)
  for (std::size_t i = 1; i < k; ++i) {
    const BigInt p = pow2(static_cast<std::uint64_t>(params.n(i)));
    lhs += p * running;
    running *= p + 1;
  }
  return lhs == running;
}

Rational boundary_residual(const MMParams& params, std::size_t k) {
  Rational covered;
  for (const auto& c : eta_classes(params, k)) covered += Rational(c.count) * c.e_interval_length;
  return measure_E_truncated(params, k) - covered;
}

std::vector<Rational> boundary_residual_trace(const MMParams& params, std::size_t k_max) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    Rational r = boundary_residual(params, k);
    if (r.sign() <= 0) throw std::logic_error("boundary residual not positive at k=" + std::to_string(k));
    if (!out.empty() && out.back() <= r) {
      throw std::logic_error("boundary residual not strictly decreasing at k=" + std::to_string(k));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace achset
