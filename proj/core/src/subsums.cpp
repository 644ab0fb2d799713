#include "achset/subsums.hpp"

#include <algorithm>

namespace achset {

CapExceeded::CapExceeded(std::size_t cap, std::size_t depth)
    : std::runtime_error("subsum enumeration exceeds cap " + std::to_string(cap) + " at depth " +
                         std::to_string(depth)),
      cap_(cap) {}

namespace {

// Subsums as integers over a shared denominator.
class IntegerSubsums {
 public:
  IntegerSubsums(std::span<const Rational> terms, std::size_t cap) : cap_(cap) {
    denominator_ = 1;
    for (const auto& t : terms) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), t.raw().get_den_mpz_t());
    weights_.reserve(terms.size());
    for (const auto& t : terms) weights_.push_back(t.numerator() * (denominator_ / t.denominator()));
  }

  std::size_t depth() const { return depth_; }

  void step() {
    const BigInt& w = weights_.at(depth_);
    std::vector<BigInt> shifted(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) shifted[i] = values_[i] + w;

    std::vector<BigInt> merged;
    merged.reserve(values_.size() * 2);
    auto push = [&](BigInt&& v) {
      if (merged.empty() || merged.back() != v) merged.push_back(std::move(v));
    };
    std::size_t i = 0, j = 0;
    while (i < values_.size() || j < shifted.size()) {
      if (j == shifted.size() || (i < values_.size() && values_[i] <= shifted[j])) {
        push(std::move(values_[i++]));
      } else {
        push(std::move(shifted[j++]));
      }
    }
    ++depth_;
    if (merged.size() > cap_) throw CapExceeded(cap_, depth_);
    values_ = std::move(merged);
  }

  std::vector<Rational> rationals() const {
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.emplace_back(v, denominator_);
    return out;
  }

 private:
  std::size_t cap_;
  BigInt denominator_;
  std::vector<BigInt> weights_;
  std::vector<BigInt> values_{BigInt(0)};
  std::size_t depth_ = 0;
};

}  // namespace

SubsumSet initial_subsums(std::span<const Rational> terms, std::size_t cap) {
  IntegerSubsums f(terms, cap);
  while (f.depth() < terms.size()) f.step();
  return {terms.size(), f.rationals()};
}

SubsumSet initial_subsums(const Series& s, std::size_t n, std::size_t cap) {
  const auto terms = s.terms(n);
  return initial_subsums(terms, cap);
}

EpsilonDecomposition epsilon_decompose(std::span<const Rational> sorted, const Rational& eps) {
  if (sorted.empty()) throw std::invalid_argument("epsilon_decompose: empty set");
  if (eps.sign() < 0) throw std::invalid_argument("epsilon_decompose: negative epsilon");
  EpsilonDecomposition d{eps, {}};
  std::size_t first = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > eps) {
      d.blocks.push_back({first, i - 1});
      first = i;
    }
  }
  d.blocks.push_back({first, sorted.size() - 1});
  return d;
}

Rational delta(std::span<const Rational> sorted, const Rational& eps) {
  const auto d = epsilon_decompose(sorted, eps);
  Rational best;
  for (const auto& b : d.blocks) {
    Rational stretch = sorted[b.last] - sorted[b.first];
    if (best < stretch) best = std::move(stretch);
  }
  return best;
}

Rational delta(std::span<const Rational> sorted, const Enclosure& eps) { return delta(sorted, eps.lo()); }

IntervalUnion iterate(const Series& s, std::size_t n, std::size_t cap) {
  const Enclosure r = s.remainder(n);
  if (!r.is_exact()) throw std::invalid_argument("iterate: remainder r_" + std::to_string(n) + " is not exact");
  const auto f = initial_subsums(s, n, cap);
  return translate_union(f.values, r.lo());
}

IterateBracket iterate_enclosed(const Series& s, std::size_t n, std::size_t cap, unsigned depth) {
  const Enclosure r = s.remainder(n, depth);
  const auto f = initial_subsums(s, n, cap);
  return {translate_union(f.values, r.lo()), translate_union(f.values, r.hi())};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteSet: return "FiniteSet";
    case Verdict::MultiIntervalCertified: return "MultiIntervalCertified";
    case Verdict::CantorCertified: return "CantorCertified";
    case Verdict::CantorvalConsistent: return "CantorvalConsistent";
    case Verdict::CantorConsistent: return "CantorConsistent";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ClassificationEvidence classify_evidence(const Series& s, std::size_t depth, std::size_t cap) {
  ClassificationEvidence ev;
  ev.depth = depth;

  const auto terms = s.terms(depth);
  IntegerSubsums f(terms, cap);
  for (std::size_t n = 0; n <= depth; ++n) {
    if (n > 0) f.step();
    const auto values = f.rationals();
    const Enclosure r = s.remainder(n);
    const IntervalUnion outer = translate_union(values, r.hi());
    ev.norm_trace.push_back(norm(outer));
    ev.delta_trace.push_back(delta(values, r));
    ev.component_trace.push_back(outer.size());
    if (!ev.gap_witness && outer.size() > 1) {
      ev.gap_witness = Gap{outer.components()[0].right(), outer.components()[1].left()};
      ev.witness_depth = n;
    }
  }

  for (const auto& t : terms) {
    if (t.sign() == 0) {
      ev.verdict = Verdict::FiniteSet;
      ev.rationale = "vanishing terms";
      return ev;
    }
  }

  if (const auto proof = s.kakeya_tail_proof()) {
    if (proof->kakeya) {
      ev.verdict = Verdict::CantorCertified;
      ev.rationale = "a_n > r_n for every n >= " + std::to_string(proof->from) + ": finitely many reversed conditions";
    } else {
      ev.verdict = Verdict::MultiIntervalCertified;
      ev.rationale = "a_n <= r_n for every n >= " + std::to_string(proof->from) + ": finitely many Kakeya conditions";
    }
    return ev;
  }

  if (depth == 0) {
    ev.rationale = "depth 0 carries no evidence";
    return ev;
  }
  if (!ev.gap_witness) {
    ev.rationale = "no gap in any iterate up to depth " + std::to_string(depth);
    return ev;
  }

  const Rational peak = *std::max_element(ev.delta_trace.begin() + 1, ev.delta_trace.end());
  const std::size_t window_start = std::max<std::size_t>(1, (depth + 1) / 2);
  const auto w_begin = ev.delta_trace.begin() + static_cast<std::ptrdiff_t>(window_start);
  const Rational window_min = *std::min_element(w_begin, ev.delta_trace.end());
  const Rational window_max = *std::max_element(w_begin, ev.delta_trace.end());

  if (window_min.sign() > 0 && window_min * 4 >= peak) {
    ev.verdict = Verdict::CantorvalConsistent;
    ev.delta_lower_bound = window_min;
    ev.rationale = "gap present and delta trace stays >= " + window_min.str() + " over n >= " +
                   std::to_string(window_start);
  } else if (window_max * 16 <= peak) {
    ev.verdict = Verdict::CantorConsistent;
    ev.rationale = "gap present and delta trace decays below " + window_max.str() + " over n >= " +
                   std::to_string(window_start);
  } else {
    ev.rationale = "delta trace neither bounded away from 0 nor decaying";
  }
  return ev;
}

}  // namespace achset
