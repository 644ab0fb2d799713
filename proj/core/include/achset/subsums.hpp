#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "achset/intervals.hpp"
#include "achset/numeric.hpp"
#include "achset/series.hpp"

namespace achset {

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 22;

/// Raised when an enumeration would hold more than `cap` values.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, std::size_t depth);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// F_n: the distinct sums of subsets of a_1..a_n, ascending.
struct SubsumSet {
  std::size_t depth = 0;
  std::vector<Rational> values;
};

/// F_{k+1} = F_k u (F_k + a_{k+1}) by sorted merge with deduplication. The
/// merge runs on integers over the common denominator of the terms.
SubsumSet initial_subsums(std::span<const Rational> terms, std::size_t cap = kDefaultEnumerationCap);
SubsumSet initial_subsums(const Series& s, std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Maximal eps-close block: values[first..last] (inclusive).
struct EpsilonBlock {
  std::size_t first;
  std::size_t last;
};

struct EpsilonDecomposition {
  Rational epsilon;
  std::vector<EpsilonBlock> blocks;
};

/// Splits a sorted nonempty list wherever consecutive values differ by more
/// than eps. Throws std::invalid_argument on empty input or negative eps.
EpsilonDecomposition epsilon_decompose(std::span<const Rational> sorted, const Rational& eps);

/// Largest stretch (max - min) over the maximal eps-close blocks.
Rational delta(std::span<const Rational> sorted, const Rational& eps);
/// Uses eps.lo(): a smaller eps only splits blocks further, so the result is
/// a lower bound for every eps in the enclosure.
Rational delta(std::span<const Rational> sorted, const Enclosure& eps);

/// I_n = union over f in F_n of [f, f + r_n]. Throws std::invalid_argument
/// when r_n has no exact value.
IntervalUnion iterate(const Series& s, std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Iterates built with r_n.lo (inner) and r_n.hi (outer).
struct IterateBracket {
  IntervalUnion inner;
  IntervalUnion outer;
};
IterateBracket iterate_enclosed(const Series& s, std::size_t n, std::size_t cap = kDefaultEnumerationCap,
                                unsigned depth = kDefaultRemainderDepth);

enum class Verdict {
  FiniteSet,
  MultiIntervalCertified,
  CantorCertified,
  CantorvalConsistent,
  CantorConsistent,
  Inconclusive,
};

std::string_view to_string(Verdict v);

struct ClassificationEvidence {
  std::size_t depth = 0;
  /// First gap found in an iterate, with the depth at which it appeared.
  /// Iterates contain E, so this is an E-gap.
  std::optional<Gap> gap_witness;
  std::size_t witness_depth = 0;
  std::vector<Rational> norm_trace;   ///< ||I_n||, n = 0..depth
  std::vector<Rational> delta_trace;  ///< Delta_{r_n} F_n, n = 0..depth
  std::vector<std::size_t> component_trace;
  Verdict verdict = Verdict::Inconclusive;
  /// Positive constant bounding the tail of the delta trace from below
  /// (CantorvalConsistent only).
  std::optional<Rational> delta_lower_bound;
  std::string rationale;
};

/// Finite-depth evidence toward the topological type of E(a_n). Only
/// descriptor-level tail proofs yield Certified verdicts; scans yield
/// Consistent ones.
ClassificationEvidence classify_evidence(const Series& s, std::size_t depth,
                                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace achset
