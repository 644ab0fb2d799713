#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "achset/numeric.hpp"
#include "achset/series.hpp"

namespace achset {

/// Largest remainder refinement depth tried before giving up on an index.
inline constexpr unsigned kDefaultRefinementBudget = 64;

enum class KakeyaTag { K, Kc };

/// Raised when a_n versus r_n stays undecided after the refinement budget.
class UndecidedError : public std::runtime_error {
 public:
  UndecidedError(std::size_t index, unsigned budget);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct KakeyaProfile {
  std::size_t horizon = 0;
  std::vector<KakeyaTag> membership;  ///< membership[i-1] tags index i

  bool in_k(std::size_t i) const { return membership.at(i - 1) == KakeyaTag::K; }
  std::vector<std::size_t> k_indices() const;
  std::vector<std::size_t> kc_indices() const;
};

/// Tags every index 1..horizon: K iff a_i > r_i, Kc iff a_i <= r_i (equality
/// belongs to Kc). Remainder enclosures are refined by doubling the depth up
/// to `budget`; throws UndecidedError otherwise.
KakeyaProfile kakeya_profile(const Series& s, std::size_t horizon, unsigned budget = kDefaultRefinementBudget);

using IndexPredicate = std::function<bool(std::size_t)>;

struct DensitySample {
  std::size_t n;
  std::size_t count;            ///< card B_{<=n}
  std::size_t reference_count;  ///< card A_{<=n} (n itself without a reference set)
  Rational ratio;
};

struct DensityReport {
  std::size_t horizon = 0;
  std::vector<DensitySample> samples;
  Rational ratio_at_horizon;
  Rational running_min;
  Rational running_max;
  /// min / max of the sampled ratios with n >= horizon / 2
  Rational lower_estimate;
  Rational upper_estimate;
};

/// card B_{<=n} / card A_{<=n} (A = all of N by default) along `schedule`
/// (every n in 1..horizon when empty). Samples where A is still empty are
/// skipped; throws std::invalid_argument if A is empty up to the horizon.
DensityReport density(const IndexPredicate& set, std::size_t horizon,
                      const std::optional<IndexPredicate>& reference = std::nullopt,
                      std::span<const std::size_t> schedule = {});

/// Positive integer sequence m_n, n >= 1.
using IntegerSequence = std::function<std::uint64_t(std::size_t)>;

inline constexpr std::size_t kDefaultScanBudget = std::size_t{1} << 24;

/// Minimal schedule with  m_n >= (k+1)^2  for all n > N_k  and
/// N_k - N_{k-1} >= 3. Groups 1..k_max are stored explicitly; later groups
/// continue with the same minimal rule. Throws std::runtime_error when m_n
/// does not reach a threshold within `scan_budget` indices, and
/// std::invalid_argument when m_n is not positive and non-decreasing over the
/// scanned range.
MMParams choose_schedule(const IntegerSequence& m, std::size_t k_max, std::size_t scan_budget = kDefaultScanBudget);

struct DensityRatio {
  std::size_t n = 0;
  std::size_t group = 0;      ///< k_n with N_{k-1} < n <= N_k
  std::size_t kc_count = 0;   ///< card{i <= n : a_i <= r_i}
  Rational ratio;             ///< kc_count / m_n
  Rational bound;             ///< 2 k_n / k_n^2
};

/// Ratio of reversed Kakeya conditions to m_n for an MM series, together
/// with the bound 2k/k^2. Throws std::invalid_argument for non-MM series.
DensityRatio reversed_condition_ratio(const Series& s, const IntegerSequence& m, std::size_t n,
                            unsigned budget = kDefaultRefinementBudget);

/// reversed_condition_ratio for every n in 1..horizon from a single profile.
std::vector<DensityRatio> reversed_condition_ratios(const Series& s, const IntegerSequence& m, std::size_t horizon,
                                          unsigned budget = kDefaultRefinementBudget);

}  // namespace achset
