#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "achset/numeric.hpp"

namespace achset {

/// Number of extra groups/terms unrolled when a remainder has no closed form.
inline constexpr unsigned kDefaultRemainderDepth = 8;

// ---------------------------------------------------------------------------
// Marchwicki-Miska groups
// ---------------------------------------------------------------------------

/// j-th term (1 <= j <= n+2) of the integer group with parameter n:
/// 2^{n+1}, 2^n + 1, then 2^{n+3-j}.
BigInt group_term(int n, int j);

/// Sum of the first i terms of the group (0 <= i <= n+2).
BigInt group_prefix_sum(int n, int i);

/// Sum of a whole group, 5 * 2^n - 1.
BigInt group_total(int n);

/// How the scale factors q_k are generated from the group sizes.
enum class QConvention {
  /// q_1 = 1, q_{k+1} = q_k / (3 * 2^{n_{k+1}}).
  Recursive,
  /// q_k = 3^{1-k} * prod_{j<k} 2^{-n_j}; coincides with Recursive for
  /// constant group sizes.
  ClosedFormAsPrinted,
};

/// Coefficient c(n) in tail sums  sum_{j>k} c(n_j) q_j.
enum class GroupWeight {
  GroupSum,       ///< 5 * 2^n - 1, the group total (gives r_{N_k})
  LeadingDouble,  ///< 2^{n+1}
};

/// Group-size rule n_k for indices beyond the explicit prefix.
using GroupRule = std::function<int(std::size_t k)>;

/// Schedule (n_k), (N_k), (q_k) defining a Marchwicki-Miska series.
///
/// The group sizes are an explicit prefix followed either by a periodic tail
/// (remainders then have closed forms) or by an arbitrary rule (remainders
/// are certified enclosures). Derived quantities are memoized behind a mutex;
/// copies share the memo.
class MMParams {
 public:
  static MMParams eventually_periodic(std::vector<int> prefix, std::vector<int> period,
                                      QConvention convention = QConvention::Recursive);
  static MMParams eventually_constant(std::vector<int> prefix, int value,
                                      QConvention convention = QConvention::Recursive);
  /// `rule(k)` supplies n_k for k > prefix.size(). Only the Recursive
  /// convention is supported since the tail bounds depend on it.
  static MMParams with_rule(std::vector<int> prefix, GroupRule rule, std::string rule_name);

  int n(std::size_t k) const;            ///< k >= 1
  std::size_t N(std::size_t k) const;    ///< N_0 = 0, N_k = N_{k-1} + n_k + 2
  Rational q(std::size_t k) const;       ///< k >= 1
  /// Group k with N_{k-1} < index <= N_k.
  std::size_t group_of(std::size_t index) const;

  bool exact() const { return !rule_; }
  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& period() const { return period_; }
  const std::string& rule_name() const { return rule_name_; }
  QConvention convention() const { return convention_; }

  /// sum_{j>k} c(n_j) q_j. Exact for periodic tails; otherwise `depth` groups
  /// are summed explicitly and the rest bounded by lambda * (6/5) * q_{k+depth}.
  Enclosure weighted_tail(std::size_t k, GroupWeight weight, unsigned depth = kDefaultRemainderDepth) const;

  /// r_{N_k}.
  Enclosure group_remainder(std::size_t k, unsigned depth = kDefaultRemainderDepth) const {
    return weighted_tail(k, GroupWeight::GroupSum, depth);
  }

 private:
  struct Memo;

  MMParams(std::vector<int> prefix, std::vector<int> period, GroupRule rule, std::string rule_name,
           QConvention convention);

  int raw_n(std::size_t k) const;
  void extend_to(std::size_t k) const;  // requires the memo lock

  std::vector<int> prefix_;
  std::vector<int> period_;
  GroupRule rule_;
  std::string rule_name_;
  QConvention convention_ = QConvention::Recursive;
  std::shared_ptr<Memo> memo_;
};

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

struct GnDescriptor {};
struct WsDescriptor {};
struct BExampleDescriptor {};
struct GeometricDescriptor {
  Rational first;
  Rational ratio;
};
struct FinitePlusGeometricDescriptor {
  std::vector<Rational> prefix;
  Rational first;
  Rational ratio;
};
struct MMDescriptor {
  MMParams params;
};

using SeriesDescriptor = std::variant<GnDescriptor, WsDescriptor, BExampleDescriptor, GeometricDescriptor,
                                      FinitePlusGeometricDescriptor, MMDescriptor>;

/// Descriptor-level statement: every index n >= from satisfies the Kakeya
/// condition a_n > r_n (kakeya == true) or its reverse (kakeya == false).
struct KakeyaTailProof {
  std::size_t from;
  bool kakeya;
};

/// Convergent series of positive non-increasing terms with 1-based indices.
class Series {
 public:
  /// Validates the descriptor; throws std::invalid_argument when it cannot
  /// describe a positive non-increasing convergent series.
  explicit Series(SeriesDescriptor descriptor);

  Rational term(std::size_t i) const;
  std::vector<Rational> terms(std::size_t n) const;  ///< a_1 .. a_n

  /// r_n = sum_{i>n} a_i; always contains the true value, exact whenever the
  /// descriptor admits a closed form.
  Enclosure remainder(std::size_t n, unsigned depth = kDefaultRemainderDepth) const;
  Enclosure sum() const { return remainder(0); }

  bool exact_remainders() const;
  const SeriesDescriptor& descriptor() const { return descriptor_; }
  std::string name() const;
  std::optional<KakeyaTailProof> kakeya_tail_proof() const;
  /// Non-null for Marchwicki-Miska series.
  const MMParams* mm_params() const;

 private:
  SeriesDescriptor descriptor_;
};

Series gn_series();
Series ws_series();
Series bexample_series();
Series geometric_series(Rational first, Rational ratio);
Series finite_plus_geometric_series(std::vector<Rational> prefix, Rational first, Rational ratio);
Series mm_series(MMParams params);

/// Throws std::logic_error naming the first i < horizon with a_i < a_{i+1}
/// or a_i <= 0.
void audit_monotone(const Series& s, std::size_t horizon);

}  // namespace achset
