#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "achset/kakeya.hpp"
#include "achset/numeric.hpp"
#include "achset/series.hpp"
#include "achset/subsums.hpp"

namespace achset {

struct GroupSpec {
  int n = 0;
  std::vector<BigInt> terms;  ///< b_1 .. b_{n+2}, strictly decreasing
};

/// Throws std::invalid_argument for n < 1.
GroupSpec group_terms(int n);

/// All subsums of group_terms(n): the even prefix {0, 2, .., 2^n - 2}, the
/// solid block 2^n .. 4*2^n - 1, and the odd suffix 4*2^n + 1, .., 5*2^n - 1.
std::vector<BigInt> group_subsums_closed_form(int n);

/// C_k = { p q_k : 2^{n_k} <= p <= 2^{n_k+2} - 1 }, ascending.
std::vector<Rational> ck_set(const MMParams& params, std::size_t k);

/// D_1 = C_1, D_{j+1} = D_j + C_{j+1} (Minkowski sum).
struct Ladder {
  std::size_t k = 0;
  bool materialized = false;
  std::vector<Rational> D;                      ///< empty unless materialized
  std::vector<std::vector<Rational>> C_blocks;  ///< C_1 .. C_k (materialized only)
  Rational min;
  Rational max;
  Rational max_gap;  ///< largest consecutive gap of D (materialized only)
};

class LadderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds D_k, checking on construction that consecutive gaps are <= q_k and
/// that min / max match sum 2^{n_i} q_i and sum (2^{n_i+2} - 1) q_i. When
/// card D_k would exceed `cap` the levels are checked structurally instead
/// (see ladder_step_identity). Throws LadderError if any check fails.
Ladder build_ladder(const MMParams& params, std::size_t k, std::size_t cap = kDefaultEnumerationCap);

/// q_k + 2^{n_{k+1}} q_{k+1} == 2^{n_{k+1}+2} q_{k+1}: the identity that
/// carries the gap bound from D_k to D_{k+1}.
bool ladder_step_identity(const MMParams& params, std::size_t k);

/// D_k is a subset of F_{N_k} (both sorted).
bool ladder_within_subsums(const Ladder& ladder, const SubsumSet& f);

/// sum_{i<=k} (3 * 2^{n_i} - 1) q_i.
Rational delta_lower_bound(const MMParams& params, std::size_t k);

struct DeltaCheck {
  Rational bound;
  Rational epsilon;  ///< lower end of the r_{N_k} enclosure
  Rational delta;    ///< Delta_eps F_{N_k}
  bool holds = false;
};

/// Compares Delta_{r_{N_k}} F_{N_k} with delta_lower_bound (enumerates
/// F_{N_k}; throws CapExceeded beyond `cap`).
DeltaCheck check_delta_bound(const MMParams& params, std::size_t k, std::size_t cap = kDefaultEnumerationCap);

struct RemainderBracket {
  Rational lower;  ///< q_k
  Rational upper;  ///< 2 q_k
  Enclosure remainder;
  bool holds = false;  ///< q_k < r_{N_k} < 2 q_k certified
};

/// Certifies q_k < r_{N_k} < 2 q_k, refining the enclosure up to `budget`.
/// Throws UndecidedError if the enclosure stays too wide.
RemainderBracket remainder_bracket(const MMParams& params, std::size_t k, unsigned budget = kDefaultRefinementBudget);

}  // namespace achset
