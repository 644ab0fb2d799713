#pragma once

#include <cstddef>
#include <vector>

#include "achset/intervals.hpp"
#include "achset/numeric.hpp"
#include "achset/series.hpp"
#include "achset/subsums.hpp"

// Geometry of Marchwicki-Miska achievement sets through their N_k-th
// iterates. Everything here is exact and therefore requires an eventually
// periodic group-size sequence; rule-based parameters are rejected with
// std::invalid_argument.

namespace achset {

/// M_k = I_{N_k} intersected with [0, r_{N_{k-1}}], from its closed form:
/// 2^{n_k-1} short intervals on each side of the block
/// [2^{n_k} q_k, (4 * 2^{n_k} - 1) q_k + r_{N_k}].
IntervalUnion mk_window(const MMParams& params, std::size_t k);

/// The same window cut directly out of the enumerated iterate.
IntervalUnion mk_window_direct(const MMParams& params, std::size_t k, std::size_t cap = kDefaultEnumerationCap);

struct LevelCensus {
  std::size_t k = 0;
  BigInt gap_count;        ///< new gaps at level k, 2^{n_k} prod_{j<k} (2^{n_j} + 1)
  Rational gap_length;     ///< 2 q_k - r_{N_k}, shared by all new gaps
  BigInt comp_count;       ///< components of I_{N_k}, prod_{j<=k} (2^{n_j} + 1)
  BigInt new_comp_count;   ///< components not concentric with a parent; equals gap_count
  Rational new_comp_length;  ///< r_{N_k}
};

LevelCensus level_census(const MMParams& params, std::size_t k);

struct CensusCrossCheck {
  LevelCensus census;
  std::size_t measured_components = 0;
  std::size_t measured_new_gaps = 0;
  bool old_gaps_preserved = false;
  bool new_gap_lengths_match = false;
  bool matches = false;
};

/// Compares level_census with gaps(iterate(N_k)) minus gaps(iterate(N_{k-1})).
CensusCrossCheck census_cross_check(const MMParams& params, std::size_t k, std::size_t cap = kDefaultEnumerationCap);

/// r_0 - sum_{j<=k} (2 q_j - r_{N_j}) * card G_j, the measure of I_{N_k}.
Rational measure_E_truncated(const MMParams& params, std::size_t k);

struct EtaClass {
  std::size_t eta = 0;
  BigInt count;                ///< 1 for eta = 0, card P''_eta otherwise
  Rational e_interval_length;  ///< r_{N_eta} - sum_{i>eta} 2^{n_i+1} q_i
};

std::vector<EtaClass> eta_classes(const MMParams& params, std::size_t k_max);

/// 1 + sum_{i<k} 2^{n_i} prod_{j<i} (2^{n_j} + 1) == prod_{j<k} (2^{n_j} + 1).
/// Requires k >= 2.
bool telescoping_check(const MMParams& params, std::size_t k);

/// measure(I_{N_k}) - sum_{eta<=k} count * length: the part of the depth-k
/// cover not yet accounted for by E-intervals.
Rational boundary_residual(const MMParams& params, std::size_t k);

/// Residuals for k = 0..k_max; throws std::logic_error unless they are
/// positive and strictly decreasing.
std::vector<Rational> boundary_residual_trace(const MMParams& params, std::size_t k_max);

}  // namespace achset
