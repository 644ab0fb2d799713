#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "achset/numeric.hpp"

namespace achset {

/// Closed interval [left, right]; degenerate points are allowed.
class Interval {
 public:
  /// Throws std::invalid_argument when left > right.
  Interval(Rational left, Rational right);

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }
  Rational length() const { return right_ - left_; }
  Rational center() const { return (left_ + right_) / 2; }
  bool contains(const Rational& x) const { return left_ <= x && x <= right_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational left_;
  Rational right_;
};

/// Open interval (left, right) with left < right; used for gaps.
struct Gap {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Finite union of closed intervals kept as its connectivity components:
/// sorted, pairwise disjoint, separated by gaps of positive length.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  const std::vector<Interval>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  /// Requires a nonempty union.
  const Rational& min() const;
  const Rational& max() const;

  bool contains(const Rational& x) const;
  /// Subset test: every component of `other` lies inside one of ours.
  bool contains(const IntervalUnion& other) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  friend IntervalUnion normalize(std::vector<Interval> raw);
  friend IntervalUnion translate_union(std::span<const Rational>, const Rational&);

  explicit IntervalUnion(std::vector<Interval> components) : components_(std::move(components)) {}

  std::vector<Interval> components_;
};

/// Merges overlapping and touching intervals into connectivity components.
IntervalUnion normalize(std::vector<Interval> raw);

Rational measure(const IntervalUnion& u);

/// Open gaps between consecutive components, in increasing order. Throws
/// std::invalid_argument unless u lies inside `ambient`.
std::vector<Gap> gaps(const IntervalUnion& u, const Interval& ambient);

/// Longest component length. Throws std::invalid_argument on an empty union.
Rational norm(const IntervalUnion& u);

/// normalize({[f, f + length] : f in offsets}) in one sweep. Offsets must be
/// ascending (std::invalid_argument otherwise) and length non-negative.
IntervalUnion translate_union(std::span<const Rational> offsets, const Rational& length);

IntervalUnion intersect(const IntervalUnion& u, const Interval& window);

}  // namespace achset
