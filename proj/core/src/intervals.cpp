#include "achset/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace achset {

Interval::Interval(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right)) {
  if (right_ < left_) throw std::invalid_argument("Interval: left > right");
}

const Rational& IntervalUnion::min() const {
  if (components_.empty()) throw std::invalid_argument("IntervalUnion::min on empty union");
  return components_.front().left();
}

const Rational& IntervalUnion::max() const {
  if (components_.empty()) throw std::invalid_argument("IntervalUnion::max on empty union");
  return components_.back().right();
}

bool IntervalUnion::contains(const Rational& x) const {
  // first component whose right end is >= x
  auto it = std::lower_bound(components_.begin(), components_.end(), x,
                             [](const Interval& c, const Rational& v) { return c.right() < v; });
  return it != components_.end() && it->left() <= x;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  auto it = components_.begin();
  for (const auto& c : other.components_) {
    while (it != components_.end() && it->right() < c.left()) ++it;
    if (it == components_.end() || c.left() < it->left() || it->right() < c.right()) return false;
  }
  return true;
}

IntervalUnion normalize(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.left() < b.left() || (a.left() == b.left() && a.right() < b.right());
  });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (auto& iv : raw) {
    if (!out.empty() && iv.left() <= out.back().right()) {
      if (out.back().right() < iv.right()) out.back() = Interval(out.back().left(), iv.right());
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalUnion(std::move(out));
}

Rational measure(const IntervalUnion& u) {
  Rational total;
  for (const auto& c : u.components()) total += c.length();
  return total;
}

std::vector<Gap> gaps(const IntervalUnion& u, const Interval& ambient) {
  if (!u.empty() && (u.min() < ambient.left() || ambient.right() < u.max())) {
    throw std::invalid_argument("gaps: union is not contained in the ambient interval");
  }
  std::vector<Gap> out;
  const auto& cs = u.components();
  for (std::size_t i = 1; i < cs.size(); ++i) out.push_back({cs[i - 1].right(), cs[i].left()});
  return out;
}

Rational norm(const IntervalUnion& u) {
  if (u.empty()) throw std::invalid_argument("norm: empty union");
  Rational best = u.components().front().length();
  for (const auto& c : u.components()) {
    Rational len = c.length();
    if (best < len) best = std::move(len);
  }
  return best;
}

IntervalUnion translate_union(std::span<const Rational> offsets, const Rational& length) {
  if (length.sign() < 0) throw std::invalid_argument("translate_union: negative length");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const Rational& f = offsets[i];
    if (i > 0 && f < offsets[i - 1]) throw std::invalid_argument("translate_union: offsets not sorted");
    Rational right = f + length;
    // all translates share a length, so the running right end is the last one
    if (!out.empty() && f <= out.back().right()) {
      out.back() = Interval(out.back().left(), std::move(right));
    } else {
      out.emplace_back(f, std::move(right));
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion intersect(const IntervalUnion& u, const Interval& window) {
  std::vector<Interval> out;
  for (const auto& c : u.components()) {
    if (c.right() < window.left() || window.right() < c.left()) continue;
    out.emplace_back(std::max(c.left(), window.left()), std::min(c.right(), window.right()));
  }
  return normalize(std::move(out));
}

}  // namespace achset
