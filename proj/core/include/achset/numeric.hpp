#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace achset {

using BigInt = mpz_class;

/// 2^e as an arbitrary-precision integer (e >= 0).
BigInt pow2(std::uint64_t e);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Equality and ordering are therefore structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(implicit)
      : value_(std::is_signed_v<T> ? mpq_class(static_cast<long>(value))
                                   : mpq_class(static_cast<unsigned long>(value))) {}

  Rational(const BigInt& integer) : value_(integer) {}  // NOLINT(implicit)

  /// Unevaluated GMP integer expressions such as `3 * pow2(n) - 1`.
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& integer) : value_(BigInt(integer)) {}  // NOLINT(implicit)

  /// Throws std::domain_error when the denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p", "-p" or "p/q" (q != 0, not necessarily reduced).
  /// Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the value is an integer.
  std::string str() const { return value_.get_str(); }

  /// Decimal expansion truncated toward zero after `digits` fractional
  /// digits. Only used at serialization boundaries.
  std::string to_decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class canonical) : value_(std::move(canonical)) {}

  mpq_class value_;
};

Rational abs(const Rational& x);

/// 2^e for any signed exponent.
Rational pow2q(std::int64_t e);

/// Base raised to a non-negative integer power.
Rational pow(const Rational& base, std::uint64_t exponent);

/// Four-state outcome of comparing two enclosures.
enum class Comparison { Less, Equal, Greater, Undecided };

std::string_view to_string(Comparison c);

/// Closed rational interval [lo, hi] known to contain some real value.
class Enclosure {
 public:
  /// Exact enclosure of a single value.
  Enclosure(const Rational& value) : lo_(value), hi_(value) {}  // NOLINT(implicit)

  /// Throws std::invalid_argument when lo > hi.
  Enclosure(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_exact() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }

  /// Multiplies both bounds; a negative factor swaps them.
  Enclosure scale(const Rational& factor) const;

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// Less iff x.hi < y.lo, Greater iff x.lo > y.hi, Equal iff both are the
/// same exact value, Undecided otherwise.
Comparison compare(const Enclosure& x, const Enclosure& y);

}  // namespace achset
