#include "achset/numeric.hpp"

#include <stdexcept>
#include <string>

namespace achset {

BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("Rational: malformed '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("Rational: malformed '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    BigInt v;
    v.set_str(part[0] == '+' ? part.substr(1) : part, 10);
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  const BigInt scale = [&] {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return p;
  }();
  BigInt num;
  mpz_abs(num.get_mpz_t(), value_.get_num_mpz_t());
  num *= scale;
  BigInt scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), value_.get_den_mpz_t());

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  const bool negative = sgn(value_) < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.value_) == 0) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow2q(std::int64_t e) {
  if (e >= 0) return Rational(pow2(static_cast<std::uint64_t>(e)));
  return Rational(BigInt(1), pow2(static_cast<std::uint64_t>(-e)));
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
    case Comparison::Undecided: return "Undecided";
  }
  return "?";
}

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::scale(const Rational& factor) const {
  if (factor.sign() < 0) return Enclosure(hi_ * factor, lo_ * factor);
  return Enclosure(lo_ * factor, hi_ * factor);
}

Comparison compare(const Enclosure& x, const Enclosure& y) {
  if (x.hi() < y.lo()) return Comparison::Less;
  if (x.lo() > y.hi()) return Comparison::Greater;
  if (x.is_exact() && y.is_exact()) return Comparison::Equal;
  return Comparison::Undecided;
}

}  // namespace achset
