#include "achset/series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace achset {

// ---------------------------------------------------------------------------
// Groups

BigInt group_term(int n, int j) {
  if (n < 1) throw std::invalid_argument("group_term: n must be >= 1");
  if (j < 1 || j > n + 2) throw std::out_of_range("group_term: j outside 1..n+2");
  if (j == 1) return pow2(n + 1);
  if (j == 2) return pow2(n) + 1;
  return pow2(static_cast<std::uint64_t>(n + 3 - j));
}

BigInt group_prefix_sum(int n, int i) {
  if (n < 1) throw std::invalid_argument("group_prefix_sum: n must be >= 1");
  if (i < 0 || i > n + 2) throw std::out_of_range("group_prefix_sum: i outside 0..n+2");
  if (i == 0) return 0;
  if (i == 1) return pow2(n + 1);
  if (i == 2) return 3 * pow2(n) + 1;
  return 5 * pow2(n) + 1 - pow2(static_cast<std::uint64_t>(n + 3 - i));
}

BigInt group_total(int n) { return group_prefix_sum(n, n + 2); }

// ---------------------------------------------------------------------------
// MMParams

struct MMParams::Memo {
  std::mutex mutex;
  std::vector<int> n{0};
  std::vector<std::size_t> N{0};
  std::vector<Rational> q{Rational(0)};
};

MMParams::MMParams(std::vector<int> prefix, std::vector<int> period, GroupRule rule, std::string rule_name,
                   QConvention convention)
    : prefix_(std::move(prefix)),
      period_(std::move(period)),
      rule_(std::move(rule)),
      rule_name_(std::move(rule_name)),
      convention_(convention),
      memo_(std::make_shared<Memo>()) {
  for (int v : prefix_) {
    if (v < 1) throw std::invalid_argument("MMParams: group sizes must be >= 1");
  }
  for (int v : period_) {
    if (v < 1) throw std::invalid_argument("MMParams: group sizes must be >= 1");
  }
}

MMParams MMParams::eventually_periodic(std::vector<int> prefix, std::vector<int> period, QConvention convention) {
  if (period.empty()) throw std::invalid_argument("MMParams: empty period");
  return MMParams(std::move(prefix), std::move(period), nullptr, "", convention);
}

MMParams MMParams::eventually_constant(std::vector<int> prefix, int value, QConvention convention) {
  return eventually_periodic(std::move(prefix), {value}, convention);
}

MMParams MMParams::with_rule(std::vector<int> prefix, GroupRule rule, std::string rule_name) {
  if (!rule) throw std::invalid_argument("MMParams: null group rule");
  return MMParams(std::move(prefix), {}, std::move(rule), std::move(rule_name), QConvention::Recursive);
}

int MMParams::raw_n(std::size_t k) const {
  if (k <= prefix_.size()) return prefix_[k - 1];
  if (rule_) return rule_(k);
  return period_[(k - prefix_.size() - 1) % period_.size()];
}

void MMParams::extend_to(std::size_t k) const {
  auto& m = *memo_;
  while (m.n.size() <= k) {
    const std::size_t next = m.n.size();
    const int nk = raw_n(next);
    if (nk < 1) throw std::invalid_argument("MMParams: group rule produced n_k < 1 at k=" + std::to_string(next));
    Rational qk(1);
    if (next > 1) {
      const int exponent = convention_ == QConvention::Recursive ? nk : m.n[next - 1];
      qk = m.q[next - 1] / Rational(3 * pow2(static_cast<std::uint64_t>(exponent)));
    }
    m.n.push_back(nk);
    m.N.push_back(m.N.back() + static_cast<std::size_t>(nk) + 2);
    m.q.push_back(std::move(qk));
  }
}

int MMParams::n(std::size_t k) const {
  if (k == 0) throw std::out_of_range("MMParams::n: groups are 1-based");
  std::lock_guard lock(memo_->mutex);
  extend_to(k);
  return memo_->n[k];
}

std::size_t MMParams::N(std::size_t k) const {
  if (k == 0) return 0;
  std::lock_guard lock(memo_->mutex);
  extend_to(k);
  return memo_->N[k];
}

Rational MMParams::q(std::size_t k) const {
  if (k == 0) throw std::out_of_range("MMParams::q: groups are 1-based");
  std::lock_guard lock(memo_->mutex);
  extend_to(k);
  return memo_->q[k];
}

std::size_t MMParams::group_of(std::size_t index) const {
  if (index == 0) throw std::out_of_range("MMParams::group_of: indices are 1-based");
  std::lock_guard lock(memo_->mutex);
  auto& m = *memo_;
  while (m.N.back() < index) extend_to(m.N.size());
  auto it = std::lower_bound(m.N.begin(), m.N.end(), index);
  return static_cast<std::size_t>(it - m.N.begin());
}

namespace {

BigInt weight_coefficient(GroupWeight w, int n) {
  return w == GroupWeight::GroupSum ? group_total(n) : pow2(static_cast<std::uint64_t>(n) + 1);
}

// c(n) <= lambda * 3 * 2^n, so c(n_j) q_j <= lambda * q_{j-1} under the
// recursive convention.
Rational weight_lambda(GroupWeight w) { return w == GroupWeight::GroupSum ? Rational(5, 3) : Rational(2, 3); }

}  // namespace

Enclosure MMParams::weighted_tail(std::size_t k, GroupWeight weight, unsigned depth) const {
  auto term = [&](std::size_t j) { return Rational(weight_coefficient(weight, n(j))) * q(j); };

  if (!exact()) {
    const std::size_t last = std::max<std::size_t>(k + depth, 1);
    Rational head;
    for (std::size_t j = k + 1; j <= last; ++j) head += term(j);
    const Rational slack = weight_lambda(weight) * Rational(6, 5) * q(last);
    return Enclosure(head, head + slack);
  }

  // Align to a block start from which both n_j and q_{j+1}/q_j repeat with
  // the period.
  const std::size_t P = prefix_.size();
  const std::size_t L = period_.size();
  std::size_t start = std::max(k, P + (convention_ == QConvention::ClosedFormAsPrinted ? 1 : 0));
  if ((start - P) % L != 0) start += L - (start - P) % L;

  Rational head;
  for (std::size_t j = k + 1; j <= start; ++j) head += term(j);
  Rational block;
  for (std::size_t i = 1; i <= L; ++i) block += term(start + i);
  const Rational rho = q(start + L + 1) / q(start + 1);
  return Enclosure(head + block / (Rational(1) - rho));
}

// ---------------------------------------------------------------------------
// Series

namespace {

Rational inv_pow(long base, std::uint64_t e) { return Rational(1) / pow(Rational(base), e); }

void check_geometric(const Rational& first, const Rational& ratio) {
  if (first.sign() <= 0) throw std::invalid_argument("geometric series: first term must be positive");
  if (ratio.sign() <= 0 || ratio >= Rational(1)) throw std::invalid_argument("geometric series: ratio must lie in (0,1)");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

Series::Series(SeriesDescriptor descriptor) : descriptor_(std::move(descriptor)) {
  std::visit(overloaded{
                 [](const GeometricDescriptor& g) { check_geometric(g.first, g.ratio); },
                 [](const FinitePlusGeometricDescriptor& g) {
                   check_geometric(g.first, g.ratio);
                   for (std::size_t i = 0; i < g.prefix.size(); ++i) {
                     if (g.prefix[i].sign() <= 0) throw std::invalid_argument("series: prefix terms must be positive");
                     const Rational& next = i + 1 < g.prefix.size() ? g.prefix[i + 1] : g.first;
                     if (g.prefix[i] < next) throw std::invalid_argument("series: terms must be non-increasing");
                   }
                 },
                 [](const auto&) {},
             },
             descriptor_);
}

Rational Series::term(std::size_t i) const {
  if (i == 0) throw std::out_of_range("Series::term: indices are 1-based");
  return std::visit(
      overloaded{
          [&](const GnDescriptor&) {
            const auto n = (i + 1) / 2;
            return (i % 2 ? Rational(3) : Rational(2)) * inv_pow(4, n);
          },
          [&](const WsDescriptor&) {
            const auto k = (i - 1) / 5 + 1;
            const auto m = static_cast<long>((i - 1) % 5 + 1);
            return Rational(3, 10) * Rational(9 - m) * inv_pow(10, k);
          },
          [&](const BExampleDescriptor&) { return inv_pow(4, (i + 1) / 2); },
          [&](const GeometricDescriptor& g) { return g.first * pow(g.ratio, i - 1); },
          [&](const FinitePlusGeometricDescriptor& g) {
            if (i <= g.prefix.size()) return g.prefix[i - 1];
            return g.first * pow(g.ratio, i - g.prefix.size() - 1);
          },
          [&](const MMDescriptor& d) {
            const auto& p = d.params;
            const std::size_t k = p.group_of(i);
            const int j = static_cast<int>(i - p.N(k - 1));
            return Rational(group_term(p.n(k), j)) * p.q(k);
          },
      },
      descriptor_);
}

std::vector<Rational> Series::terms(std::size_t n) const {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(term(i));
  return out;
}

Enclosure Series::remainder(std::size_t n, unsigned depth) const {
  return std::visit(
      overloaded{
          [&](const GnDescriptor&) -> Enclosure {
            const auto j = n / 2;
            if (n % 2 == 0) return Rational(5, 3) * inv_pow(4, j);
            return Rational(11, 3) * inv_pow(4, j + 1);
          },
          [&](const WsDescriptor&) -> Enclosure {
            const auto g = n / 5;
            Rational r = inv_pow(10, g);
            for (long s = 1; s <= static_cast<long>(n % 5); ++s) {
              r -= Rational(3, 10) * Rational(9 - s) * inv_pow(10, g + 1);
            }
            return r;
          },
          [&](const BExampleDescriptor&) -> Enclosure {
            const auto j = n / 2;
            if (n % 2 == 0) return Rational(2, 3) * inv_pow(4, j);
            return Rational(5, 3) * inv_pow(4, j + 1);
          },
          [&](const GeometricDescriptor& g) -> Enclosure {
            return g.first * pow(g.ratio, n) / (Rational(1) - g.ratio);
          },
          [&](const FinitePlusGeometricDescriptor& g) -> Enclosure {
            const std::size_t P = g.prefix.size();
            if (n >= P) return g.first * pow(g.ratio, n - P) / (Rational(1) - g.ratio);
            Rational r = g.first / (Rational(1) - g.ratio);
            for (std::size_t i = n; i < P; ++i) r += g.prefix[i];
            return r;
          },
          [&](const MMDescriptor& d) -> Enclosure {
            const auto& p = d.params;
            const std::size_t k = p.group_of(n + 1);
            const int nk = p.n(k);
            const int used = static_cast<int>(n - p.N(k - 1));
            const Rational within = Rational(group_total(nk) - group_prefix_sum(nk, used)) * p.q(k);
            return Enclosure(within) + p.group_remainder(k, depth);
          },
      },
      descriptor_);
}

bool Series::exact_remainders() const {
  if (const auto* d = std::get_if<MMDescriptor>(&descriptor_)) return d->params.exact();
  return true;
}

std::string Series::name() const {
  return std::visit(overloaded{
                        [](const GnDescriptor&) -> std::string { return "gn"; },
                        [](const WsDescriptor&) -> std::string { return "ws"; },
                        [](const BExampleDescriptor&) -> std::string { return "bexample"; },
                        [](const GeometricDescriptor& g) -> std::string {
                          return "geometric(first=" + g.first.str() + ",ratio=" + g.ratio.str() + ")";
                        },
                        [](const FinitePlusGeometricDescriptor& g) -> std::string {
                          std::string s = "finite(";
                          for (std::size_t i = 0; i < g.prefix.size(); ++i) s += (i ? "," : "") + g.prefix[i].str();
                          return s + ";first=" + g.first.str() + ",ratio=" + g.ratio.str() + ")";
                        },
                        [](const MMDescriptor& d) -> std::string {
                          const auto& p = d.params;
                          std::string tail = p.exact() ? (p.period().size() == 1
                                                              ? "const:" + std::to_string(p.period()[0])
                                                              : "periodic:" + join_ints(p.period()))
                                                       : "rule:" + p.rule_name();
                          return "mm(groups=" + join_ints(p.prefix()) + ";tail=" + tail + ")";
                        },
                    },
                    descriptor_);
}

std::optional<KakeyaTailProof> Series::kakeya_tail_proof() const {
  // For a geometric tail a_n > r_n  <=>  1 - ratio > ratio.
  if (const auto* g = std::get_if<GeometricDescriptor>(&descriptor_)) {
    return KakeyaTailProof{1, g->ratio < Rational(1, 2)};
  }
  if (const auto* g = std::get_if<FinitePlusGeometricDescriptor>(&descriptor_)) {
    return KakeyaTailProof{g->prefix.size() + 1, g->ratio < Rational(1, 2)};
  }
  return std::nullopt;
}

const MMParams* Series::mm_params() const {
  const auto* d = std::get_if<MMDescriptor>(&descriptor_);
  return d ? &d->params : nullptr;
}

Series gn_series() { return Series(GnDescriptor{}); }
Series ws_series() { return Series(WsDescriptor{}); }
Series bexample_series() { return Series(BExampleDescriptor{}); }
Series geometric_series(Rational first, Rational ratio) {
  return Series(GeometricDescriptor{std::move(first), std::move(ratio)});
}
Series finite_plus_geometric_series(std::vector<Rational> prefix, Rational first, Rational ratio) {
  return Series(FinitePlusGeometricDescriptor{std::move(prefix), std::move(first), std::move(ratio)});
}
Series mm_series(MMParams params) { return Series(MMDescriptor{std::move(params)}); }

void audit_monotone(const Series& s, std::size_t horizon) {
  Rational prev = s.term(1);
  if (prev.sign() <= 0) throw std::logic_error("audit_monotone: a_1 is not positive");
  for (std::size_t i = 2; i <= horizon; ++i) {
    Rational cur = s.term(i);
    if (cur.sign() <= 0) throw std::logic_error("audit_monotone: a_" + std::to_string(i) + " is not positive");
    if (prev < cur) throw std::logic_error("audit_monotone: a_" + std::to_string(i - 1) + " < a_" + std::to_string(i));
    prev = std::move(cur);
  }
}

}  // namespace achset
