#include "achset/kakeya.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>

namespace achset {

UndecidedError::UndecidedError(std::size_t index, unsigned budget)
    : std::runtime_error("Kakeya condition at index " + std::to_string(index) +
                         " undecided after refinement depth " + std::to_string(budget)),
      index_(index) {}

std::vector<std::size_t> KakeyaProfile::k_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < membership.size(); ++i) {
    if (membership[i] == KakeyaTag::K) out.push_back(i + 1);
  }
  return out;
}

std::vector<std::size_t> KakeyaProfile::kc_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < membership.size(); ++i) {
    if (membership[i] == KakeyaTag::Kc) out.push_back(i + 1);
  }
  return out;
}

KakeyaProfile kakeya_profile(const Series& s, std::size_t horizon, unsigned budget) {
  if (horizon < 1) throw std::invalid_argument("kakeya_profile: horizon must be >= 1");
  KakeyaProfile profile;
  profile.horizon = horizon;
  profile.membership.reserve(horizon);
  for (std::size_t i = 1; i <= horizon; ++i) {
    const Enclosure a(s.term(i));
    unsigned depth = 1;
    for (;;) {
      const Comparison c = compare(a, s.remainder(i, depth));
      if (c == Comparison::Greater) {
        profile.membership.push_back(KakeyaTag::K);
        break;
      }
      if (c == Comparison::Less || c == Comparison::Equal) {
        profile.membership.push_back(KakeyaTag::Kc);
        break;
      }
      if (depth >= budget) throw UndecidedError(i, budget);
      depth = std::min(budget, depth * 2);
    }
  }
  return profile;
}

DensityReport density(const IndexPredicate& set, std::size_t horizon, const std::optional<IndexPredicate>& reference,
                      std::span<const std::size_t> schedule) {
  if (horizon < 1) throw std::invalid_argument("density: horizon must be >= 1");
  std::vector<std::size_t> points(schedule.begin(), schedule.end());
  if (points.empty()) {
    points.resize(horizon);
    for (std::size_t n = 1; n <= horizon; ++n) points[n - 1] = n;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.back() != horizon) points.push_back(horizon);

  DensityReport report;
  report.horizon = horizon;
  std::size_t count = 0;
  std::size_t ref = 0;
  std::size_t next = 0;
  bool have_tail = false;
  for (std::size_t n = 1; n <= horizon && next < points.size(); ++n) {
    if (set(n)) ++count;
    if (!reference || (*reference)(n)) ++ref;
    if (points[next] != n) continue;
    ++next;
    if (ref == 0) continue;
    Rational ratio(BigInt(static_cast<unsigned long>(count)), BigInt(static_cast<unsigned long>(ref)));
    if (report.samples.empty()) {
      report.running_min = report.running_max = ratio;
    } else {
      report.running_min = std::min(report.running_min, ratio);
      report.running_max = std::max(report.running_max, ratio);
    }
    if (2 * n >= horizon) {
      if (!have_tail) {
        report.lower_estimate = report.upper_estimate = ratio;
        have_tail = true;
      } else {
        report.lower_estimate = std::min(report.lower_estimate, ratio);
        report.upper_estimate = std::max(report.upper_estimate, ratio);
      }
    }
    report.samples.push_back({n, count, ref, std::move(ratio)});
  }
  if (ref == 0) throw std::invalid_argument("density: reference set is empty below the horizon");
  report.ratio_at_horizon = report.samples.back().ratio;
  return report;
}

namespace {

// Minimal N_1, N_2, ... computed by one forward scan of a non-decreasing m.
class ScheduleScanner {
 public:
  ScheduleScanner(IntegerSequence m, std::size_t budget) : m_(std::move(m)), budget_(budget) {}

  std::size_t N(std::size_t k) {
    std::lock_guard lock(mutex_);
    while (Ns_.size() <= k) advance();
    return Ns_[k];
  }

 private:
  void advance() {
    const std::size_t k = Ns_.size();
    const std::uint64_t threshold = static_cast<std::uint64_t>(k + 1) * (k + 1);
    // m non-decreasing: "m_n >= T for all n > N" iff m_{N+1} >= T
    while (value(cursor_) < threshold) {
      ++cursor_;
      if (cursor_ > budget_) {
        throw std::runtime_error("choose_schedule: m_n never reaches " + std::to_string(threshold) +
                                 " within the scan budget of " + std::to_string(budget_) + " indices");
      }
    }
    Ns_.push_back(std::max(Ns_.back() + 3, cursor_ - 1));
  }

  std::uint64_t value(std::size_t n) {
    while (last_checked_ < n) {
      ++last_checked_;
      const std::uint64_t v = m_(last_checked_);
      if (v < 1) throw std::invalid_argument("choose_schedule: m_n must be positive");
      if (v < last_value_) {
        throw std::invalid_argument("choose_schedule: m_n decreases at n=" + std::to_string(last_checked_));
      }
      last_value_ = v;
    }
    return m_(n);
  }

  IntegerSequence m_;
  std::size_t budget_;
  std::mutex mutex_;
  std::vector<std::size_t> Ns_{0};
  std::size_t cursor_ = 1;
  std::size_t last_checked_ = 0;
  std::uint64_t last_value_ = 0;
};

}  // namespace

MMParams choose_schedule(const IntegerSequence& m, std::size_t k_max, std::size_t scan_budget) {
  auto scanner = std::make_shared<ScheduleScanner>(m, scan_budget);
  std::vector<int> prefix;
  for (std::size_t k = 1; k <= k_max; ++k) {
    prefix.push_back(static_cast<int>(scanner->N(k) - scanner->N(k - 1) - 2));
  }
  GroupRule rule = [scanner](std::size_t k) { return static_cast<int>(scanner->N(k) - scanner->N(k - 1) - 2); };
  return MMParams::with_rule(std::move(prefix), std::move(rule), "minimal-schedule");
}

namespace {

DensityRatio make_ratio(const MMParams& p, const IntegerSequence& m, std::size_t n, std::size_t kc_count) {
  DensityRatio r;
  r.n = n;
  r.group = p.group_of(n);
  r.kc_count = kc_count;
  r.ratio = Rational(BigInt(static_cast<unsigned long>(kc_count)), BigInt(static_cast<unsigned long>(m(n))));
  const auto k = static_cast<long>(r.group);
  r.bound = Rational(BigInt(2 * k), BigInt(k * k));
  return r;
}

const MMParams& require_mm(const Series& s) {
  const MMParams* p = s.mm_params();
  if (!p) throw std::invalid_argument("reversed_condition_ratio: series is not a Marchwicki-Miska series");
  return *p;
}

}  // namespace

DensityRatio reversed_condition_ratio(const Series& s, const IntegerSequence& m, std::size_t n, unsigned budget) {
  if (n < 1) throw std::invalid_argument("reversed_condition_ratio: n must be >= 1");
  const MMParams& p = require_mm(s);
  const auto profile = kakeya_profile(s, n, budget);
  return make_ratio(p, m, n, profile.kc_indices().size());
}

std::vector<DensityRatio> reversed_condition_ratios(const Series& s, const IntegerSequence& m, std::size_t horizon,
                                          unsigned budget) {
  const MMParams& p = require_mm(s);
  const auto profile = kakeya_profile(s, horizon, budget);
  std::vector<DensityRatio> out;
  out.reserve(horizon);
  std::size_t kc = 0;
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (!profile.in_k(n)) ++kc;
    out.push_back(make_ratio(p, m, n, kc));
  }
  return out;
}

}  // namespace achset
