#include <charconv>
#include <stdexcept>
#include <string_view>

#include "achset/kakeya.hpp"
#include "cli.hpp"

namespace achset::cli {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw std::invalid_argument("expected a comma-separated integer list, got '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

QConvention parse_convention(const std::string& s) {
  if (s == "recursive") return QConvention::Recursive;
  if (s == "printed") return QConvention::ClosedFormAsPrinted;
  throw std::invalid_argument("--q-convention must be recursive or printed");
}

}  // namespace

MMParams build_mm_params(const SeriesSpec& spec) {
  const QConvention convention = parse_convention(spec.q_convention);
  std::string tail = spec.tail;
  if (tail.empty()) {
    if (spec.groups.empty()) throw std::invalid_argument("mm series needs --groups or --tail");
    tail = "const:" + std::to_string(spec.groups.back());
  }
  const auto colon = tail.find(':');
  const std::string kind = tail.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : tail.substr(colon + 1);

  if (kind == "const") {
    const auto v = parse_ints(arg);
    if (v.size() != 1) throw std::invalid_argument("--tail const:<n> takes one value");
    return MMParams::eventually_constant(spec.groups, v[0], convention);
  }
  if (kind == "periodic") return MMParams::eventually_periodic(spec.groups, parse_ints(arg), convention);
  if (kind == "schedule") {
    if (arg != "identity") throw std::invalid_argument("only --tail schedule:identity (m_n = n) is supported");
    if (!spec.groups.empty()) throw std::invalid_argument("--tail schedule:identity chooses the groups itself");
    if (convention != QConvention::Recursive) throw std::invalid_argument("schedules use the recursive q convention");
    return choose_schedule([](std::size_t n) { return static_cast<std::uint64_t>(n); }, 8);
  }
  throw std::invalid_argument("unknown --tail '" + tail + "'");
}

Series build_series(const SeriesSpec& spec) {
  if (spec.kind == "gn") return gn_series();
  if (spec.kind == "ws") return ws_series();
  if (spec.kind == "bexample") return bexample_series();
  if (spec.kind == "geometric") return geometric_series(Rational::parse(spec.first), Rational::parse(spec.ratio));
  if (spec.kind == "finite") {
    std::vector<Rational> prefix;
    for (const auto& t : spec.terms) prefix.push_back(Rational::parse(t));
    return finite_plus_geometric_series(std::move(prefix), Rational::parse(spec.first), Rational::parse(spec.ratio));
  }
  if (spec.kind == "mm") return mm_series(build_mm_params(spec));
  throw std::invalid_argument("unknown series '" + spec.kind + "'");
}

}  // namespace achset::cli
