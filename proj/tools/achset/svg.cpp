#include <sstream>

#include "achset/subsums.hpp"
#include "cli.hpp"

namespace achset::cli {

namespace {

constexpr int kWidth = 800;
constexpr int kMargin = 60;
constexpr int kRowHeight = 24;
constexpr int kBarHeight = 14;
constexpr int kDigits = 3;

}  // namespace

std::string render_svg(const Series& s, const std::vector<std::size_t>& depths, std::size_t cap) {
  const Rational r0 = s.remainder(0).hi();
  const Rational scale = Rational(kWidth - 2 * kMargin) / r0;
  auto x = [&](const Rational& v) { return (Rational(kMargin) + v * scale).to_decimal(kDigits); };

  const int height = kRowHeight * static_cast<int>(depths.size()) + 2 * kRowHeight;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n";
  svg << "<title>" << s.name() << " iterates on [0, " << r0.str() << "]</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t row = 0; row < depths.size(); ++row) {
    const std::size_t n = depths[row];
    const IntervalUnion u = s.remainder(n).is_exact() ? iterate(s, n, cap) : iterate_enclosed(s, n, cap).outer;
    const int y = kRowHeight * static_cast<int>(row + 1);
    svg << "<g class=\"row\" data-depth=\"" << n << "\" data-components=\"" << u.size() << "\">\n";
    svg << "  <text x=\"" << kMargin - 8 << "\" y=\"" << y + kBarHeight - 3
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">n=" << n << "</text>\n";
    for (const auto& c : u.components()) {
      const Rational w = c.length() * scale;
      svg << "  <rect x=\"" << x(c.left()) << "\" y=\"" << y << "\" width=\"" << w.to_decimal(kDigits)
          << "\" height=\"" << kBarHeight << "\" fill=\"#2b5c8a\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace achset::cli
