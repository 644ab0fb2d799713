#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "achset/series.hpp"

namespace achset::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCapExceeded = 3,
  kCheckFailed = 4,
  kRefinementBudget = 5,
};

struct SeriesSpec {
  std::string kind = "gn";  ///< gn | ws | bexample | geometric | finite | mm
  std::vector<int> groups;
  std::string tail;                  ///< const:c | periodic:a,b,.. | schedule:identity
  std::string first = "1";
  std::string ratio = "1/2";
  std::vector<std::string> terms;    ///< finite prefix for `finite`
  std::string q_convention = "recursive";
};

struct RunConfig {
  std::string command;
  SeriesSpec series;
  std::size_t depth = 12;
  std::size_t horizon = 40;
  std::size_t k = 3;
  std::size_t k_max = 3;
  std::size_t verify_upto = 3;  ///< boundary: levels cross-checked against enumerated iterates
  std::vector<std::size_t> depths{0, 1, 2, 3, 4};
  std::size_t cap = 0;
  unsigned refine = 0;
  std::string report = "json";
  std::string out_path;
};

/// Throws std::invalid_argument for inconsistent flags.
MMParams build_mm_params(const SeriesSpec& spec);
Series build_series(const SeriesSpec& spec);

/// Each command writes its report to `out` and returns an ExitCode.
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_kakeya(const RunConfig& cfg, std::ostream& out);
int cmd_mm_verify(const RunConfig& cfg, std::ostream& out);
int cmd_boundary(const RunConfig& cfg, std::ostream& out);
int cmd_render(const RunConfig& cfg, std::ostream& out);

/// Iterate strip chart: one row per depth, [0, r_0] mapped to a fixed width.
std::string render_svg(const Series& s, const std::vector<std::size_t>& depths, std::size_t cap);

/// Parses argv, dispatches, and maps library errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace achset::cli
