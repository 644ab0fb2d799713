#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "achset/kakeya.hpp"
#include "achset/subsums.hpp"

namespace achset::cli {

namespace {

template <class T>
T env_or(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  std::istringstream in(raw);
  T v{};
  if (!(in >> v) || v <= 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
  return v;
}

void add_series_options(CLI::App* cmd, SeriesSpec& spec) {
  cmd->add_option("--series", spec.kind, "Series family")
      ->check(CLI::IsMember({"gn", "ws", "bexample", "geometric", "finite", "mm"}))
      ->capture_default_str();
  cmd->add_option("--groups", spec.groups, "mm: explicit group sizes n_1,n_2,..")->delimiter(',');
  cmd->add_option("--tail", spec.tail, "mm: const:c | periodic:a,b,.. | schedule:identity");
  cmd->add_option("--q-convention", spec.q_convention, "mm: recursive | printed")
      ->check(CLI::IsMember({"recursive", "printed"}))
      ->capture_default_str();
  cmd->add_option("--first", spec.first, "geometric/finite: first geometric term")->capture_default_str();
  cmd->add_option("--ratio", spec.ratio, "geometric/finite: ratio")->capture_default_str();
  cmd->add_option("--terms", spec.terms, "finite: leading terms p/q,..")->delimiter(',');
}

void add_output_options(CLI::App* cmd, RunConfig& cfg, bool with_report) {
  if (with_report) {
    cmd->add_option("--report", cfg.report, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_flag_callback("--json", [&cfg] { cfg.report = "json"; }, "Same as --report json");
  }
  cmd->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--cap", cfg.cap, "Enumeration cap (default: ACHSET_ENUM_CAP or 2^22)")->check(CLI::PositiveNumber);
  cmd->add_option("--refine", cfg.refine, "Remainder refinement budget (default: ACHSET_REFINE_DEPTH or 64)")
      ->check(CLI::PositiveNumber);
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands{
      {"classify", cmd_classify}, {"kakeya", cmd_kakeya},   {"mm-verify", cmd_mm_verify},
      {"boundary", cmd_boundary}, {"render", cmd_render},
  };
  return commands.at(cfg.command)(cfg, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact achievement sets of convergent positive series", "achset"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Finite-depth classification evidence");
  classify->add_option("--depth", cfg.depth, "Largest depth n scanned")->capture_default_str();

  auto* kakeya = app.add_subcommand("kakeya", "Kakeya profile and density of reversed conditions");
  kakeya->add_option("--horizon", cfg.horizon, "Indices 1..H")->check(CLI::PositiveNumber)->capture_default_str();

  auto* mm_verify = app.add_subcommand("mm-verify", "Proof-level checks for a grouped mm series");
  mm_verify->add_option("--k", cfg.k, "Check groups 1..K")->check(CLI::PositiveNumber)->capture_default_str();

  auto* boundary = app.add_subcommand("boundary", "Gap census, E-interval classes and boundary residuals");
  boundary->add_option("--kmax", cfg.k_max, "Levels 1..K")->check(CLI::PositiveNumber)->capture_default_str();
  boundary->add_option("--verify-upto", cfg.verify_upto, "Cross-check levels 1..V against enumerated iterates")
      ->capture_default_str();

  auto* render = app.add_subcommand("render", "SVG strip chart of iterates");
  render->add_option("--depths", cfg.depths, "Depths drawn as rows")->delimiter(',')->capture_default_str();

  for (auto* cmd : {classify, kakeya, mm_verify, boundary, render}) {
    add_series_options(cmd, cfg.series);
    add_output_options(cmd, cfg, cmd != render);
  }
  // mm-verify and boundary only make sense for mm series
  mm_verify->preparse_callback([&cfg](std::size_t) { cfg.series.kind = "mm"; });
  boundary->preparse_callback([&cfg](std::size_t) { cfg.series.kind = "mm"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.cap == 0) cfg.cap = env_or<std::size_t>("ACHSET_ENUM_CAP", kDefaultEnumerationCap);
    if (cfg.refine == 0) cfg.refine = env_or<unsigned>("ACHSET_REFINE_DEPTH", kDefaultRefinementBudget);

    if (cfg.out_path.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "achset: cannot write " << cfg.out_path << '\n';
      return kUsage;
    }
    return code;
  } catch (const CapExceeded& e) {
    err << "achset: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const UndecidedError& e) {
    err << "achset: " << e.what() << '\n';
    return kRefinementBudget;
  } catch (const std::invalid_argument& e) {
    err << "achset: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "achset: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "achset: check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::runtime_error& e) {
    err << "achset: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace achset::cli
