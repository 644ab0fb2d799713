#include <nlohmann/json.hpp>

#include <ostream>

#include "achset/boundary.hpp"
#include "achset/kakeya.hpp"
#include "achset/mm.hpp"
#include "achset/subsums.hpp"
#include "cli.hpp"

namespace achset::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string text(const Rational& r) { return r.str(); }
std::string text(const BigInt& n) { return n.get_str(); }

Json interval(const Rational& lo, const Rational& hi) { return Json::array({text(lo), text(hi)}); }

Json enclosure(const Enclosure& e) {
  if (e.is_exact()) return text(e.lo());
  return interval(e.lo(), e.hi());
}

Json rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(text(x));
  return out;
}

Json header(const std::string& command, const Series& s) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["series"] = s.name();
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require_report(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (cfg.report == a) return;
  }
  throw std::invalid_argument("--report " + cfg.report + " is not available for " + cfg.command);
}

}  // namespace

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_report(cfg, {"json"});
  const Series s = build_series(cfg.series);
  const auto ev = classify_evidence(s, cfg.depth, cfg.cap);

  Json j = header("classify", s);
  j["depth"] = ev.depth;
  j["verdict"] = std::string(to_string(ev.verdict));
  j["rationale"] = ev.rationale;
  j["gap_witness"] = ev.gap_witness ? interval(ev.gap_witness->left, ev.gap_witness->right) : Json(nullptr);
  j["witness_depth"] = ev.gap_witness ? Json(ev.witness_depth) : Json(nullptr);
  j["delta_lower_bound"] = ev.delta_lower_bound ? Json(text(*ev.delta_lower_bound)) : Json(nullptr);
  j["norm_trace"] = rationals(ev.norm_trace);
  j["delta_trace"] = rationals(ev.delta_trace);
  j["component_trace"] = ev.component_trace;
  emit(out, j);
  return kOk;
}

int cmd_kakeya(const RunConfig& cfg, std::ostream& out) {
  require_report(cfg, {"json", "csv"});
  const Series s = build_series(cfg.series);
  const auto profile = kakeya_profile(s, cfg.horizon, cfg.refine);
  const auto report = density([&](std::size_t i) { return !profile.in_k(i); }, cfg.horizon);

  if (cfg.report == "csv") {
    out << "n,card,ratio\n";
    for (const auto& sample : report.samples) out << sample.n << ',' << sample.count << ',' << text(sample.ratio) << '\n';
    return kOk;
  }
  Json j = header("kakeya", s);
  j["horizon"] = cfg.horizon;
  j["K"] = profile.k_indices();
  j["Kc"] = profile.kc_indices();
  j["density_Kc"] = {
      {"ratio_at_horizon", text(report.ratio_at_horizon)},
      {"lower_estimate", text(report.lower_estimate)},
      {"upper_estimate", text(report.upper_estimate)},
      {"running_min", text(report.running_min)},
      {"running_max", text(report.running_max)},
  };
  emit(out, j);
  return kOk;
}

int cmd_mm_verify(const RunConfig& cfg, std::ostream& out) {
  require_report(cfg, {"json"});
  if (cfg.series.kind != "mm") throw std::invalid_argument("mm-verify needs --series mm");
  if (cfg.k < 1) throw std::invalid_argument("--k must be >= 1");
  const MMParams p = build_mm_params(cfg.series);
  const Series s = mm_series(p);

  Json checks = Json::array();
  bool all = true;
  auto record = [&](Json c, bool holds) {
    c["holds"] = holds;
    all = all && holds;
    checks.push_back(std::move(c));
  };

  for (std::size_t k = 1; k <= cfg.k; ++k) {
    const auto b = remainder_bracket(p, k, cfg.refine);
    record({{"check", "remainder_bracket"},
            {"k", k},
            {"lower", text(b.lower)},
            {"remainder", enclosure(b.remainder)},
            {"upper", text(b.upper)}},
           b.holds);

    Json ladder_json = {{"check", "ladder"}, {"k", k}};
    try {
      const Ladder l = build_ladder(p, k, cfg.cap);
      ladder_json["materialized"] = l.materialized;
      ladder_json["min"] = text(l.min);
      ladder_json["max"] = text(l.max);
      bool alpha = true;
      if (l.materialized) {
        ladder_json["size"] = l.D.size();
        ladder_json["max_gap"] = text(l.max_gap);
        try {
          alpha = ladder_within_subsums(l, initial_subsums(s, p.N(k), cfg.cap));
          ladder_json["within_subsums"] = alpha;
        } catch (const CapExceeded&) {
          ladder_json["within_subsums"] = "skipped: enumeration cap";
        }
      }
      record(std::move(ladder_json), alpha);
    } catch (const LadderError& e) {
      ladder_json["error"] = e.what();
      record(std::move(ladder_json), false);
    }

    if (k < cfg.k) record({{"check", "step_identity"}, {"k", k}}, ladder_step_identity(p, k));

    try {
      const DeltaCheck d = check_delta_bound(p, k, cfg.cap);
      record({{"check", "delta_bound"}, {"k", k}, {"bound", text(d.bound)}, {"delta", text(d.delta)}}, d.holds);
    } catch (const CapExceeded&) {
      checks.push_back({{"check", "delta_bound"}, {"k", k}, {"skipped", "enumeration cap"}});
    }
  }

  const std::size_t horizon = p.N(cfg.k);
  std::vector<std::size_t> expected;
  for (std::size_t k = 1; k <= cfg.k; ++k) {
    expected.push_back(p.N(k - 1) + 1);
    expected.push_back(p.N(k - 1) + 2);
  }
  record({{"check", "reversed_conditions"}, {"horizon", horizon}},
         kakeya_profile(s, horizon, cfg.refine).kc_indices() == expected);

  Json j = header("mm-verify", s);
  j["k"] = cfg.k;
  j["checks"] = std::move(checks);
  j["all_pass"] = all;
  emit(out, j);
  return all ? kOk : kCheckFailed;
}

int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
  require_report(cfg, {"json", "csv"});
  if (cfg.series.kind != "mm") throw std::invalid_argument("boundary needs --series mm");
  if (cfg.k_max < 1) throw std::invalid_argument("--kmax must be >= 1");
  const MMParams p = build_mm_params(cfg.series);
  const Series s = mm_series(p);

  bool all = true;
  std::vector<Rational> residuals;
  std::string residual_error;
  try {
    residuals = boundary_residual_trace(p, cfg.k_max);
  } catch (const std::logic_error& e) {
    residual_error = e.what();
    all = false;
    for (std::size_t k = 0; k <= cfg.k_max; ++k) residuals.push_back(boundary_residual(p, k));
  }

  std::vector<LevelCensus> census;
  for (std::size_t k = 1; k <= cfg.k_max; ++k) census.push_back(level_census(p, k));

  if (cfg.report == "csv") {
    out << "k,gap_count,gap_length,comp_count,new_comp_length,measure_truncated,residual\n";
    for (const auto& c : census) {
      out << c.k << ',' << text(c.gap_count) << ',' << text(c.gap_length) << ',' << text(c.comp_count) << ','
          << text(c.new_comp_length) << ',' << text(measure_E_truncated(p, c.k)) << ',' << text(residuals[c.k])
          << '\n';
    }
    return all ? kOk : kCheckFailed;
  }

  Json table = Json::array();
  for (const auto& c : census) {
    Json row = {{"k", c.k},
                {"gap_count", text(c.gap_count)},
                {"gap_length", text(c.gap_length)},
                {"comp_count", text(c.comp_count)},
                {"new_comp_count", text(c.new_comp_count)},
                {"new_comp_length", text(c.new_comp_length)},
                {"measure_truncated", text(measure_E_truncated(p, c.k))}};
    if (c.k <= cfg.verify_upto) {
      try {
        const auto x = census_cross_check(p, c.k, cfg.cap);
        const bool measure_ok = measure_E_truncated(p, c.k) == measure(iterate(s, p.N(c.k), cfg.cap));
        row["cross_check"] = {{"measured_components", x.measured_components},
                              {"measured_new_gaps", x.measured_new_gaps},
                              {"old_gaps_preserved", x.old_gaps_preserved},
                              {"new_gap_lengths_match", x.new_gap_lengths_match},
                              {"measure_matches", measure_ok},
                              {"matches", x.matches && measure_ok}};
        all = all && x.matches && measure_ok;
      } catch (const CapExceeded&) {
        row["cross_check"] = "skipped: enumeration cap";
      }
    }
    table.push_back(std::move(row));
  }

  Json eta = Json::array();
  for (const auto& c : eta_classes(p, cfg.k_max)) {
    eta.push_back({{"eta", c.eta}, {"count", text(c.count)}, {"e_interval_length", text(c.e_interval_length)}});
  }

  const std::size_t telescoping_upto = std::max<std::size_t>(cfg.k_max + 1, 2);
  bool telescoping = true;
  for (std::size_t k = 2; k <= telescoping_upto; ++k) telescoping = telescoping && telescoping_check(p, k);
  all = all && telescoping;

  Json j = header("boundary", s);
  j["kmax"] = cfg.k_max;
  j["census"] = std::move(table);
  j["eta_classes"] = std::move(eta);
  j["residual_trace"] = rationals(residuals);
  if (cfg.k_max >= 1 && residuals[1].sign() > 0) j["residual_ratio_to_level_1"] = text(residuals.back() / residuals[1]);
  j["residual_trace_ok"] = residual_error.empty();
  if (!residual_error.empty()) j["residual_error"] = residual_error;
  j["telescoping"] = {{"checked_up_to", telescoping_upto}, {"holds", telescoping}};
  j["all_pass"] = all;
  emit(out, j);
  return all ? kOk : kCheckFailed;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  const Series s = build_series(cfg.series);
  out << render_svg(s, cfg.depths, cfg.cap);
  return kOk;
}

}  // namespace achset::cli
