// theodorus: command-line front end.
//
// Exit codes: 0 success, 1 a paper claim is mismatched, 2 bad arguments or
// configuration.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "theodorus/theodorus.hpp"

namespace fs = std::filesystem;
using namespace theodorus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Writes to --out, else into the default output directory, else stdout.
void emit(const std::string& out, const Config& cfg, const std::string& default_name,
          const std::string& content) {
  if (!out.empty()) {
    write_atomic(out, content);
  } else if (!cfg.out_dir.empty()) {
    write_atomic(fs::path(cfg.out_dir) / default_name, content);
  } else {
    std::cout << content;
  }
}

Index table_size(const Config& cfg, const std::vector<std::int64_t>& divisors, Index extra = 0) {
  Index need = std::max(cfg.discovery.n_max, extra);
  for (auto d : divisors) need = std::max(need, required_spiral_size(d, cfg.discovery));
  need = std::max(need, cfg.figure_n_max);
  return need;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw UsageError("unknown format '" + s + "'");
}

std::string svg_for(const Spiral& spiral, std::int64_t d, const Config& cfg, Index figure_n_max) {
  const Discovery disc = discover(spiral, d, cfg.discovery);
  return render_svg(spiral, discovery_scene(disc, figure_n_max, cfg.mirror));
}

}  // namespace

int main(int argc, char** argv) {
  const Config defaults = default_config();
  const DiscoveryParams& dp = defaults.discovery;

  CLI::App app{"Square Root Spiral: spiral-graph discovery and paper-claim verification"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(40);

  std::string config_path;
  app.add_option("--config", config_path, "JSON file overriding the defaults below");

  // shared calibration flags; defaults shown in --help
  Index n_max = dp.n_max;
  double angular_tol = dp.angular_tol_rad;
  std::size_t min_chain_len = dp.min_chain_len;
  double gap_deg = dp.gap_deg;
  double pair_tol = dp.pair_tol_deg;
  double axis_tol = dp.axis_tol_deg;
  double drift_eps = dp.drift_epsilon_rad;
  std::vector<CLI::Option*> calibration;
  auto add_calibration = [&](CLI::App* sub) {
    calibration.push_back(sub->add_option("--n-max", n_max, "largest spiral index")
                              ->capture_default_str());
    calibration.push_back(
        sub->add_option("--angular-tol", angular_tol, "chain link tolerance (rad)")
            ->capture_default_str());
    calibration.push_back(sub->add_option("--min-chain-len", min_chain_len,
                                          "shortest chain that is fitted")
                              ->capture_default_str());
    calibration.push_back(sub->add_option("--gap-deg", gap_deg, "system clustering gap (deg)")
                              ->capture_default_str());
    calibration.push_back(
        sub->add_option("--pair-tol-deg", pair_tol, "point-symmetry tolerance (deg)")
            ->capture_default_str());
    calibration.push_back(sub->add_option("--axis-tol-deg", axis_tol,
                                          "axis-symmetry tolerance (deg)")
                              ->capture_default_str());
    calibration.push_back(
        sub->add_option("--drift-epsilon", drift_eps, "indeterminate drift band (rad)")
            ->capture_default_str());
  };

  std::string out;
  std::string format = "text";
  std::int64_t divisor = 0;
  bool mirror = defaults.mirror;
  bool all = false;
  Index spiral_n_max = dp.n_max;
  Index figure_n_max = defaults.figure_n_max;

  auto* spiral_cmd =
      app.add_subcommand("spiral", "CSV of spiral points n, radius, theta, winding, x, y");
  auto* spiral_n = spiral_cmd->add_option("--n-max", spiral_n_max, "largest index written")
                       ->capture_default_str();
  spiral_cmd->add_option("--out", out, "output file (default: stdout or $THEODORUS_OUT_DIR)");

  auto* verify_cmd = app.add_subcommand("verify", "check the paper's claims");
  verify_cmd->add_option("--divisor", divisor, "one paper divisor (default: all)");
  verify_cmd->add_option("--out", out, "output file");
  verify_cmd->add_option("--format", format, "text or json")->capture_default_str();
  add_calibration(verify_cmd);

  auto* discover_cmd =
      app.add_subcommand("discover", "discover spiral-graph systems for a divisor");
  discover_cmd->add_option("--divisor", divisor, "divisor >= 2")->required();
  discover_cmd->add_option("--out", out, "output file");
  std::string discover_format = "json";
  discover_cmd->add_option("--format", discover_format, "json or text")->capture_default_str();
  add_calibration(discover_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG figure for a divisor");
  render_cmd->add_option("--divisor", divisor, "divisor >= 2")->required();
  auto* render_n = render_cmd->add_option("--n-max", figure_n_max, "largest index drawn")
                       ->capture_default_str();
  auto* render_mirror = render_cmd->add_flag("--mirror", mirror, "flip the y axis");
  render_cmd->add_option("--out", out, "output .svg file");

  auto* report_cmd = app.add_subcommand("report", "reports and figures for every paper divisor");
  report_cmd->add_flag("--all", all, "process d = 2, 3, 5, 11, 13, 17")->required();
  report_cmd->add_option("--out", out, "output directory (default: $THEODORUS_OUT_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config cfg = defaults;
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    auto given = [](const CLI::Option* o) { return o && o->count() > 0; };
    // explicit flags win over the config file
    for (std::size_t i = 0; i < calibration.size(); ++i) {
      if (!given(calibration[i])) continue;
      switch (i % 7) {
        case 0: cfg.discovery.n_max = n_max; break;
        case 1: cfg.discovery.angular_tol_rad = angular_tol; break;
        case 2: cfg.discovery.min_chain_len = min_chain_len; break;
        case 3: cfg.discovery.gap_deg = gap_deg; break;
        case 4: cfg.discovery.pair_tol_deg = pair_tol; break;
        case 5: cfg.discovery.axis_tol_deg = axis_tol; break;
        case 6: cfg.discovery.drift_epsilon_rad = drift_eps; break;
      }
    }
    if (given(render_mirror)) cfg.mirror = mirror;
    if (given(render_n)) cfg.figure_n_max = figure_n_max;
    if (given(spiral_n)) {
      if (spiral_n_max < 100) throw ConfigError("n_max must be >= 100");
      cfg.discovery.n_max = spiral_n_max;
    }
    validate(cfg);

    if (*spiral_cmd) {
      const Index n = given(spiral_n) ? spiral_n_max : cfg.discovery.n_max;
      const Spiral spiral(n);
      std::ostringstream os;
      write_spiral_csv(os, spiral, n);
      emit(out, cfg, "spiral.csv", os.str());
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<std::int64_t> ds;
      if (divisor != 0) {
        if (!paper_claims().find(divisor)) {
          throw UsageError("no paper data for divisor " + std::to_string(divisor) +
                           " (use discover)");
        }
        ds.push_back(divisor);
      } else {
        ds = paper_divisors();
      }
      const ReportFormat f = parse_format(format);
      const Spiral spiral(table_size(cfg, ds));
      bool ok = true;
      std::string text;
      nlohmann::json reports = nlohmann::json::array();
      for (auto d : ds) {
        const DivisorReport r = verify_paper_table(spiral, d, cfg.discovery);
        ok = ok && r.all_matched();
        if (f == ReportFormat::Json) {
          reports.push_back(report_json(r));
        } else {
          text += (text.empty() ? "" : "\n") + report_text(r);
        }
      }
      if (f == ReportFormat::Json) {
        const nlohmann::json doc = ds.size() == 1 ? reports.at(0) : nlohmann::json{{"reports", reports}};
        text = doc.dump(2) + "\n";
      }
      std::string name = ds.size() == 1 ? "verify_d" + std::to_string(ds[0]) : "verify";
      name += f == ReportFormat::Json ? ".json" : ".txt";
      emit(out, cfg, name, text);
      return ok ? kExitOk : kExitMismatch;
    }

    if (*discover_cmd) {
      if (divisor < 2) throw UsageError("divisor must be >= 2");
      const ReportFormat f = parse_format(discover_format);
      const Spiral spiral(table_size(cfg, {divisor}));
      const DivisorReport r = analyze_divisor(spiral, divisor, cfg.discovery);
      const std::string ext = f == ReportFormat::Json ? ".json" : ".txt";
      emit(out, cfg, "discover_d" + std::to_string(divisor) + ext, export_report(r, f));
      return kExitOk;
    }

    if (*render_cmd) {
      if (divisor < 2) throw UsageError("divisor must be >= 2");
      const Spiral spiral(table_size(cfg, {divisor}));
      emit(out, cfg, "figure_d" + std::to_string(divisor) + ".svg",
           svg_for(spiral, divisor, cfg, cfg.figure_n_max));
      return kExitOk;
    }

    if (*report_cmd) {
      const std::string dir = !out.empty() ? out : cfg.out_dir;
      if (dir.empty()) throw UsageError("report --all needs --out DIR or $THEODORUS_OUT_DIR");
      const auto ds = paper_divisors();
      const Spiral spiral(table_size(cfg, ds));
      bool ok = true;
      for (auto d : ds) {
        const DivisorReport r = analyze_divisor(spiral, d, cfg.discovery);
        ok = ok && r.all_matched();
        const std::string stem = "d" + std::to_string(d);
        write_atomic(fs::path(dir) / ("report_" + stem + ".json"),
                     export_report(r, ReportFormat::Json));
        write_atomic(fs::path(dir) / ("report_" + stem + ".txt"),
                     export_report(r, ReportFormat::Text));
        write_atomic(fs::path(dir) / ("figure_" + stem + ".svg"),
                     svg_for(spiral, d, cfg, cfg.figure_n_max));
      }
      return ok ? kExitOk : kExitMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
