#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trilab/error.hpp"
#include "trilab/kernels.hpp"
#include "trilab/lab/config.hpp"
#include "trilab/lab/plot.hpp"
#include "trilab/lab/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;

struct RunFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> threads;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::string summary;
  bool timing = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config, "JSON experiment config");
  cmd->add_option("--seed", f.seed, "base seed");
  cmd->add_option("--threads", f.threads, "worker count");
  cmd->add_option("--out", f.out, "report path (stdout if omitted)");
  cmd->add_option("--format", f.format, "csv or json");
  cmd->add_option("--summary", f.summary, "also write per-bound ratio summary CSV here");
  cmd->add_flag("--timing", f.timing, "fill the ms column with wall-clock times");
}

int run_kind(trilab::lab::Kind kind, const RunFlags& f) {
  using namespace trilab::lab;
  ExperimentConfig cfg = default_config(kind);
  if (!f.config.empty()) {
    cfg = load_config_file(f.config, cfg);
    if (cfg.kind != kind) {
      throw trilab::Error(trilab::ErrorCode::kConfigError,
                          "config kind '" + std::string(kind_name(cfg.kind)) +
                              "' does not match subcommand '" + std::string(kind_name(kind)) + "'");
    }
  }
  if (f.seed) cfg.seed = *f.seed;
  if (f.threads) cfg.threads = *f.threads;
  if (f.out) cfg.out = *f.out;
  if (f.format) cfg.format = parse_format(*f.format);
  cfg.timing = f.timing;

  const RunResult result = run(cfg);
  write_report(cfg, result, std::cout);
  if (!f.summary.empty()) {
    std::ofstream s(f.summary, std::ios::binary);
    if (!s) throw trilab::Error(trilab::ErrorCode::kConfigError, "cannot write " + f.summary);
    write_summary(s, result);
  }
  std::cerr << kind_name(kind) << ": " << result.rows.size() << " rows, " << result.hard_checks
            << " hard checks, " << result.violations << " violations (kernels: "
            << trilab::kernels::backend_name(trilab::kernels::active_backend()) << ")\n";
  if (kind == Kind::kAuditBounds) write_summary(std::cerr, result);
  if (result.violations > 0) {
    for (const auto& r : result.rows) {
      if (r.violated) {
        std::cerr << "violation: " << r.exp_id << ' ' << r.quantity << " vs " << r.bound
                  << " lhs=" << format_double(r.lhs)
                  << " rhs=" << (r.rhs ? format_double(*r.rhs) : "") << '\n';
      }
    }
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  using trilab::lab::Kind;
  CLI::App app{"trilab: exponential sums, energies and sum-product experiments over F_p"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    Kind kind;
    const char* help;
  };
  const Sub subs[] = {
      {"sum", Kind::kSum, "weighted bilinear/trilinear/quadrilinear sums against their bounds"},
      {"energy", Kind::kEnergy, "N, T, Dx, Ex and K counts against the counting bounds"},
      {"audit-bounds", Kind::kAuditBounds, "implied-constant audit sweep"},
      {"expansion", Kind::kExpansion, "image sets, covering and the |ABC|,|A+D| dichotomy"},
      {"identity-suite", Kind::kIdentitySuite, "exact identities and constant-1 bounds"},
  };
  RunFlags flags[std::size(subs)];
  std::vector<CLI::App*> cmds;
  for (std::size_t i = 0; i < std::size(subs); ++i) {
    cmds.push_back(app.add_subcommand(subs[i].name, subs[i].help));
    add_run_flags(cmds.back(), flags[i]);
  }

  std::string report, plot_kind = "all", plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "static SVG charts from a CSV report");
  plot_cmd->add_option("report", report, "CSV report")->required();
  plot_cmd->add_option("--kind", plot_kind, "ratio-vs-card, ratio-vs-p or all");
  plot_cmd->add_option("--out", plot_out, "output prefix (defaults to the report path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    for (std::size_t i = 0; i < cmds.size(); ++i) {
      if (cmds[i]->parsed()) return run_kind(subs[i].kind, flags[i]);
    }
    if (plot_cmd->parsed()) {
      const auto prefix = plot_out.empty() ? report : plot_out;
      for (const auto& path : trilab::lab::plot(report, trilab::lab::parse_plot_kind(plot_kind), prefix)) {
        std::cout << path << '\n';
      }
      return kExitOk;
    }
  } catch (const trilab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitConfig;
}
