// Command-line front end: simulate | scan-phase | solve | transport, driven by
// a sectioned key = value config file with --section.key overrides.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bplat/commands.hpp"
#include "bplat/errors.hpp"

namespace {

// Leftover tokens of the form `--section.key value` are config overrides.
void apply_extra_overrides(bplat::RunConfig &cfg, const std::vector<std::string> &extras) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    if (key.rfind("--", 0) != 0) {
      throw bplat::ConfigError("unexpected argument '" + key + "' (overrides look like "
                               "--section.key value)");
    }
    key = key.substr(2);
    std::string value;
    const auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) {
        throw bplat::ConfigError("override --" + key + " is missing a value");
      }
      value = extras[++i];
    }
    bplat::apply_override(cfg, key, value);
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"driven bipartite-lattice simulator and condition solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_path;
  bool print_config = false;

  const auto add_common = [&](CLI::App *sub) {
    sub->add_option("--config", config_path, "run configuration file")->required();
    sub->add_option("--output", output_path, "output file (default: stdout)");
    sub->add_flag("--print-config", print_config,
                  "echo the effective configuration and exit");
    sub->allow_extras();
  };

  CLI::App *sim = app.add_subcommand("simulate", "integrate one model and export populations");
  std::string model_str = "full";
  sim->add_option("--model", model_str, "full | averaged | analytic")
      ->check(CLI::IsMember({"full", "averaged", "analytic"}));
  add_common(sim);

  CLI::App *scan = app.add_subcommand("scan-phase", "effective rates on a phase grid");
  int workers = 1;
  scan->add_option("--workers", workers, "parallel evaluation threads")
      ->check(CLI::PositiveNumber);
  add_common(scan);

  CLI::App *solve = app.add_subcommand("solve", "solve a phase condition");
  std::string kind;
  solve->add_option("--kind", kind,
                    "cdt | dl-forward | dl-backward | instability | cdt-delta-pair");
  add_common(solve);

  CLI::App *transport = app.add_subcommand("transport", "run the phase-switched ratchet");
  int cycles = -1;
  std::string tmodel_str = "averaged";
  transport->add_option("--cycles", cycles, "ratchet cycles (default from config)");
  transport->add_option("--model", tmodel_str, "full | averaged")
      ->check(CLI::IsMember({"full", "averaged"}));
  add_common(transport);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return bplat::kExitUsage;
  }

  bplat::RunConfig cfg;
  try {
    cfg = bplat::parse_config_file(config_path);
    apply_extra_overrides(cfg, app.get_subcommands().front()->remaining());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return bplat::kExitUsage;
  }

  if (print_config) {
    std::cout << bplat::render_config(cfg);
    return bplat::kExitOk;
  }

  if (sim->parsed()) {
    const bplat::SimModel model = (model_str == "full")       ? bplat::SimModel::full
                                  : (model_str == "averaged") ? bplat::SimModel::averaged
                                                              : bplat::SimModel::analytic;
    return bplat::cmd_simulate(cfg, model, output_path);
  }
  if (scan->parsed()) {
    return bplat::cmd_scan_phase(cfg, output_path, workers);
  }
  if (solve->parsed()) {
    if (kind.empty()) {
      kind = cfg.solve.kind;
    }
    return bplat::cmd_solve(cfg, kind, output_path);
  }
  if (transport->parsed()) {
    if (cycles < 0) {
      cycles = cfg.transport.cycles;
    }
    const bplat::TransportModel model = (tmodel_str == "full") ? bplat::TransportModel::full
                                                               : bplat::TransportModel::averaged;
    return bplat::cmd_transport(cfg, cycles, model, output_path);
  }
  return bplat::kExitUsage;
}
