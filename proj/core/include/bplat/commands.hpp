#ifndef BPLAT_COMMANDS_HPP
#define BPLAT_COMMANDS_HPP

#include <string>

#include "bplat/config.hpp"
#include "bplat/transport.hpp"

namespace bplat {

// Exit-code contract shared by the command layer and the CLI binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // config parse / usage errors
inline constexpr int kExitIntegrator = 3; // edge leak or step-size underflow
inline constexpr int kExitSolver = 4;     // solver infeasibility

enum class SimModel { full, averaged, analytic };

// Empty output path = write data to stdout. Diagnostics go to stderr.
int cmd_simulate(const RunConfig &cfg, SimModel model, const std::string &output_path);
int cmd_scan_phase(const RunConfig &cfg, const std::string &output_path, int workers = 1);
int cmd_solve(const RunConfig &cfg, const std::string &kind, const std::string &output_path);
int cmd_transport(const RunConfig &cfg, int cycles, TransportModel model,
                  const std::string &output_path);

} // namespace bplat

#endif
