#ifndef BPLAT_CONFIG_HPP
#define BPLAT_CONFIG_HPP

#include <optional>
#include <string>

#include "bplat/dynamics.hpp"
#include "bplat/lattice.hpp"

namespace bplat {

struct SimulateConfig {
  double t_end = 50.0;
  int start_site = 0;
};

struct ScanConfig {
  double phi_min = 0.0;
  double phi_max = 3.141592653589793238462643383279502884;
  int steps = 1000;
};

struct SolveConfig {
  std::string kind = "cdt"; // cdt | dl-forward | dl-backward | instability | cdt-delta-pair
  std::optional<double> bracket_lo;
  std::optional<double> bracket_hi;
  // Gap arguments override; when absent they derive from geometry and drive.
  std::optional<double> delta_a;
  std::optional<double> delta_b;
  double pair_bracket_lo = 4.5;
  double pair_bracket_hi = 6.0;
};

struct TransportConfig {
  int cycles = 3;
  int start_site = 0;
  std::string direction = "right"; // right | left
};

// Whole-run configuration, parsed from sectioned `key = value` text. Unknown
// keys or sections are errors; every field except drive.J0 and drive.omega
// has a default.
struct RunConfig {
  int half_width = 60;
  LatticeGeometry geometry; // window derived from half_width
  DriveParams drive;
  IntegratorConfig integrator;
  SimulateConfig simulate;
  ScanConfig scan;
  SolveConfig solve;
  TransportConfig transport;

  bool has_J0 = false;
  bool has_omega = false;

  GapArguments solve_gaps() const; // [solve] overrides applied over derived gaps
  void validate() const;
};

RunConfig parse_config_text(const std::string &text, const std::string &origin = "<config>");
RunConfig parse_config_file(const std::string &path);

// `dotted` is "section.key"; value syntax identical to the file format.
void apply_override(RunConfig &cfg, const std::string &dotted, const std::string &value);

// Canonical echo; parses back to an identical configuration.
std::string render_config(const RunConfig &cfg);

} // namespace bplat

#endif
