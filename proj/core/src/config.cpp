#include "bplat/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bplat/errors.hpp"
#include "bplat/io.hpp"

namespace bplat {

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string &v, const std::string &where) {
  const std::string t = trim(v);
  char *end = nullptr;
  const double d = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) {
    throw ConfigError(where + ": not a number: '" + v + "'");
  }
  return d;
}

int parse_int(const std::string &v, const std::string &where) {
  const std::string t = trim(v);
  char *end = nullptr;
  const long l = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size()) {
    throw ConfigError(where + ": not an integer: '" + v + "'");
  }
  return static_cast<int>(l);
}

// One flat dispatch point shared by the file parser and --key overrides.
void set_key(RunConfig &cfg, const std::string &key, const std::string &value,
             const std::string &where) {
  if (key == "geometry.a") {
    cfg.geometry.a = parse_double(value, where);
  } else if (key == "geometry.b") {
    cfg.geometry.b = parse_double(value, where);
  } else if (key == "geometry.half_width") {
    cfg.half_width = parse_int(value, where);
  } else if (key == "drive.J0") {
    cfg.drive.J0 = parse_double(value, where);
    cfg.has_J0 = true;
  } else if (key == "drive.deltaJ") {
    cfg.drive.deltaJ = parse_double(value, where);
  } else if (key == "drive.E0") {
    cfg.drive.E0 = parse_double(value, where);
  } else if (key == "drive.omega") {
    cfg.drive.omega = parse_double(value, where);
    cfg.has_omega = true;
  } else if (key == "drive.m") {
    cfg.drive.m = parse_int(value, where);
  } else if (key == "drive.phi") {
    cfg.drive.phi = parse_double(value, where);
  } else if (key == "integrator.rel_tol") {
    cfg.integrator.rel_tol = parse_double(value, where);
  } else if (key == "integrator.abs_tol") {
    cfg.integrator.abs_tol = parse_double(value, where);
  } else if (key == "integrator.dt_max") {
    cfg.integrator.dt_max = parse_double(value, where);
  } else if (key == "integrator.edge_leak_tol") {
    cfg.integrator.edge_leak_tol = parse_double(value, where);
  } else if (key == "integrator.samples") {
    cfg.integrator.samples = parse_int(value, where);
  } else if (key == "simulate.t_end") {
    cfg.simulate.t_end = parse_double(value, where);
  } else if (key == "simulate.start_site") {
    cfg.simulate.start_site = parse_int(value, where);
  } else if (key == "scan.phi_min") {
    cfg.scan.phi_min = parse_double(value, where);
  } else if (key == "scan.phi_max") {
    cfg.scan.phi_max = parse_double(value, where);
  } else if (key == "scan.steps") {
    cfg.scan.steps = parse_int(value, where);
  } else if (key == "solve.kind") {
    cfg.solve.kind = trim(value);
  } else if (key == "solve.bracket_lo") {
    cfg.solve.bracket_lo = parse_double(value, where);
  } else if (key == "solve.bracket_hi") {
    cfg.solve.bracket_hi = parse_double(value, where);
  } else if (key == "solve.delta_a") {
    cfg.solve.delta_a = parse_double(value, where);
  } else if (key == "solve.delta_b") {
    cfg.solve.delta_b = parse_double(value, where);
  } else if (key == "solve.pair_bracket_lo") {
    cfg.solve.pair_bracket_lo = parse_double(value, where);
  } else if (key == "solve.pair_bracket_hi") {
    cfg.solve.pair_bracket_hi = parse_double(value, where);
  } else if (key == "transport.cycles") {
    cfg.transport.cycles = parse_int(value, where);
  } else if (key == "transport.start_site") {
    cfg.transport.start_site = parse_int(value, where);
  } else if (key == "transport.direction") {
    const std::string d = trim(value);
    if (d != "right" && d != "left") {
      throw ConfigError(where + ": transport.direction must be 'right' or 'left'");
    }
    cfg.transport.direction = d;
  } else {
    throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

const char *kSections[] = {"geometry", "drive",     "integrator", "simulate",
                           "scan",     "solve",     "transport"};

bool known_section(const std::string &s) {
  for (const char *k : kSections) {
    if (s == k) {
      return true;
    }
  }
  return false;
}

} // namespace

GapArguments RunConfig::solve_gaps() const {
  GapArguments gaps = gap_arguments(geometry, drive);
  if (solve.delta_a) {
    gaps.delta_a = *solve.delta_a;
  }
  if (solve.delta_b) {
    gaps.delta_b = *solve.delta_b;
  }
  return gaps;
}

void RunConfig::validate() const {
  if (!has_J0 || !has_omega) {
    throw ConfigError("drive.J0 and drive.omega are required and have no defaults");
  }
  if (half_width < 1) {
    throw ConfigError("geometry.half_width must be >= 1");
  }
  geometry.validate();
  drive.validate();
  if (!(integrator.rel_tol > 0.0) || !(integrator.abs_tol > 0.0) ||
      !(integrator.edge_leak_tol > 0.0)) {
    throw ConfigError("integrator tolerances must be positive");
  }
  if (integrator.samples < 1) {
    throw ConfigError("integrator.samples must be >= 1");
  }
}

RunConfig parse_config_text(const std::string &text, const std::string &origin) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::string where = origin + ":" + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(where + ": malformed section header '" + line + "'");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (!known_section(section)) {
        throw ConfigError(where + ": unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected 'key = value', got '" + line + "'");
    }
    if (section.empty()) {
      throw ConfigError(where + ": key outside any [section]");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    set_key(cfg, section + "." + key, value, where);
  }
  cfg.geometry.n_min = -cfg.half_width;
  cfg.geometry.n_max = cfg.half_width;
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

void apply_override(RunConfig &cfg, const std::string &dotted, const std::string &value) {
  const auto dot = dotted.find('.');
  if (dot == std::string::npos || !known_section(dotted.substr(0, dot))) {
    throw ConfigError("override '" + dotted + "': expected section.key");
  }
  set_key(cfg, dotted, value, "override --" + dotted);
  cfg.geometry.n_min = -cfg.half_width;
  cfg.geometry.n_max = cfg.half_width;
  cfg.validate();
}

std::string render_config(const RunConfig &cfg) {
  std::ostringstream os;
  os << "[geometry]\n";
  os << "a = " << fmt17(cfg.geometry.a) << "\n";
  os << "b = " << fmt17(cfg.geometry.b) << "\n";
  os << "half_width = " << cfg.half_width << "\n\n";
  os << "[drive]\n";
  os << "J0 = " << fmt17(cfg.drive.J0) << "\n";
  os << "deltaJ = " << fmt17(cfg.drive.deltaJ) << "\n";
  os << "E0 = " << fmt17(cfg.drive.E0) << "\n";
  os << "omega = " << fmt17(cfg.drive.omega) << "\n";
  os << "m = " << cfg.drive.m << "\n";
  os << "phi = " << fmt17(cfg.drive.phi) << "\n\n";
  os << "[integrator]\n";
  os << "rel_tol = " << fmt17(cfg.integrator.rel_tol) << "\n";
  os << "abs_tol = " << fmt17(cfg.integrator.abs_tol) << "\n";
  os << "dt_max = " << fmt17(cfg.integrator.dt_max) << "\n";
  os << "edge_leak_tol = " << fmt17(cfg.integrator.edge_leak_tol) << "\n";
  os << "samples = " << cfg.integrator.samples << "\n\n";
  os << "[simulate]\n";
  os << "t_end = " << fmt17(cfg.simulate.t_end) << "\n";
  os << "start_site = " << cfg.simulate.start_site << "\n\n";
  os << "[scan]\n";
  os << "phi_min = " << fmt17(cfg.scan.phi_min) << "\n";
  os << "phi_max = " << fmt17(cfg.scan.phi_max) << "\n";
  os << "steps = " << cfg.scan.steps << "\n\n";
  os << "[solve]\n";
  os << "kind = " << cfg.solve.kind << "\n";
  if (cfg.solve.bracket_lo) {
    os << "bracket_lo = " << fmt17(*cfg.solve.bracket_lo) << "\n";
  }
  if (cfg.solve.bracket_hi) {
    os << "bracket_hi = " << fmt17(*cfg.solve.bracket_hi) << "\n";
  }
  if (cfg.solve.delta_a) {
    os << "delta_a = " << fmt17(*cfg.solve.delta_a) << "\n";
  }
  if (cfg.solve.delta_b) {
    os << "delta_b = " << fmt17(*cfg.solve.delta_b) << "\n";
  }
  os << "pair_bracket_lo = " << fmt17(cfg.solve.pair_bracket_lo) << "\n";
  os << "pair_bracket_hi = " << fmt17(cfg.solve.pair_bracket_hi) << "\n\n";
  os << "[transport]\n";
  os << "cycles = " << cfg.transport.cycles << "\n";
  os << "start_site = " << cfg.transport.start_site << "\n";
  os << "direction = " << cfg.transport.direction << "\n";
  return os.str();
}

} // namespace bplat
