#ifndef BPLAT_ERRORS_HPP
#define BPLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bplat {

// Probability reached the truncation edge; the window is too small for the run.
class EdgeLeakError : public std::runtime_error {
public:
  explicit EdgeLeakError(const std::string &what) : std::runtime_error(what) {}
};

// The adaptive stepper could not make progress (step size underflow).
class StiffnessError : public std::runtime_error {
public:
  explicit StiffnessError(const std::string &what) : std::runtime_error(what) {}
};

// A condition solver has no solution for the requested parameters.
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string &what) : std::runtime_error(what) {}
};

// A phase schedule could not be built from the given inputs.
class ScheduleError : public std::runtime_error {
public:
  explicit ScheduleError(const std::string &what) : std::runtime_error(what) {}
};

// Run-configuration file or override could not be parsed.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace bplat

#endif
