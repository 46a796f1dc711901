#pragma once

#include <stdexcept>
#include <string>

namespace twr {

// Channel realization is numerically rank deficient; Monte-Carlo drivers
// resample the trial instead of aborting.
class degenerate_channel_error : public std::runtime_error {
 public:
  explicit degenerate_channel_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical solve did not reach the requested accuracy.
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or missing scenario configuration. Maps to exit code 2 in the CLI.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace twr
