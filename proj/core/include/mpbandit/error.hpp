#pragma once

#include <stdexcept>
#include <string>

namespace mpbandit {

/// Invalid experiment or model configuration. Raised before any turn runs.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mpbandit
