#pragma once

#include <stdexcept>
#include <string>

namespace gwg {

/// Invalid scheme/run configuration (bad degrees, unsupported quadrature order, bad JSON).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwg
