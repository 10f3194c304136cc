#ifndef GSOG_ERRORS_HPP
#define GSOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsog {

// Contract violations on in-memory values (non-SPD precision, zero-norm
// quaternion, empty cloud, length mismatch, ...) throw std::domain_error.
// File-level problems get their own types so callers can map them to
// distinct exit codes.

/// A model/config file failed to parse or validate.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A data file (point cloud, depth map, CSV, pose file) failed to load.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsog

#endif  // GSOG_ERRORS_HPP
