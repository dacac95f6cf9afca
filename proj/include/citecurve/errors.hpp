#pragma once

#include <stdexcept>
#include <string>

namespace citecurve {

/// Bad input data or parameters: rejected before any computation runs.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failures (unreadable file, unwritable output).
/// The CLI maps this to exit code 1.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace citecurve
