#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace comblap {

/// Base class for all recoverable comblap errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed user input (files, parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a connected graph but the support is not connected.
/// Carries the connected components of the offending support.
class DisconnectedError : public Error {
 public:
  DisconnectedError(const std::string& msg,
                    std::vector<std::vector<int>> components = {})
      : Error(msg), components_(std::move(components)) {}

  const std::vector<std::vector<int>>& components() const { return components_; }

 private:
  std::vector<std::vector<int>> components_;
};

}  // namespace comblap
