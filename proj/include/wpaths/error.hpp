#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpaths {

/// Bad arguments from a caller: unknown variable, wrong family, out-of-domain order.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A path word that does not describe a valid lattice path.
class PathError : public std::invalid_argument {
 public:
  PathError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at step " + std::to_string(position)),
        position_(position) {}

  /// 1-based index of the offending step.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input that parses but violates a labeling precondition.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request beyond a configured resource cap (enumeration order).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

}  // namespace wpaths
