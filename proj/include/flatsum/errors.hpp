#pragma once

#include <stdexcept>
#include <string>

namespace flatsum {

/// Invalid input: a value outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation that would exceed its evaluation, memory or range budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flatsum
