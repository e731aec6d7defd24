#pragma once

#include <stdexcept>
#include <string>

namespace ghd {

/// Thrown when an exhaustive/enumeration cap would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed protocol tables (missing entries, bad bit widths).
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a randomized construction fails its post-check after retries.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghd
