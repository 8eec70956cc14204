#pragma once

#include <stdexcept>
#include <string>

namespace qpathlen {

// Thrown when a request exceeds a configured enumeration cap (exit code 3 in
// the CLI), as opposed to a malformed argument (std::invalid_argument).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpathlen
