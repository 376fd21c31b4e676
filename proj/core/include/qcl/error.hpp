#pragma once

#include <stdexcept>
#include <string>

namespace qcl {

/// Library-wide error type. Preconditions and physical applicability
/// guards throw this with a human-readable message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcl
