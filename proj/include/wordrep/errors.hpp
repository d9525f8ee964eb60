#pragma once

#include <stdexcept>
#include <string>

namespace wordrep {

// Thrown when an operation would exceed its desk-scale guard. Guards keep
// exhaustive searches reproducible on a laptop; operations that accept an
// override flag can lift them explicitly.
class scale_guard_error : public std::runtime_error {
 public:
  explicit scale_guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wordrep
