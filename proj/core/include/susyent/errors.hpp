#pragma once

#include <stdexcept>
#include <string>

namespace susyent {

// Internal invariant violated (eigensolver non-convergence, degenerate-pair
// mismatch, oracle cross-check failure).  Distinct from std::invalid_argument,
// which is reserved for bad caller input.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure, carries the offending path in the message.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace susyent
