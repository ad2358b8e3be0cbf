// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pasdfs {

// Requested index or order exceeds a fixed table or basis capacity bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An engineering operation drove the state norm below the annihilation
// threshold; the requested state does not exist.
class AnnihilationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The truncated basis is too small for the requested accuracy.  Carries a
// suggested larger dimension for retrying.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int suggested_dim)
      : std::runtime_error(what), suggested_dim_(suggested_dim) {}

  int suggested_dim() const noexcept { return suggested_dim_; }

 private:
  int suggested_dim_;
};

}  // namespace pasdfs
