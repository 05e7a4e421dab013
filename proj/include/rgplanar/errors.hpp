#pragma once

#include <stdexcept>

namespace rgp {

/// Raised for malformed input (bad group spec, out-of-range element, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configured resource cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rgp
