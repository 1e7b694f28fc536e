#pragma once

#include <stdexcept>
#include <string>

namespace vth {

/// A configured size limit (face count, group order) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural claim that a verification routine depends on did not hold,
/// e.g. overlapping cluster parts or a non-unique collapsing direction.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vth
