#pragma once

#include <stdexcept>

namespace hchain {

/// A numerical procedure could not produce a result (eigensolver failure, missing bracket).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hchain
