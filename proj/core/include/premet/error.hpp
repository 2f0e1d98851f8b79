#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace premet {

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  ElementNotInLattice,
  NotValueDistributive,
  IdNotInGround,
  GroundMismatch,
  GroundTooLarge,
  DuplicateId,
  PointNotInSpace,
  InvalidSpace,
  NotATopology,
  EpsNotPositive,
  NTooLarge,
  PointNotInImage,
  SizeLimitExceeded,
  ProbeTooLarge,
  InvalidMap,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `field()` names the offending input
/// location when one is known (a JSON path, a point id, a lattice element).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string field = {})
      : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorKind kind_;
  std::string field_;
};

}  // namespace premet
