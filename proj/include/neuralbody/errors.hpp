#pragma once

#include <stdexcept>
#include <string>

namespace neuralbody {

// Error taxonomy mirrored by the C API status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ContractError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct DatasetError : Error {
  using Error::Error;
};
struct GeometryError : Error {
  using Error::Error;
};
struct ModelCorruptError : Error {
  using Error::Error;
};
struct TrainingError : Error {
  using Error::Error;
};
struct PlanningError : Error {
  using Error::Error;
};

}  // namespace neuralbody
