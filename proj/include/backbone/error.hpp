#pragma once

#include <stdexcept>
#include <string>

namespace backbone {

// Malformed or out-of-contract input (bad indices, size mismatch, bad file).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A domain object that fails a validity check (e.g. a set that is not independent).
class ValidityError : public std::runtime_error {
 public:
  explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace backbone
