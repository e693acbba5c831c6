#pragma once

#include <stdexcept>
#include <string>

namespace dcx {

/// Operands belong to different fields (or a value does not lie in the requested field).
class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A double complex (or morphism) fails validation where a valid one is required.
class InvalidComplex : public std::invalid_argument {
 public:
  explicit InvalidComplex(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dcx
