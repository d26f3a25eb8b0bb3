#pragma once

#include <stdexcept>
#include <string>

namespace tid {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};
struct RegistryMismatch : Error {
  explicit RegistryMismatch(const std::string& what) : Error("registry mismatch: " + what) {}
};
struct UnknownVariable : Error {
  explicit UnknownVariable(const std::string& label) : Error("unknown variable: " + label) {}
};
struct UnassignedVariable : Error {
  explicit UnassignedVariable(const std::string& label) : Error("unassigned variable: " + label) {}
};
struct NotSquareSelection : Error {
  explicit NotSquareSelection(const std::string& what) : Error("minor selection not square: " + what) {}
};
struct NonConstantEntry : Error {
  NonConstantEntry() : Error("matrix entry is not a constant") {}
};
struct InhomogeneousInput : Error {
  explicit InhomogeneousInput(const std::string& what) : Error("inhomogeneous input: " + what) {}
};
struct ResourceBudgetExceeded : Error {
  explicit ResourceBudgetExceeded(const std::string& what) : Error("resource budget exceeded: " + what) {}
};
struct AxisOutOfRange : Error {
  explicit AxisOutOfRange(const std::string& what) : Error("axis out of range: " + what) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};
struct InvalidAxisSubset : Error {
  explicit InvalidAxisSubset(const std::string& what) : Error("invalid axis subset: " + what) {}
};
struct NotVariableEntries : Error {
  NotVariableEntries() : Error("hypermatrix entries must be single variables") {}
};
struct InvalidProfile : Error {
  explicit InvalidProfile(const std::string& what) : Error("invalid profile: " + what) {}
};
struct GenericityFailure : Error {
  explicit GenericityFailure(const std::string& what) : Error("genericity failure: " + what) {}
};
struct DegenerateDegree : Error {
  explicit DegenerateDegree(const std::string& what) : Error("degenerate degree: " + what) {}
};
struct NotRankOne : Error {
  NotRankOne() : Error("assignment does not satisfy the rank-one equations") {}
};
struct ZeroMatrix : Error {
  ZeroMatrix() : Error("matrix vanishes identically at the assignment") {}
};

}  // namespace tid
