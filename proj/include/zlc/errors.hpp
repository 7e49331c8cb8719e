#pragma once

#include <stdexcept>
#include <string>

namespace zlc {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A multiplication table failed the group axioms; the message names the
// first violating triple.
struct NotAGroup : Error {
  using Error::Error;
};

// A closure or lattice computation exceeded its configured cap.
struct OrderLimitExceeded : Error {
  using Error::Error;
};

// A subgroup passed where a normal subgroup is required.
struct NotNormal : Error {
  using Error::Error;
};

// An operation defined only for non-abelian groups received an abelian one.
struct AbelianInput : Error {
  using Error::Error;
};

struct NotPrimePower : Error {
  using Error::Error;
};

// A family constructor built a group that fails its own structural checks.
// This signals a wrong presentation in the library, not a user error.
struct ConstructionSanityFailed : Error {
  using Error::Error;
};

struct NoSuitablePrime : Error {
  using Error::Error;
};

struct SplitFailure : Error {
  using Error::Error;
};

// A modular lift fell outside its proven range; internal bug, fail hard.
struct LiftOutOfRange : Error {
  using Error::Error;
};

// Quantity undefined for this input (e.g. smallest non-trivial class size
// of an abelian group).
struct Undefined : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// A value expected to reduce to an exact rational did not.
struct ExactnessViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace zlc
