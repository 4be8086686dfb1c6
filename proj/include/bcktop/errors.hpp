#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcktop {

using Index = std::size_t;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation table has the wrong shape or an out-of-range entry.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// An axiom failed; `axiom()` names it and `witnesses()` holds the
/// lexicographically first offending tuple.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Index> witnesses);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<Index>& witnesses() const noexcept { return witnesses_; }

 private:
  std::string axiom_;
  std::vector<Index> witnesses_;
};

/// Group, module (M1-M4) or homomorphism law failure.
class ModuleAxiomViolation : public AxiomViolation {
 public:
  using AxiomViolation::AxiomViolation;
};

class NotBoundedImplicative : public Error {
 public:
  using Error::Error;
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class NotASubmodule : public Error {
 public:
  using Error::Error;
};

class NotCompatible : public Error {
 public:
  using Error::Error;
};

class CarrierTooLarge : public Error {
 public:
  CarrierTooLarge(std::size_t size, std::size_t bound);

  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

/// A postcondition the library asserts on its own results did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bcktop
