#pragma once

#include "lierad/matrix.hpp"

#include <stdexcept>
#include <string>

namespace lierad {

/// Input does not define a valid Lie algebra or valid algebraic data.
class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class JacobiViolation : public AlgebraError {
public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, Vector residual)
      : AlgebraError("Jacobi identity fails on basis triple (" + std::to_string(i) + ", " + std::to_string(j) +
                     ", " + std::to_string(k) + ")"),
        i(i), j(j), k(k), residual(std::move(residual)) {}
  std::size_t i, j, k;
  Vector residual;
};

class InconsistentEntry : public AlgebraError {
public:
  InconsistentEntry(std::size_t i, std::size_t j)
      : AlgebraError("bracket entries [" + std::to_string(i) + "," + std::to_string(j) + "] and [" +
                     std::to_string(j) + "," + std::to_string(i) + "] are not antisymmetric"),
        i(i), j(j) {}
  std::size_t i, j;
};

class NotAnIdeal : public AlgebraError {
public:
  NotAnIdeal() : AlgebraError("subspace is not an ideal") {}
};

class NotASubalgebra : public AlgebraError {
public:
  NotASubalgebra() : AlgebraError("subspace is not a subalgebra") {}
};

class NotInvariant : public AlgebraError {
public:
  NotInvariant() : AlgebraError("subspace is not invariant under the acting operators") {}
};

class NotADerivation : public AlgebraError {
public:
  explicit NotADerivation(std::size_t i)
      : AlgebraError("phi(b_" + std::to_string(i) + ") is not a derivation of the acted-on algebra"), index(i) {}
  std::size_t index;
};

class NotAHomomorphism : public AlgebraError {
public:
  NotAHomomorphism(std::size_t i, std::size_t j, Matrix residual)
      : AlgebraError("phi fails to be a homomorphism on the pair (" + std::to_string(i) + ", " + std::to_string(j) +
                     ")"),
        i(i), j(j), residual(std::move(residual)) {}
  std::size_t i, j;
  Matrix residual;
};

class NotSemisimple : public AlgebraError {
public:
  NotSemisimple() : AlgebraError("algebra is not semisimple") {}
};

class NotFrattiniFree : public AlgebraError {
public:
  NotFrattiniFree() : AlgebraError("algebra is not Frattini-free") {}
};

/// A computed certificate failed its own verification.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when the Frattini-free conditions hold but no witness decomposition was produced.
class WitnessConstructionFailed : public InternalError {
public:
  explicit WitnessConstructionFailed(const std::string& what)
      : InternalError("WitnessConstructionFailed: " + what) {}
};

}  // namespace lierad
