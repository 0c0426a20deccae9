#pragma once

#include <stdexcept>
#include <string>

namespace paramdiam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, modulator files, DIMACS CNF).
class ParseError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateEdgeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class VertexRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Solvers are defined on connected graphs only.
class DisconnectedError : public Error {
 public:
  DisconnectedError() : Error("graph is not connected") {}
  using Error::Error;
};

// A supplied deletion set does not place the graph in the promised class.
class InvalidModulatorError : public Error {
 public:
  using Error::Error;
};

// A reduction rule was invoked on a vertex or cycle it does not apply to.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Generator parameters that admit no instance.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace paramdiam
