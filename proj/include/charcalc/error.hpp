#ifndef CHARCALC_ERROR_HPP
#define CHARCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace charcalc {

// Base of every error raised by the engine. All of them describe bad input
// (an operation called outside its domain), never an internal fault.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different ambient rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// Rewrite system is malformed, does not terminate, or is not confluent.
class PresentationError : public Error {
 public:
  using Error::Error;
};

// Requested element is not part of the designated fiber basis.
class BasisError : public Error {
 public:
  using Error::Error;
};

// Partition or index longer than the number of available variables.
class ArityError : public Error {
 public:
  using Error::Error;
};

// Polynomial fed to a symmetric-function routine is not symmetric.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

// Precondition of an operation violated (degrees, ranges, shapes).
class SpecError : public Error {
 public:
  using Error::Error;
};

// Nondegeneracy fails: the fiber class has vanishing top power.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Spherical evaluation requested outside the single-leaf model.
class EvaluationModelError : public Error {
 public:
  using Error::Error;
};

// Circle action with all weights equal.
class TrivialActionError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace charcalc

#endif  // CHARCALC_ERROR_HPP
