#pragma once

#include <stdexcept>
#include <string>

namespace padicsl2 {

// Base class of every error raised by this library. All domain failures are
// reported as exceptions derived from this type; std exceptions only escape
// for programming errors (bad_alloc and friends).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input was zero where a nonzero value is required (angular components,
// square classes, norm tests of 0, ...).
class ZeroInput : public Error {
public:
  ZeroInput() : Error("zero input") {}
  explicit ZeroInput(const std::string& what) : Error(what) {}
};

// The residue of x is only defined for v_p(x) >= 0.
class NegativeValuation : public Error {
public:
  explicit NegativeValuation(const std::string& what) : Error(what) {}
};

// p failed the primality check, or an operation does not support this prime.
class UnsupportedPrime : public Error {
public:
  explicit UnsupportedPrime(const std::string& what) : Error(what) {}
};

// A square root was requested of a value that is not a square in Q_p.
class NotASquare : public Error {
public:
  explicit NotASquare(const std::string& what) : Error(what) {}
};

// The requested decision cannot be certified at the working precision.
// Raising the precision of the enclosing context is the intended remedy.
class PrecisionExhausted : public Error {
public:
  explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

// Two approximate values from different contexts (different prime or
// different precision cap) were combined.
class ContextMismatch : public Error {
public:
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

// Inversion of (something indistinguishable from) zero.
class NotInvertible : public Error {
public:
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

// Matrix constructor arguments do not satisfy det == 1.
class DeterminantError : public Error {
public:
  explicit DeterminantError(const std::string& what) : Error(what) {}
};

// diagonalize() applied to a matrix that is not split semisimple.
class NotSplit : public Error {
public:
  explicit NotSplit(const std::string& what) : Error(what) {}
};

// qdelta_form() applied to a matrix that is not nonsplit semisimple.
class NotNonsplit : public Error {
public:
  explicit NotNonsplit(const std::string& what) : Error(what) {}
};

// unipotent_form() applied to a matrix with trace != +-2, or to +-identity.
class NotUnipotent : public Error {
public:
  explicit NotUnipotent(const std::string& what) : Error(what) {}
};

// A trace stayed integral across the whole covering family. This would
// falsify the covering property and must never fire; it is surfaced loudly
// instead of being swallowed.
class CoverageViolation : public Error {
public:
  explicit CoverageViolation(const std::string& what) : Error(what) {}
};

// The restricted escape-witness construction saw a translate whose diagonal
// vanishes entirely (a = d = 0); that construction cannot handle it.
class AntidiagonalTranslate : public Error {
public:
  explicit AntidiagonalTranslate(const std::string& what) : Error(what) {}
};

// A constructed witness failed its own verification step. Indicates the
// input was outside the construction's domain of validity.
class WitnessVerificationFailed : public Error {
public:
  explicit WitnessVerificationFailed(const std::string& what) : Error(what) {}
};

// w_orbit_check() requires v_p(tr) < 0.
class NotInW : public Error {
public:
  explicit NotInW(const std::string& what) : Error(what) {}
};

// The requested subgroup tag is not handled by this operation.
class UnsupportedTag : public Error {
public:
  explicit UnsupportedTag(const std::string& what) : Error(what) {}
};

// Malformed textual input (rationals, matrices, families).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Unknown verification suite name.
class UnknownSuite : public Error {
public:
  explicit UnknownSuite(const std::string& what) : Error(what) {}
};

}  // namespace padicsl2
