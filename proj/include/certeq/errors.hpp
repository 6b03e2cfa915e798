#pragma once

#include <stdexcept>
#include <string>

namespace certeq {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument ball leaves the domain of a partial function (ln of a ball
// touching 0, asin of a ball leaving [-1,1], pole inside a trig ball, ...).
class DomainViolation : public Error {
public:
    explicit DomainViolation(const std::string& msg)
        : Error("domain violation: " + msg) {}
};

// A complex ball crosses the negative real axis where ln/pow are evaluated
// on the principal branch.
class BranchCutStraddle : public Error {
public:
    explicit BranchCutStraddle(const std::string& msg)
        : Error("branch cut straddle: " + msg) {}
};

// Divisor ball contains 0.  Callers are expected to refine, we never widen
// to an unbounded ball.
class DivisorMayBeZero : public Error {
public:
    explicit DivisorMayBeZero(const std::string& msg)
        : Error("divisor may be zero: " + msg) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) +
                ": expected " + expected),
          pos(position), expected_set(expected) {}
    std::size_t pos;
    std::string expected_set;
};

// Some boundary segment of a winding contour never excluded 0 within budget.
class BoundaryZero : public Error {
public:
    explicit BoundaryZero(const std::string& msg)
        : Error("boundary zero: " + msg) {}
};

class NoRootWithin : public Error {
public:
    explicit NoRootWithin(const std::string& msg)
        : Error("no root within " + msg) {}
};

class DuplicateExponents : public Error {
public:
    explicit DuplicateExponents(const std::string& msg)
        : Error("duplicate exponents: " + msg) {}
};

class AllCoefficientsZero : public Error {
public:
    AllCoefficientsZero() : Error("all coefficients zero") {}
};

class InputNotCertified : public Error {
public:
    explicit InputNotCertified(const std::string& msg)
        : Error("input not certified: " + msg) {}
};

class ZeroArgument : public Error {
public:
    explicit ZeroArgument(const std::string& msg)
        : Error("zero argument: " + msg) {}
};

class TooFewDigits : public Error {
public:
    explicit TooFewDigits(const std::string& msg)
        : Error("too few digits: " + msg) {}
};

class KeyTooShort : public Error {
public:
    explicit KeyTooShort(const std::string& msg)
        : Error("key too short: " + msg) {}
};

// Digit extraction hit the refinement budget while the enclosure still
// straddles a digit boundary (value suspiciously close to a terminating
// expansion).  Reported, never guessed.
class BoundaryUnresolved : public Error {
public:
    explicit BoundaryUnresolved(const std::string& msg)
        : Error("digit boundary unresolved: " + msg) {}
};

} // namespace certeq
