#pragma once

#include <stdexcept>
#include <string>

namespace mage {

// Base class for all domain errors raised by the library. Each condition the
// public contracts name gets its own type so callers can catch precisely.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MissingAssignment : public Error {
public:
    explicit MissingAssignment(const std::string& var)
        : Error("no value assigned to variable '" + var + "'") {}
};

class GeneratorSetMismatch : public Error {
public:
    GeneratorSetMismatch() : Error("operands live over different generator sets") {}
};

class DegreeError : public Error {
public:
    explicit DegreeError(const std::string& msg) : Error(msg) {}
};

class DegreeZero : public DegreeError {
public:
    DegreeZero() : DegreeError("cannot contract a 0-form") {}
};

class DegreeTooHigh : public DegreeError {
public:
    DegreeTooHigh() : DegreeError("form degree exceeds the base dimension") {}
};

class WrongDegree : public DegreeError {
public:
    explicit WrongDegree(const std::string& msg) : DegreeError(msg) {}
};

class NotDegenerateAlongReeb : public Error {
public:
    NotDegenerateAlongReeb()
        : Error("form is not degenerate along the Reeb field; apply project() first") {}
};

class NoResidual : public Error {
public:
    NoResidual() : Error("internal: Hodge-Lepage residual system is inconsistent") {}
};

class NotEffective : public Error {
public:
    NotEffective() : Error("form is not effective") {}
};

class ExtendedGeneratorPresent : public Error {
public:
    ExtendedGeneratorPresent()
        : Error("operation requires the unextended jet chart generators dq, du, dp") {}
};

class OrderTooHigh : public Error {
public:
    explicit OrderTooHigh(const std::string& msg) : Error(msg) {}
};

class UnknownEquation : public Error {
public:
    explicit UnknownEquation(const std::string& name)
        : Error("unknown catalog equation '" + name + "'") {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class UnknownParameter : public Error {
public:
    explicit UnknownParameter(const std::string& name)
        : Error("unknown parameter or variable '" + name + "'") {}
};

class OperationCancelled : public Error {
public:
    OperationCancelled() : Error("operation cancelled") {}
};

// Raised by the DSL parsers; carries the byte offset of the failure and a
// short description of what was expected there.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
          position_(position),
          expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace mage
