#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decklab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NotSquare : public Error
{
public:
    using Error::Error;
};

class NotCommutative : public Error
{
public:
    NotCommutative(int i, int j)
      : Error("table is not commutative at (" + std::to_string(i) + ", " +
              std::to_string(j) + ")"),
        i(i), j(j)
    {
    }
    int i, j;
};

class OutOfRange : public Error
{
public:
    using Error::Error;
};

/// A semiring axiom failed; `witness` names the offending elements.
class AxiomViolation : public Error
{
public:
    AxiomViolation(std::string axiom, std::string witness)
      : Error(axiom + " violated at " + witness),
        axiom(std::move(axiom)), witness(std::move(witness))
    {
    }
    std::string axiom;
    std::string witness;
};

class NotAMonoid : public AxiomViolation
{
public:
    using AxiomViolation::AxiomViolation;
};
class RightIdentityViolation : public AxiomViolation
{
public:
    using AxiomViolation::AxiomViolation;
};
class RightDistributivityViolation : public AxiomViolation
{
public:
    using AxiomViolation::AxiomViolation;
};
class RightAnnihilationViolation : public AxiomViolation
{
public:
    using AxiomViolation::AxiomViolation;
};

class NotPrime : public Error
{
public:
    using Error::Error;
};

/// An enumeration, order, or arity limit would be exceeded.
class CapExceeded : public Error
{
public:
    using Error::Error;
};

class EnumerationCapExceeded : public CapExceeded
{
public:
    using CapExceeded::CapExceeded;
};

class ArityCapExceeded : public CapExceeded
{
public:
    using CapExceeded::CapExceeded;
};

class OrderMismatch : public Error
{
public:
    using Error::Error;
};

class CardinalityTooSmall : public Error
{
public:
    using Error::Error;
};

class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

class BadCouple : public Error
{
public:
    using Error::Error;
};

class HypothesisUnmet : public Error
{
public:
    using Error::Error;
};

class DomainMismatch : public Error
{
public:
    using Error::Error;
};

class CarrierMismatch : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line), column(column)
    {
    }
    std::size_t line, column;
};

/// A proved statement failed on a concrete instance. Always a bug.
class Falsification : public Error
{
public:
    using Error::Error;
};

} // namespace decklab
