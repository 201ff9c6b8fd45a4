#ifndef WEYL_ERRORS_HPP
#define WEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weyl
{

// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division by zero") {}
};

// A Hadamard series still had a nonzero iterate after the iteration cap.
class NonTerminatingSeries : public Error
{
public:
    using Error::Error;
};

// An exact division by (a power of) the central element c left a remainder.
class NonDivisible : public Error
{
public:
    using Error::Error;
};

class PreconditionViolation : public Error
{
public:
    using Error::Error;
};

// An internal consistency check failed. Signals a bug, not bad input.
class InvariantViolation : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

class ConfigError : public Error
{
public:
    using Error::Error;
};

} // namespace weyl

#endif
