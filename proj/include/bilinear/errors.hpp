#pragma once

#include <stdexcept>
#include <string>

namespace bilinear {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
  public:
    using Error::Error;
};

class SingularMatrix : public Error
{
  public:
    using Error::Error;
};

class DimensionMismatch : public Error
{
  public:
    using Error::Error;
};

class MalformedStructure : public Error
{
  public:
    using Error::Error;
};

class UnsupportedKind : public Error
{
  public:
    using Error::Error;
};

/// Raised by the JSON readers; the message starts with the offending location.
class SchemaError : public Error
{
  public:
    using Error::Error;
};

class TripleProductViolation : public Error
{
  public:
    using Error::Error;
};

}  // namespace bilinear
