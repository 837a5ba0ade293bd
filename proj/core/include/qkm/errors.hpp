#pragma once

#include <stdexcept>
#include <string>

namespace qkm {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad arguments or violated preconditions (CLI exit code 2).
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A request that would exceed configured simulator limits (exit code 2).
class ResourceError : public ValidationError {
  public:
    explicit ResourceError(const std::string& what) : ValidationError(what) {}
};

/// Unusable input data: files, rows, cells, zero vectors (exit code 3).
class IngestionError : public Error {
  public:
    explicit IngestionError(const std::string& what) : Error(what) {}
};

/// Internal numeric consistency failure, e.g. norm drift (exit code 4).
class NumericError : public Error {
  public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

} // namespace qkm
