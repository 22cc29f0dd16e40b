#pragma once

#include <stdexcept>
#include <string>

namespace axi {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An aggregate was requested over an empty set (no eligible transactions,
/// empty window, empty date intersection, ...).
class NoDataError : public Error {
public:
    explicit NoDataError(const std::string& what) : Error(what) {}
};

/// A transaction falls outside the eligible maturity range.
class IneligibleError : public Error {
public:
    explicit IneligibleError(const std::string& what) : Error(what) {}
};

/// Input failed schema or value validation; message carries the location.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A series does not cover a required date range.
class MissingDataError : public Error {
public:
    explicit MissingDataError(const std::string& what) : Error(what) {}
};

/// A computation is mathematically degenerate (zero denominator, zero
/// variance, singular design matrix).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace axi
