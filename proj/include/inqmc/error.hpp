#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace inqmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula, QBF or model text. Carries the byte offset of the
/// offending token and the set of tokens that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected = {});

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// An information model violates one of its structural invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A bitstring does not follow the delta/epsilon layout.
class CodecError : public Error {
public:
    using Error::Error;
};

/// A (model, state, formula) triple is not a well-formed query.
class QueryError : public Error {
public:
    using Error::Error;
};

/// A QBF matrix mentions a variable not bound by the prefix.
class ClosureError : public Error {
public:
    using Error::Error;
};

/// Precondition violations in the switching and reduction constructions.
class ReductionError : public Error {
public:
    using Error::Error;
};

} // namespace inqmc
