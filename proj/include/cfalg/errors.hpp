#pragma once

#include <stdexcept>
#include <string>

namespace cfalg {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text: spec files, scalar strings, unknown basis labels.
struct ParseError : Error {
    using Error::Error;
};

/// A construction precondition failed: caps exceeded, invalid subgroup,
/// malformed permutation, degenerate form where a non-degenerate one is
/// required, invalid builder parameters.
struct BuildError : Error {
    using Error::Error;
};

/// Exact inversion hit a singular matrix.
struct SingularMatrixError : BuildError {
    SingularMatrixError() : BuildError("singular matrix") {}
    explicit SingularMatrixError(const std::string& what) : BuildError(what) {}
};

}  // namespace cfalg
