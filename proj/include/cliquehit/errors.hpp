#pragma once

#include <stdexcept>
#include <string>

namespace cliquehit {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad vertex ids, self-loops, unparsable files, bad parameters.
struct InputError : Error {
    using Error::Error;
};

// A documented operation contract was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// A size or budget cap was exceeded.
struct LimitError : Error {
    using Error::Error;
};

// A state the underlying theory rules out on valid input was reached.
// Seeing this means a bug in the library, not in the caller.
struct ContradictionError : Error {
    using Error::Error;
};

}  // namespace cliquehit
