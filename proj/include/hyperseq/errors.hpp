#pragma once

#include <stdexcept>
#include <string>

namespace hyperseq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter lies in the excluded set of the operation's definition.
struct InvalidParameter : Error {
    using Error::Error;
};

/// Exact division by zero.
struct DivisionByZero : Error {
    using Error::Error;
};

/// Text that does not parse as a rational, or a malformed document.
struct ParseError : Error {
    using Error::Error;
};

/// Series evaluation requested for a spec with no nonpositive-integer
/// numerator parameter.
struct NonTerminating : Error {
    using Error::Error;
};

/// A denominator Pochhammer vanishes within the summation range.
struct DenominatorPole : Error {
    using Error::Error;
};

/// Requested polynomial degree exceeds the family's cap N.
struct DegreeExceedsN : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

} // namespace hyperseq
