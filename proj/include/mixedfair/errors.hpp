#pragma once

#include <stdexcept>
#include <string>

namespace mixedfair {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file content, bad rational literal, wrong matrix shape.
struct ParseError : Error {
    using Error::Error;
};

// Data that violates a type invariant (indices out of range, fractions
// outside [0,1], disposal of a good somebody values, non-binary entries).
struct ValidationError : Error {
    using Error::Error;
};

// Instance mode incompatible with the requested mechanism.
struct ModeError : Error {
    using Error::Error;
};

// Operation called outside its contract (e.g. EF1 with divisible goods
// present, potential of an allocation without the water-filling property).
struct PreconditionError : Error {
    using Error::Error;
};

// Enumeration or deviation space larger than the configured cap.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace mixedfair
