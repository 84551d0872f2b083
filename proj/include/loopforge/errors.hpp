#pragma once

#include <stdexcept>
#include <string>

namespace loopforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input grid is not square / entries out of range.
struct ShapeError : Error {
    using Error::Error;
};

// A row or column of a would-be Cayley table repeats a symbol.
struct LatinViolation : Error {
    bool in_row;   // false: column
    int index;     // which row/column
    int symbol;    // the repeated symbol
    LatinViolation(bool in_row_, int index_, int symbol_)
        : Error(std::string(in_row_ ? "row " : "column ") + std::to_string(index_) +
                " repeats symbol " + std::to_string(symbol_)),
          in_row(in_row_), index(index_), symbol(symbol_) {}
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct NotAnIsotopism : Error {
    using Error::Error;
};

struct NotCommuting : Error {
    using Error::Error;
};

struct NotWeakInverse : Error {
    using Error::Error;
};

struct OrderTooLarge : Error {
    using Error::Error;
};

struct GenerationFailure : Error {
    using Error::Error;
};

struct UnknownClaim : Error {
    using Error::Error;
};

}  // namespace loopforge
