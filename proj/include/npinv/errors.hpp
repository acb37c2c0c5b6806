#ifndef NPINV_ERRORS_HPP
#define NPINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace npinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text does not conform to the phase grammar.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position + 1) + ")"),
          position(position) {}
    std::size_t position; // 0-based offset into the input text
};

// A precondition of an operation does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

// Resource limits: degree guard, iteration caps, quadrature node budget.
struct BudgetError : Error {
    using Error::Error;
};

// The principal root of a Varchenko step is irrational; the exact pipeline
// cannot shear by it.
struct IrrationalRootError : Error {
    using Error::Error;
};

// Invariants that must hold by construction failed; indicates a defect,
// not a bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace npinv

#endif
