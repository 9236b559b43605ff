#pragma once

#include <stdexcept>
#include <string>

namespace singulant {

// Operands live in different ambient rings, an index is out of range, or a
// value violates a structural invariant.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A mathematical precondition of an operation does not hold (for example the
// ideal passed to loewy_length is not m-primary).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is valid but outside what the implemented algorithm handles.
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Groebner computation exceeded its degree or step budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace singulant
