// Exception types shared by all polarmem modules.
#pragma once

#include <stdexcept>
#include <string>

namespace polarmem {

/// Malformed input data (channel tables, state vectors, code specs).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Requested object would exceed a configured size or memory budget.
class BudgetError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Buffer or vector lengths disagree with the code dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A stateful object was used in a way its protocol forbids.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace polarmem
