#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiform
{

// Two operands live in different coefficient rings a0..an.
class ContextMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A request exceeds the desk-scale guardrails (basis dimension, oracle size).
class CapacityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A computed quantity contradicts a proven theorem. Never expected to fire.
class TheoremViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Largest basis dimension accepted by the linear algebra layer. Reads
// SEMIFORM_MAX_DIM on every call, defaulting to 5000.
std::size_t max_dimension();

} // namespace semiform
