#pragma once

// Hard-coded test vectors shared by several test binaries.

#include <semiform/polynomial.hpp>

namespace fixtures
{

// The two degree-4, weight-6 semi-invariants of the binary quartic.
inline semiform::Polynomial I1()
{
    return semiform::Polynomial::parse(
        4, "3*a1^2*a2^2 - 4*a1^3*a3 - 2*a0*a1*a2*a3 + 3*a0^2*a3^2 + 4*a0*a1^2*a4 - 4*a0^2*a2*a4");
}

inline semiform::Polynomial I2()
{
    return semiform::Polynomial::parse(4, "a0*a2^3 - 2*a0*a1*a2*a3 + a0^2*a3^2 + a0*a1^2*a4 - a0^2*a2*a4");
}

} // namespace fixtures
