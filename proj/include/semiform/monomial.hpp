#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace semiform
{

// a0^e0 * a1^e1 * ... * an^en. The exponent vector always has length n + 1.
class Monomial
{
public:
    explicit Monomial(std::vector<unsigned> exponents);

    // The constant monomial 1 in a0..an.
    static Monomial one(unsigned n);
    // aj^power in a0..an.
    static Monomial variable(unsigned n, unsigned j, unsigned power = 1);

    unsigned context_n() const
    {
        return static_cast<unsigned>(m_exps.size() - 1);
    }
    std::span<const unsigned> exponents() const
    {
        return m_exps;
    }
    unsigned operator[](std::size_t j) const
    {
        return m_exps[j];
    }

    // Sum of exponents.
    unsigned degree() const;
    // Sum of j * exponent_j.
    unsigned weight() const;

    Monomial operator*(const Monomial &other) const;

    // Multiplies in aj^power, or divides it out when power is negative.
    // Throws std::domain_error if the exponent would go below zero.
    Monomial shifted(unsigned j, int power) const;

    std::string to_string() const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<unsigned> m_exps;
};

// Canonical term order: monomials ranked by their partitions in descending
// lexicographic order, so (4,2) precedes (4,1,1) precedes (3,3). Equivalent to
// comparing exponent vectors lexicographically from a_n down to a_0, larger
// first.
struct CanonicalOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

} // namespace semiform
