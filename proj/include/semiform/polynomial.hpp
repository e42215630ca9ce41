#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <semiform/monomial.hpp>
#include <semiform/rational.hpp>

namespace semiform
{

// Immutable sparse polynomial over Q in the coefficients a0..an of a binary
// n-form. Terms are kept in canonical order with no zero coefficients.
class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

    // The zero polynomial in a0..an.
    explicit Polynomial(unsigned n);
    // Drops zero coefficients; throws ContextMismatch if a monomial has the
    // wrong number of exponents.
    Polynomial(unsigned n, TermMap terms);

    static Polynomial constant(unsigned n, const Rational &c);
    static Polynomial variable(unsigned n, unsigned j);
    static Polynomial from_monomial(const Monomial &mono, const Rational &c = 1);

    // Parses text such as "3*a1^2*a2^2 - 4*a1^3*a3 + 1/2*a0". Variables above
    // a_n are rejected.
    static Polynomial parse(unsigned n, std::string_view text);

    unsigned context_n() const
    {
        return m_n;
    }
    const TermMap &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    std::size_t term_count() const
    {
        return m_terms.size();
    }
    Rational coefficient(const Monomial &mono) const;

    // Human-readable form in canonical order, e.g. "a0*a2 - a1^2".
    std::string to_string() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial &p, const Polynomial &q);
    friend Polynomial operator-(const Polynomial &p, const Polynomial &q);
    friend Polynomial operator*(const Polynomial &p, const Polynomial &q);
    friend Polynomial operator*(const Rational &c, const Polynomial &p);
    friend Polynomial operator/(const Polynomial &p, const Rational &c);

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    unsigned m_n;
    TermMap m_terms;
};

// Adds c * mono into a term map, erasing the entry when it cancels.
void accumulate_term(Polynomial::TermMap &terms, const Monomial &mono, const Rational &c);

// Function-style aliases; both throw ContextMismatch on differing contexts.
Polynomial add(const Polynomial &p, const Polynomial &q);
Polynomial mul(const Polynomial &p, const Polynomial &q);

struct Homogeneity {
    unsigned degree;
    unsigned weight;

    friend bool operator==(const Homogeneity &, const Homogeneity &) = default;
};

// (degree, weight) shared by every term, or nullopt when terms disagree. The
// zero polynomial has no terms to agree on and yields nullopt.
std::optional<Homogeneity> homogeneity(const Polynomial &p);

} // namespace semiform
