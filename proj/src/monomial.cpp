#include <semiform/monomial.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <semiform/errors.hpp>

namespace semiform
{

Monomial::Monomial(std::vector<unsigned> exponents) : m_exps(std::move(exponents))
{
    if (m_exps.empty()) {
        throw std::invalid_argument("monomial needs at least one exponent (a0)");
    }
}

Monomial Monomial::one(unsigned n)
{
    return Monomial(std::vector<unsigned>(n + 1, 0));
}

Monomial Monomial::variable(unsigned n, unsigned j, unsigned power)
{
    if (j > n) {
        throw std::out_of_range("variable a" + std::to_string(j) + " outside a0..a" + std::to_string(n));
    }
    std::vector<unsigned> e(n + 1, 0);
    e[j] = power;
    return Monomial(std::move(e));
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto e : m_exps) {
        d += e;
    }
    return d;
}

unsigned Monomial::weight() const
{
    unsigned w = 0;
    for (std::size_t j = 1; j < m_exps.size(); ++j) {
        w += static_cast<unsigned>(j) * m_exps[j];
    }
    return w;
}

Monomial Monomial::operator*(const Monomial &other) const
{
    if (other.m_exps.size() != m_exps.size()) {
        throw ContextMismatch("monomial contexts differ: a0..a" + std::to_string(context_n()) + " vs a0..a"
                              + std::to_string(other.context_n()));
    }
    std::vector<unsigned> e(m_exps);
    for (std::size_t j = 0; j < e.size(); ++j) {
        e[j] += other.m_exps[j];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::shifted(unsigned j, int power) const
{
    std::vector<unsigned> e(m_exps);
    const long next = static_cast<long>(e.at(j)) + power;
    if (next < 0) {
        throw std::domain_error("negative exponent of a" + std::to_string(j));
    }
    e[j] = static_cast<unsigned>(next);
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t j = 0; j < m_exps.size(); ++j) {
        if (m_exps[j] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'a' + std::to_string(j);
        if (m_exps[j] > 1) {
            out += '^' + std::to_string(m_exps[j]);
        }
    }
    return out.empty() ? "1" : out;
}

bool CanonicalOrder::operator()(const Monomial &a, const Monomial &b) const
{
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    // Contexts are validated by Polynomial; fall back to length for a strict weak order.
    if (ea.size() != eb.size()) {
        return ea.size() > eb.size();
    }
    return std::lexicographical_compare(eb.rbegin(), eb.rend(), ea.rbegin(), ea.rend());
}

} // namespace semiform
