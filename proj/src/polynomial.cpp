#include <semiform/polynomial.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

#include <semiform/errors.hpp>

namespace semiform
{

namespace
{

void check_context(const Polynomial &p, const Polynomial &q)
{
    if (p.context_n() != q.context_n()) {
        throw ContextMismatch("polynomial contexts differ: n=" + std::to_string(p.context_n())
                              + " vs n=" + std::to_string(q.context_n()));
    }
}

} // namespace

void accumulate_term(Polynomial::TermMap &terms, const Monomial &mono, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

Polynomial::Polynomial(unsigned n) : m_n(n) {}

Polynomial::Polynomial(unsigned n, TermMap terms) : m_n(n), m_terms(std::move(terms))
{
    for (auto it = m_terms.begin(); it != m_terms.end();) {
        if (it->first.context_n() != m_n) {
            throw ContextMismatch("monomial " + it->first.to_string() + " has " + std::to_string(it->first.context_n() + 1)
                                  + " exponents, expected " + std::to_string(m_n + 1));
        }
        it = it->second == 0 ? m_terms.erase(it) : std::next(it);
    }
}

Polynomial Polynomial::constant(unsigned n, const Rational &c)
{
    TermMap t;
    t.emplace(Monomial::one(n), c);
    return Polynomial(n, std::move(t));
}

Polynomial Polynomial::variable(unsigned n, unsigned j)
{
    return from_monomial(Monomial::variable(n, j));
}

Polynomial Polynomial::from_monomial(const Monomial &mono, const Rational &c)
{
    TermMap t;
    t.emplace(mono, c);
    return Polynomial(mono.context_n(), std::move(t));
}

Rational Polynomial::coefficient(const Monomial &mono) const
{
    const auto it = m_terms.find(mono);
    return it == m_terms.end() ? Rational(0) : it->second;
}

std::string Polynomial::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[mono, c] : m_terms) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool unit = mono.degree() == 0;
        if (unit) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono.to_string();
        } else {
            out += mag.get_str() + "*" + mono.to_string();
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const
{
    TermMap t(m_terms);
    for (auto &[mono, c] : t) {
        c = -c;
    }
    return Polynomial(m_n, std::move(t));
}

Polynomial operator+(const Polynomial &p, const Polynomial &q)
{
    check_context(p, q);
    Polynomial::TermMap t(p.m_terms);
    for (const auto &[mono, c] : q.m_terms) {
        accumulate_term(t, mono, c);
    }
    return Polynomial(p.m_n, std::move(t));
}

Polynomial operator-(const Polynomial &p, const Polynomial &q)
{
    check_context(p, q);
    Polynomial::TermMap t(p.m_terms);
    for (const auto &[mono, c] : q.m_terms) {
        accumulate_term(t, mono, -c);
    }
    return Polynomial(p.m_n, std::move(t));
}

Polynomial operator*(const Polynomial &p, const Polynomial &q)
{
    check_context(p, q);
    Polynomial::TermMap t;
    for (const auto &[mp, cp] : p.m_terms) {
        for (const auto &[mq, cq] : q.m_terms) {
            accumulate_term(t, mp * mq, cp * cq);
        }
    }
    return Polynomial(p.m_n, std::move(t));
}

Polynomial operator*(const Rational &c, const Polynomial &p)
{
    if (c == 0) {
        return Polynomial(p.m_n);
    }
    Polynomial::TermMap t(p.m_terms);
    for (auto &[mono, coeff] : t) {
        coeff *= c;
    }
    return Polynomial(p.m_n, std::move(t));
}

Polynomial operator/(const Polynomial &p, const Rational &c)
{
    if (c == 0) {
        throw std::domain_error("polynomial division by zero");
    }
    return Rational(1 / c) * p;
}

Polynomial add(const Polynomial &p, const Polynomial &q)
{
    return p + q;
}

Polynomial mul(const Polynomial &p, const Polynomial &q)
{
    return p * q;
}

std::optional<Homogeneity> homogeneity(const Polynomial &p)
{
    std::optional<Homogeneity> h;
    for (const auto &[mono, c] : p.terms()) {
        const Homogeneity here{mono.degree(), mono.weight()};
        if (!h) {
            h = here;
        } else if (!(*h == here)) {
            return std::nullopt;
        }
    }
    return h;
}

// Grammar: poly := ['-'|'+'] term (('+'|'-') term)*
//          term := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//          factor := 'a' digits ['^' digits]
namespace
{

class PolyParser
{
public:
    PolyParser(unsigned n, std::string_view text) : m_n(n), m_text(text) {}

    Polynomial run()
    {
        Polynomial::TermMap terms;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [mono, c] = term();
            accumulate_term(terms, mono, sign * c);
            skip_ws();
        }
        return Polynomial(m_n, std::move(terms));
    }

private:
    std::pair<Monomial, Rational> term()
    {
        Rational c = 1;
        Monomial mono = Monomial::one(m_n);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            skip_ws();
            if (peek() != '*' && peek() != 'a') {
                return {mono, c};
            }
            if (peek() == '*') {
                take();
                skip_ws();
            }
        }
        mono = mono * factor();
        skip_ws();
        while (peek() == '*') {
            take();
            skip_ws();
            mono = mono * factor();
            skip_ws();
        }
        return {mono, c};
    }

    Monomial factor()
    {
        if (peek() != 'a') {
            fail("expected variable a<j>");
        }
        take();
        const unsigned j = digits();
        if (j > m_n) {
            fail("variable a" + std::to_string(j) + " outside a0..a" + std::to_string(m_n));
        }
        unsigned power = 1;
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            power = digits();
        }
        return Monomial::variable(m_n, j, power);
    }

    Rational number()
    {
        const auto start = m_pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            take();
        }
        if (peek() == '/') {
            take();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                take();
            }
        }
        return parse_rational(m_text.substr(start, m_pos - start));
    }

    unsigned digits()
    {
        const auto start = m_pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            take();
        }
        if (start == m_pos) {
            fail("expected digits");
        }
        return static_cast<unsigned>(std::stoul(std::string(m_text.substr(start, m_pos - start))));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : m_text[m_pos];
    }
    char take()
    {
        return m_text[m_pos++];
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(m_pos) + ": " + what);
    }

    unsigned m_n;
    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

Polynomial Polynomial::parse(unsigned n, std::string_view text)
{
    return PolyParser(n, text).run();
}

} // namespace semiform
