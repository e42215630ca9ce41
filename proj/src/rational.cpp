#include <semiform/rational.hpp>

#include <stdexcept>

namespace semiform
{

std::string to_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer &z)
{
    return z.get_str();
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Integer parse_integer(std::string_view text)
{
    if (!is_integer_literal(text)) {
        throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned i)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), i);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace semiform
