#include <semiform/poly_json.hpp>

#include <stdexcept>

namespace semiform
{

nlohmann::json to_json(const Polynomial &p)
{
    auto terms = nlohmann::json::array();
    for (const auto &[mono, c] : p.terms()) {
        auto exps = nlohmann::json::array();
        for (auto e : mono.exponents()) {
            exps.push_back(e);
        }
        terms.push_back({{"exponents", std::move(exps)}, {"coeff", to_string(c)}});
    }
    return {{"n", p.context_n()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
        throw std::invalid_argument("polynomial JSON needs \"n\" and \"terms\"");
    }
    if (!j.at("n").is_number_unsigned()) {
        throw std::invalid_argument("polynomial JSON: \"n\" must be a non-negative integer");
    }
    const auto n = j.at("n").get<unsigned>();
    const auto &terms = j.at("terms");
    if (!terms.is_array()) {
        throw std::invalid_argument("polynomial JSON: \"terms\" must be an array");
    }
    Polynomial out(n);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto &term = terms[t];
        const std::string where = "polynomial JSON term " + std::to_string(t) + ": ";
        if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff")) {
            throw std::invalid_argument(where + "needs \"exponents\" and \"coeff\"");
        }
        const auto &exps = term.at("exponents");
        if (!exps.is_array() || exps.size() != n + 1) {
            throw std::invalid_argument(where + "expected " + std::to_string(n + 1) + " exponents");
        }
        std::vector<unsigned> e;
        for (const auto &x : exps) {
            if (!x.is_number_unsigned()) {
                throw std::invalid_argument(where + "exponents must be non-negative integers");
            }
            e.push_back(x.get<unsigned>());
        }
        const auto &coeff = term.at("coeff");
        Rational c;
        if (coeff.is_string()) {
            c = parse_rational(coeff.get<std::string>());
        } else if (coeff.is_number_integer()) {
            c = parse_rational(coeff.dump());
        } else {
            throw std::invalid_argument(where + "\"coeff\" must be a \"num/den\" string");
        }
        out = out + Polynomial::from_monomial(Monomial(std::move(e)), c);
    }
    return out;
}

std::string dump_polynomial(const Polynomial &p)
{
    return to_json(p).dump();
}

Polynomial load_polynomial(std::string_view text)
{
    return polynomial_from_json(nlohmann::json::parse(text));
}

} // namespace semiform
