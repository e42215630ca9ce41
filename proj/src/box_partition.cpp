#include <semiform/box_partition.hpp>

#include <stdexcept>
#include <utility>

#include <semiform/rational.hpp>

namespace semiform
{

BoxPartition::BoxPartition(std::vector<unsigned> parts, unsigned box_k, unsigned box_n)
    : m_parts(std::move(parts)), m_k(box_k), m_n(box_n)
{
    if (m_parts.size() > m_k) {
        throw std::invalid_argument("partition part " + std::to_string(m_k) + ": more than " + std::to_string(m_k)
                                    + " parts for a " + std::to_string(m_k) + "x" + std::to_string(m_n) + " box");
    }
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
        if (m_parts[i] > m_n) {
            throw std::invalid_argument("partition part " + std::to_string(i) + ": value "
                                        + std::to_string(m_parts[i]) + " exceeds box width "
                                        + std::to_string(m_n));
        }
        if (i > 0 && m_parts[i] > m_parts[i - 1]) {
            throw std::invalid_argument("partition part " + std::to_string(i) + ": value "
                                        + std::to_string(m_parts[i]) + " breaks weakly decreasing order");
        }
    }
    m_parts.resize(m_k, 0);
}

BoxPartition BoxPartition::parse(std::string_view csv, unsigned box_k, unsigned box_n)
{
    std::vector<unsigned> parts;
    std::size_t index = 0;
    while (true) {
        const auto comma = csv.find(',');
        const auto field = csv.substr(0, comma);
        Integer v;
        try {
            v = parse_integer(field);
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("partition part " + std::to_string(index) + ": '" + std::string(field)
                                        + "' is not a non-negative integer");
        }
        if (v < 0 || !v.fits_uint_p()) {
            throw std::invalid_argument("partition part " + std::to_string(index) + ": '" + std::string(field)
                                        + "' is not a non-negative integer");
        }
        parts.push_back(static_cast<unsigned>(v.get_ui()));
        ++index;
        if (comma == std::string_view::npos) {
            break;
        }
        csv.remove_prefix(comma + 1);
    }
    return BoxPartition(std::move(parts), box_k, box_n);
}

unsigned BoxPartition::size() const
{
    unsigned m = 0;
    for (auto p : m_parts) {
        m += p;
    }
    return m;
}

std::string BoxPartition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(m_parts[i]);
    }
    return out + ")";
}

Monomial partition_monomial(const BoxPartition &lambda)
{
    std::vector<unsigned> e(lambda.box_n() + 1, 0);
    for (auto p : lambda.parts()) {
        ++e[p];
    }
    return Monomial(std::move(e));
}

BoxPartition monomial_partition(const Monomial &mono, unsigned k)
{
    if (mono.degree() != k) {
        throw std::invalid_argument("monomial " + mono.to_string() + " has degree " + std::to_string(mono.degree())
                                    + ", expected " + std::to_string(k));
    }
    std::vector<unsigned> parts;
    parts.reserve(k);
    const auto e = mono.exponents();
    for (std::size_t j = e.size(); j-- > 0;) {
        parts.insert(parts.end(), e[j], static_cast<unsigned>(j));
    }
    return BoxPartition(std::move(parts), k, mono.context_n());
}

} // namespace semiform
