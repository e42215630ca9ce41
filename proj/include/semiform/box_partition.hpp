#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <semiform/monomial.hpp>

namespace semiform
{

// A partition lambda_1 >= ... >= lambda_k >= 0 fitting in a k x n box. Always
// stores exactly k parts (zero-padded).
class BoxPartition
{
public:
    // Throws std::invalid_argument naming the offending part index (0-based)
    // when parts are too many, too large, or not weakly decreasing.
    BoxPartition(std::vector<unsigned> parts, unsigned box_k, unsigned box_n);

    // Comma-separated weakly decreasing parts, e.g. "4,2,1,0".
    static BoxPartition parse(std::string_view csv, unsigned box_k, unsigned box_n);

    const std::vector<unsigned> &parts() const
    {
        return m_parts;
    }
    unsigned box_k() const
    {
        return m_k;
    }
    unsigned box_n() const
    {
        return m_n;
    }
    // |lambda|, the weight m of a_lambda.
    unsigned size() const;

    // "(4,2,1,0)".
    std::string to_string() const;

    friend bool operator==(const BoxPartition &, const BoxPartition &) = default;

private:
    std::vector<unsigned> m_parts;
    unsigned m_k;
    unsigned m_n;
};

// a_lambda = a_{lambda_1} ... a_{lambda_k}; exponent j counts parts equal to j.
Monomial partition_monomial(const BoxPartition &lambda);

// Inverse of partition_monomial; the box is k x n with n the monomial context.
// Throws std::invalid_argument if the monomial degree is not k.
BoxPartition monomial_partition(const Monomial &mono, unsigned k);

} // namespace semiform
