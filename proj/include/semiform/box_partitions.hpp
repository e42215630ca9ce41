#pragma once

#include <vector>

#include <semiform/box_partition.hpp>
#include <semiform/rational.hpp>

namespace semiform
{

// All partitions of m with at most k parts, each at most n, in descending
// lexicographic order (the canonical monomial order). Empty when m > nk.
std::vector<BoxPartition> enumerate_box_partitions(unsigned k, unsigned n, unsigned m);

// p(k, n, m): number of partitions of m inside a k x n box. Zero for m < 0 or
// m > nk. Computed by the q-Pascal recurrence p(k,n,m) = p(k-1,n,m) + p(k,n-1,m-k),
// never by enumeration.
Integer count_p(unsigned k, unsigned n, long m);

// Coefficients of the Gaussian polynomial [n+k choose k]_q; coeffs[m] = p(k,n,m).
struct GaussianCoefficient {
    unsigned n;
    unsigned k;
    std::vector<Integer> coeffs;
};

// Built by the q-Pascal recurrence and checked against the q-factorial product
// before returning; a mismatch throws TheoremViolation.
GaussianCoefficient gaussian_coefficient(unsigned n, unsigned k);

// The same polynomial from prod_{i=1..k} (1 - q^{n+i}) / (1 - q^i), using exact
// series division at each step.
std::vector<Integer> gaussian_by_product(unsigned n, unsigned k);

// delta(k,n,m) = p(k,n,m) - p(k,n,m-1) for 0 <= m <= floor(nk/2); throws
// std::out_of_range otherwise.
Integer delta(unsigned k, unsigned n, unsigned m);

struct DeltaTable {
    unsigned n;
    unsigned k;
    std::vector<Integer> values; // values[m] for 0 <= m <= floor(nk/2)
};

DeltaTable delta_table(unsigned n, unsigned k);

struct UnimodalityReport {
    unsigned n;
    unsigned k;
    // Every m in [2, floor(nk/2)] with p(k,n,m) <= p(k,n,m-1).
    std::vector<unsigned> violations;
    bool strictly_unimodal;
    // Weakly increasing then weakly decreasing over 0..nk.
    bool unimodal;
};

// Requires n, k >= 1 (std::invalid_argument otherwise).
UnimodalityReport strict_unimodality_report(unsigned n, unsigned k);

} // namespace semiform
