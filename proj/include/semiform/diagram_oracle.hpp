#pragma once

#include <compare>
#include <string>
#include <vector>

#include <semiform/box_partition.hpp>
#include <semiform/polynomial.hpp>

namespace semiform
{

// Brute-force combinatorial model of D and Delta on Young diagrams drawn in a
// k x n box. Exponential by construction; inputs are capped at |lambda| <= 12
// and nk <= 25 (CapacityError beyond that).

enum class MarkMode {
    minus, // marks on shaded cells, each turns hollow
    plus,  // marks on hollow cells of the box, each turns shaded
};

std::string to_string(MarkMode mode);

struct Cell {
    unsigned row;
    unsigned col;

    friend auto operator<=>(const Cell &, const Cell &) = default;
};

struct SemiDiagram {
    BoxPartition shape;
    MarkMode mode;
    std::vector<Cell> marks; // row-major order

    // Row r contributes a_{lambda_r -/+ marks in row r}; an empty row gives a0.
    Monomial weight() const;
};

// Every i-subset of eligible cells (inside lambda for minus, outside it for
// plus), subsets in lexicographic order over row-major cells. Empty when i
// exceeds the number of eligible cells.
std::vector<SemiDiagram> enumerate_semi_diagrams(const BoxPartition &lambda, unsigned i, MarkMode mode);

// Sum of weights over enumerate_semi_diagrams. Equals D^i(a_lambda)/i! for
// minus marks and Delta^i(a_lambda)/i! for plus marks.
Polynomial oracle_weight_sum(const BoxPartition &lambda, unsigned i, MarkMode mode);

// Census of the marked configurations behind D Delta^i(a_lambda) and
// Delta^i D(a_lambda), with i distinguishable plus signs. A "+-" cell received
// a plus then a minus (hollow at the end); a "-+" cell received a minus then a
// plus (shaded at the end). All sums are enumerated cell by cell.
struct CommutatorCensus {
    unsigned i;
    long m;
    long nk;
    long c;
    // Closed-form multipliers of Delta^{i-1}(a_lambda).
    long pm_factor;         // i(nk - m - (i-1))
    long mp_factor;         // i m
    long difference_factor; // i(c - i + 1)

    Polynomial base;         // Delta^{i-1}(a_lambda), via the operators
    Polynomial pm_sum;       // configurations of D Delta^i with a "+-" cell
    Polynomial mp_sum;       // configurations of Delta^i D with a "-+" cell
    Polynomial signfree_lhs; // remaining configurations of D Delta^i
    Polynomial signfree_rhs; // remaining configurations of Delta^i D
    Integer pm_configurations;
    Integer mp_configurations;

    bool pm_matches;         // pm_sum == pm_factor * base
    bool mp_matches;         // mp_sum == mp_factor * base
    bool difference_matches; // pm_sum - mp_sum == difference_factor * base
    bool signfree_cancel;    // signfree_lhs == signfree_rhs
    bool operators_agree;    // the census totals reproduce D Delta^i and Delta^i D

    bool ok() const
    {
        return pm_matches && mp_matches && difference_matches && signfree_cancel && operators_agree;
    }
};

// Requires i >= 1.
CommutatorCensus commutator_census(const BoxPartition &lambda, unsigned i);

} // namespace semiform
