#pragma once

#include <optional>
#include <string>
#include <vector>

#include <semiform/linalg.hpp>
#include <semiform/operators.hpp>
#include <semiform/polynomial.hpp>

namespace semiform
{

// Monomial basis of Q_n(k, m): degree k, weight m, canonical order.
struct MonomialBasis {
    SpaceSignature sig;
    std::vector<Monomial> monomials;

    std::size_t size() const
    {
        return monomials.size();
    }
    std::optional<std::size_t> index_of(const Monomial &mono) const;
    // Coordinates of a polynomial of Q_n(k, m); throws std::invalid_argument
    // on a term outside the basis.
    RationalColumn coordinates(const Polynomial &p) const;
    Polynomial polynomial(const IntegerRow &coords) const;
};

// Throws CapacityError when p(k, n, m) exceeds max_dimension().
MonomialBasis basis_Q(const SpaceSignature &sig);

// Matrix of D : Q_n(k, m) -> Q_n(k, m-1) or Delta : Q_n(k, m) -> Q_n(k, m+1).
// Column j is the image of the j-th domain monomial.
struct LinearMapMatrix {
    Op op;
    MonomialBasis domain;
    MonomialBasis codomain;
    SparseMatrix matrix;
};

LinearMapMatrix matrix_of(Op op, const SpaceSignature &sig);

// Basis of S_n(k, m) = ker D in Q_n(k, m) in reduced echelon normal form over
// the canonical monomial order: primitive integer coefficients, positive
// leading coefficient. Inside 0 <= m <= nk/2 the size is checked against
// delta(k, n, m) (TheoremViolation on mismatch).
struct SemiInvariantBasis {
    SpaceSignature sig;
    std::vector<Polynomial> polynomials;
    bool in_sylvester_range;
};

SemiInvariantBasis semi_invariant_basis(const SpaceSignature &sig);

// Remainder of p after reduction by the echelon basis; zero iff p lies in the
// span. p must have the basis context.
Polynomial reduce_against(const SemiInvariantBasis &basis, const Polynomial &p);
bool span_contains(const SemiInvariantBasis &basis, const Polynomial &p);

enum class SemiInvariantTest {
    by_operator, // D(p) == 0
    by_shear,    // the horizontal shear expansion has only its z^0 term
};

bool is_semi_invariant(const Polynomial &p, SemiInvariantTest test);

struct SylvesterReport {
    SpaceSignature sig;
    Integer p_m;    // p(k, n, m)
    Integer p_prev; // p(k, n, m-1)
    Integer delta;  // p_m - p_prev
    std::size_t rank_D;
    std::size_t nullity_D;
    bool surjective;       // rank_D == p_prev
    std::size_t rank_Delta; // Delta : Q(k, m-1) -> Q(k, m)
    bool injective;        // rank_Delta == p_prev
    // dim V_i for V_i = D^i(Q_n(k, m)), i = 0..m+1.
    std::vector<std::size_t> chain_dims;
    // dim ker T_i = dim V_{i-1} - dim V_i, i = 1..m+1.
    std::vector<std::size_t> kernel_dims;
    // delta(k, n, m-i+1), i = 1..m+1: the semi-invariant dimensions each
    // kernel is expected to exhaust.
    std::vector<Integer> kernel_expected;
    bool telescopes; // V_{m+1} = 0 and dim V_0 = sum of kernel dims

    bool ok() const;
};

// Rank, nullity, injectivity and the dimension chain for Q_n(k, m). Works for
// any 0 <= m <= nk/2.
SylvesterReport analyze_signature(const SpaceSignature &sig);

// analyze_signature restricted to 1 <= m <= nk/2 (std::out_of_range otherwise).
SylvesterReport sylvester_report(unsigned n, unsigned k, unsigned m);

struct DimensionRow {
    unsigned n;
    unsigned k;
    unsigned m;
    Integer p;
    Integer delta;
    std::size_t rank;
    std::size_t nullity;
    bool surjective;
    bool injective;
};

// One row per 0 <= m <= floor(nk/2).
std::vector<DimensionRow> dimension_table(unsigned n, unsigned k);
// Header "n\tk\tm\tp\tdelta\trank\tnullity\tsurjective\tinjective", then one
// line per row; booleans print as true/false.
std::string dimension_table_tsv(const std::vector<DimensionRow> &rows);

// A nonzero semi-invariant of degree k1 + k2 and weight m built from the ring
// structure: a product I * J of semi-invariants of weights (m1, m2) for
// m >= 4, or a0^{k} times a weight-m semi-invariant for m in {2, 3}.
struct AdditivityWitness {
    unsigned n;
    unsigned k1;
    unsigned k2;
    unsigned m;
    unsigned m1; // weight of the degree-k1 factor
    unsigned m2; // weight of the degree-k2 factor
    std::string branch; // "product" or "a0-power"
    Polynomial first;   // degree k1, weight m1
    Polynomial second;  // degree k2, weight m2
    Polynomial result;  // first * second
};

// Throws std::invalid_argument unless n, k1, k2 >= 2, one of them is even,
// 2 <= m <= floor(n(k1+k2)/2), and each factor weight the construction needs
// carries a semi-invariant (delta > 0). Throws TheoremViolation if the result
// fails is_semi_invariant.
AdditivityWitness additivity_witness(unsigned n, unsigned k1, unsigned k2, unsigned m);

} // namespace semiform
