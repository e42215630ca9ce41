#pragma once

#include <optional>
#include <string>
#include <vector>

#include <semiform/box_partition.hpp>
#include <semiform/polynomial.hpp>

namespace semiform
{

enum class Op { D, Delta };
enum class ShearDirection { horizontal, vertical };

std::string to_string(Op op);
std::string to_string(ShearDirection dir);

// Grading coordinates of Q_n(k, m) together with the balance c = nk - 2m.
struct SpaceSignature {
    unsigned n;
    unsigned k;
    unsigned m;

    long c() const
    {
        return static_cast<long>(n) * k - 2 * static_cast<long>(m);
    }
    friend bool operator==(const SpaceSignature &, const SpaceSignature &) = default;
};

// D = sum_{j=1..n} j a_{j-1} d/da_j. Preserves degree, lowers weight by one.
Polynomial apply_D(const Polynomial &p);
// Delta = sum_{j=0..n-1} (n-j) a_{j+1} d/da_j. Preserves degree, raises weight by one.
Polynomial apply_Delta(const Polynomial &p);

Polynomial apply(Op op, const Polynomial &p);
// i-fold composition; i = 0 is the identity.
Polynomial operator_power(Op op, unsigned i, const Polynomial &p);

// Coefficients of z^0, z^1, ... after substituting the shear images
//   horizontal: a'_j  = sum_t C(j, t)   a_{j-t} z^t
//   vertical:   a''_j = sum_t C(n-j, t) a_{j+t} z^t
// Trailing zero coefficients are trimmed; entry 0 is the input itself (and the
// sequence is empty only for the zero polynomial).
struct ShearExpansion {
    unsigned context_n;
    ShearDirection direction;
    std::vector<Polynomial> coefficients;
};

ShearExpansion shear_expand(const Polynomial &p, ShearDirection dir);

struct TaylorReport {
    bool ok;
    // Lowest z-power where the shear coefficient differs from op^i(p)/i!.
    std::optional<unsigned> first_mismatch;
    // shear coefficient minus op^i(p)/i! at first_mismatch (zero when ok).
    Polynomial residual;
    // Number of z-powers compared.
    unsigned powers_checked;
};

// Compares shear_expand(p, dir) with sum_i op^i(p) z^i / i!, op = D for the
// horizontal shear and Delta for the vertical one.
TaylorReport taylor_check(const Polynomial &p, ShearDirection dir);

// D Delta^i(a_lambda) - Delta^i D(a_lambda) - i(c-i+1) Delta^{i-1}(a_lambda),
// c = nk - 2|lambda| from the partition's box. Requires i >= 1.
Polynomial hilbert_commutator_residual(const BoxPartition &lambda, unsigned i);

// D^i Delta(a_lambda) - Delta D^i(a_lambda) - i(c+i-1) D^{i-1}(a_lambda).
// Requires i >= 1.
Polynomial second_hilbert_residual(const BoxPartition &lambda, unsigned i);

// Checks D Delta^i(I) == i(c-i+1) Delta^{i-1}(I) for a semi-invariant I of
// signature sig. Throws std::invalid_argument unless D(I) = 0, I is
// homogeneous of degree k and weight m in context n, m <= nk/2 and i >= 1.
// The zero polynomial is accepted for any signature.
bool cayley_check(const Polynomial &I, const SpaceSignature &sig, unsigned i);

} // namespace semiform
