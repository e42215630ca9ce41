#include <semiform/invariant_space.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <semiform/box_partitions.hpp>
#include <semiform/errors.hpp>

namespace semiform
{

namespace
{

bool in_sylvester_range(const SpaceSignature &sig)
{
    return 2 * static_cast<unsigned long>(sig.m) <= static_cast<unsigned long>(sig.n) * sig.k;
}

MonomialBasis empty_basis(const SpaceSignature &sig)
{
    return {sig, {}};
}

// Rank of the image of D or Delta restricted to Q_n(k, m), without forming
// the chain.
std::size_t map_rank(Op op, const SpaceSignature &sig)
{
    return rank(matrix_of(op, sig).matrix);
}

} // namespace

std::optional<std::size_t> MonomialBasis::index_of(const Monomial &mono) const
{
    const auto it = std::lower_bound(monomials.begin(), monomials.end(), mono, CanonicalOrder{});
    if (it != monomials.end() && *it == mono) {
        return static_cast<std::size_t>(it - monomials.begin());
    }
    return std::nullopt;
}

RationalColumn MonomialBasis::coordinates(const Polynomial &p) const
{
    if (p.context_n() != sig.n) {
        throw ContextMismatch("polynomial context n=" + std::to_string(p.context_n()) + " vs basis n="
                              + std::to_string(sig.n));
    }
    RationalColumn out;
    for (const auto &[mono, c] : p.terms()) {
        const auto idx = index_of(mono);
        if (!idx) {
            throw std::invalid_argument("term " + mono.to_string() + " is outside Q_" + std::to_string(sig.n) + "("
                                        + std::to_string(sig.k) + "," + std::to_string(sig.m) + ")");
        }
        out.emplace_back(*idx, c);
    }
    // Canonical map order matches basis order, so indices are already ascending.
    return out;
}

Polynomial MonomialBasis::polynomial(const IntegerRow &coords) const
{
    Polynomial::TermMap terms;
    for (const auto &[idx, v] : coords) {
        terms.emplace(monomials.at(idx), Rational(v));
    }
    return Polynomial(sig.n, std::move(terms));
}

MonomialBasis basis_Q(const SpaceSignature &sig)
{
    const Integer dim = count_p(sig.k, sig.n, sig.m);
    if (dim > max_dimension()) {
        throw CapacityError("dim Q_" + std::to_string(sig.n) + "(" + std::to_string(sig.k) + ","
                            + std::to_string(sig.m) + ") = " + dim.get_str() + " exceeds the limit "
                            + std::to_string(max_dimension()) + " (set SEMIFORM_MAX_DIM to raise it)");
    }
    MonomialBasis basis{sig, {}};
    for (const auto &lambda : enumerate_box_partitions(sig.k, sig.n, sig.m)) {
        basis.monomials.push_back(partition_monomial(lambda));
    }
    return basis;
}

LinearMapMatrix matrix_of(Op op, const SpaceSignature &sig)
{
    auto domain = basis_Q(sig);
    // D on weight 0 lands in the zero space; its (empty) basis keeps the domain signature.
    auto codomain = op == Op::D ? (sig.m == 0 ? empty_basis(sig) : basis_Q({sig.n, sig.k, sig.m - 1}))
                                : basis_Q({sig.n, sig.k, sig.m + 1});
    SparseMatrix matrix{codomain.size(), domain.size(), {}};
    matrix.columns.reserve(domain.size());
    for (const auto &mono : domain.monomials) {
        const auto image = apply(op, Polynomial::from_monomial(mono));
        matrix.columns.push_back(codomain.coordinates(image));
    }
    return {op, std::move(domain), std::move(codomain), std::move(matrix)};
}

SemiInvariantBasis semi_invariant_basis(const SpaceSignature &sig)
{
    const auto d = matrix_of(Op::D, sig);
    SemiInvariantBasis out{sig, {}, in_sylvester_range(sig)};
    for (const auto &row : kernel_basis(d.matrix)) {
        out.polynomials.push_back(d.domain.polynomial(row));
    }
    if (out.in_sylvester_range) {
        const Integer expected = delta(sig.k, sig.n, sig.m);
        if (expected != out.polynomials.size()) {
            throw TheoremViolation("dim S_" + std::to_string(sig.n) + "(" + std::to_string(sig.k) + ","
                                   + std::to_string(sig.m) + ") = " + std::to_string(out.polynomials.size())
                                   + " but delta = " + expected.get_str());
        }
    }
    return out;
}

Polynomial reduce_against(const SemiInvariantBasis &basis, const Polynomial &p)
{
    if (p.context_n() != basis.sig.n) {
        throw ContextMismatch("polynomial context n=" + std::to_string(p.context_n()) + " vs basis n="
                              + std::to_string(basis.sig.n));
    }
    Polynomial rest = p;
    for (const auto &b : basis.polynomials) {
        const auto &[lead, lead_coeff] = *b.terms().begin();
        const Rational c = rest.coefficient(lead);
        if (c != 0) {
            rest = rest - Rational(c / lead_coeff) * b;
        }
    }
    return rest;
}

bool span_contains(const SemiInvariantBasis &basis, const Polynomial &p)
{
    return reduce_against(basis, p).is_zero();
}

bool is_semi_invariant(const Polynomial &p, SemiInvariantTest test)
{
    if (test == SemiInvariantTest::by_operator) {
        return apply_D(p).is_zero();
    }
    return shear_expand(p, ShearDirection::horizontal).coefficients.size() <= 1;
}

bool SylvesterReport::ok() const
{
    if (delta != nullity_D || !surjective || !injective || !telescopes) {
        return false;
    }
    if (kernel_dims.size() != kernel_expected.size()) {
        return false;
    }
    for (std::size_t i = 0; i < kernel_dims.size(); ++i) {
        if (kernel_expected[i] != kernel_dims[i]) {
            return false;
        }
    }
    return true;
}

SylvesterReport analyze_signature(const SpaceSignature &sig)
{
    if (!in_sylvester_range(sig)) {
        throw std::out_of_range("signature analysis needs 0 <= m <= nk/2");
    }
    SylvesterReport r{sig, count_p(sig.k, sig.n, sig.m), count_p(sig.k, sig.n, static_cast<long>(sig.m) - 1),
                      0, 0, 0, false, 0, false, {}, {}, {}, false};
    r.delta = r.p_m - r.p_prev;

    const auto d = matrix_of(Op::D, sig);
    r.rank_D = rank(d.matrix);
    r.nullity_D = d.domain.size() - r.rank_D;
    r.surjective = r.p_prev == r.rank_D;
    r.rank_Delta = sig.m == 0 ? 0 : map_rank(Op::Delta, {sig.n, sig.k, sig.m - 1});
    r.injective = r.p_prev == r.rank_Delta;

    // V_0 = Q_n(k, m); V_i = D(V_{i-1}), each kept as an echelon basis.
    std::vector<Polynomial> current;
    for (const auto &mono : d.domain.monomials) {
        current.push_back(Polynomial::from_monomial(mono));
    }
    r.chain_dims.push_back(current.size());
    for (unsigned i = 1; i <= sig.m + 1; ++i) {
        std::vector<Polynomial> next;
        if (i <= sig.m) {
            const auto target = basis_Q({sig.n, sig.k, sig.m - i});
            std::vector<IntegerRow> rows;
            for (const auto &v : current) {
                rows.push_back(clear_denominators(target.coordinates(apply_D(v))));
            }
            for (const auto &row : echelon(std::move(rows), false).rows) {
                next.push_back(target.polynomial(row));
            }
        } else {
            // D annihilates weight 0.
            for (const auto &v : current) {
                if (!apply_D(v).is_zero()) {
                    throw TheoremViolation("D does not annihilate Q_n(k,0)");
                }
            }
        }
        r.chain_dims.push_back(next.size());
        r.kernel_dims.push_back(current.size() - next.size());
        r.kernel_expected.push_back(delta(sig.k, sig.n, sig.m - i + 1));
        current = std::move(next);
    }
    std::size_t total = 0;
    for (auto k : r.kernel_dims) {
        total += k;
    }
    r.telescopes = r.chain_dims.back() == 0 && r.chain_dims.front() == total;
    return r;
}

SylvesterReport sylvester_report(unsigned n, unsigned k, unsigned m)
{
    const unsigned long half = static_cast<unsigned long>(n) * k / 2;
    if (m < 1 || m > half) {
        throw std::out_of_range("sylvester_report needs 1 <= m <= floor(nk/2) = " + std::to_string(half) + ", got m="
                                + std::to_string(m));
    }
    return analyze_signature({n, k, m});
}

std::vector<DimensionRow> dimension_table(unsigned n, unsigned k)
{
    std::vector<DimensionRow> rows;
    const unsigned half = n * k / 2;
    for (unsigned m = 0; m <= half; ++m) {
        const SpaceSignature sig{n, k, m};
        const Integer p = count_p(k, n, m);
        const Integer p_prev = count_p(k, n, static_cast<long>(m) - 1);
        const std::size_t rank_d = map_rank(Op::D, sig);
        const std::size_t rank_delta = m == 0 ? 0 : map_rank(Op::Delta, {n, k, m - 1});
        rows.push_back({n, k, m, p, p - p_prev, rank_d, static_cast<std::size_t>(p.get_ui()) - rank_d,
                        p_prev == rank_d, p_prev == rank_delta});
    }
    return rows;
}

std::string dimension_table_tsv(const std::vector<DimensionRow> &rows)
{
    std::ostringstream out;
    out << "n\tk\tm\tp\tdelta\trank\tnullity\tsurjective\tinjective\n";
    for (const auto &r : rows) {
        out << r.n << '\t' << r.k << '\t' << r.m << '\t' << r.p.get_str() << '\t' << r.delta.get_str() << '\t' << r.rank
            << '\t' << r.nullity << '\t' << (r.surjective ? "true" : "false") << '\t'
            << (r.injective ? "true" : "false") << '\n';
    }
    return out.str();
}

namespace
{

// First element of the canonical basis of S_n(k, m); the construction only
// asks for weights where delta(k, n, m) > 0 has been checked.
Polynomial semi_invariant_of(unsigned n, unsigned k, unsigned m)
{
    if (m == 0) {
        return Polynomial::from_monomial(Monomial::variable(n, 0, k));
    }
    const auto basis = semi_invariant_basis({n, k, m});
    if (basis.polynomials.empty()) {
        throw TheoremViolation("no semi-invariant of degree " + std::to_string(k) + " and weight "
                               + std::to_string(m) + " although delta > 0");
    }
    return basis.polynomials.front();
}

void require_factor(unsigned n, unsigned k, unsigned m)
{
    const unsigned half = n * k / 2;
    if (m > half || delta(k, n, m) <= 0) {
        throw std::invalid_argument("additivity hypothesis fails: no semi-invariant of degree " + std::to_string(k)
                                    + " and weight " + std::to_string(m) + " for n=" + std::to_string(n)
                                    + " (strict unimodality of [" + std::to_string(n + k) + " choose "
                                    + std::to_string(n) + "] does not cover it)");
    }
}

} // namespace

AdditivityWitness additivity_witness(unsigned n, unsigned k1, unsigned k2, unsigned m)
{
    if (n < 2 || k1 < 2 || k2 < 2) {
        throw std::invalid_argument("additivity needs n, k1, k2 >= 2");
    }
    if (n % 2 != 0 && k1 % 2 != 0 && k2 % 2 != 0) {
        throw std::invalid_argument("additivity needs at least one of n, k1, k2 even");
    }
    const unsigned f1 = n * k1 / 2;
    const unsigned f2 = n * k2 / 2;
    const unsigned top = n * (k1 + k2) / 2;
    if (m < 2 || m > top) {
        throw std::invalid_argument("additivity needs 2 <= m <= floor(n(k1+k2)/2) = " + std::to_string(top));
    }

    unsigned m1 = 0;
    unsigned m2 = 0;
    std::string branch;
    if (m <= 3) {
        // a0^{k_other} times a weight-m semi-invariant of the factor with nk/2 >= 3.
        branch = "a0-power";
        const bool use_first = f1 >= 3 || (f2 < 3 && m <= f1);
        (use_first ? m1 : m2) = m;
    } else {
        branch = "product";
        if (m == top) {
            m1 = f1;
            m2 = f2;
        } else if (m >= f1 + 2) {
            m1 = f1;
            m2 = m - f1;
        } else {
            m2 = 2;
            m1 = m - 2;
        }
    }
    if (m1 > 0) {
        require_factor(n, k1, m1);
    }
    if (m2 > 0) {
        require_factor(n, k2, m2);
    }

    auto first = semi_invariant_of(n, k1, m1);
    auto second = semi_invariant_of(n, k2, m2);
    auto result = first * second;
    const auto h = homogeneity(result);
    if (result.is_zero() || !h || h->degree != k1 + k2 || h->weight != m
        || !is_semi_invariant(result, SemiInvariantTest::by_operator)
        || !is_semi_invariant(result, SemiInvariantTest::by_shear)) {
        throw TheoremViolation("additivity product is not a semi-invariant of degree " + std::to_string(k1 + k2)
                               + " and weight " + std::to_string(m));
    }
    return {n, k1, k2, m, m1, m2, branch, std::move(first), std::move(second), std::move(result)};
}

} // namespace semiform
