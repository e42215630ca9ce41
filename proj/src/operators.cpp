#include <semiform/operators.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace semiform
{

namespace
{

using Series = std::vector<Polynomial>;

Series series_mul(const Series &a, const Series &b, unsigned n)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Series out(a.size() + b.size() - 1, Polynomial(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) {
                out[i + j] = out[i + j] + a[i] * b[j];
            }
        }
    }
    return out;
}

// Image of a_j under the shear, indexed by z-power.
Series shear_image(unsigned n, unsigned j, ShearDirection dir)
{
    Series s;
    if (dir == ShearDirection::horizontal) {
        for (unsigned t = 0; t <= j; ++t) {
            s.push_back(Polynomial::from_monomial(Monomial::variable(n, j - t), Rational(binomial(j, t))));
        }
    } else {
        for (unsigned t = 0; t <= n - j; ++t) {
            s.push_back(Polynomial::from_monomial(Monomial::variable(n, j + t), Rational(binomial(n - j, t))));
        }
    }
    return s;
}

} // namespace

std::string to_string(Op op)
{
    return op == Op::D ? "D" : "Delta";
}

std::string to_string(ShearDirection dir)
{
    return dir == ShearDirection::horizontal ? "horizontal" : "vertical";
}

Polynomial apply_D(const Polynomial &p)
{
    const unsigned n = p.context_n();
    Polynomial::TermMap out;
    for (const auto &[mono, c] : p.terms()) {
        for (unsigned j = 1; j <= n; ++j) {
            if (mono[j] == 0) {
                continue;
            }
            accumulate_term(out, mono.shifted(j, -1).shifted(j - 1, 1), c * (j * mono[j]));
        }
    }
    return Polynomial(n, std::move(out));
}

Polynomial apply_Delta(const Polynomial &p)
{
    const unsigned n = p.context_n();
    Polynomial::TermMap out;
    for (const auto &[mono, c] : p.terms()) {
        for (unsigned j = 0; j < n; ++j) {
            if (mono[j] == 0) {
                continue;
            }
            accumulate_term(out, mono.shifted(j, -1).shifted(j + 1, 1), c * ((n - j) * mono[j]));
        }
    }
    return Polynomial(n, std::move(out));
}

Polynomial apply(Op op, const Polynomial &p)
{
    return op == Op::D ? apply_D(p) : apply_Delta(p);
}

Polynomial operator_power(Op op, unsigned i, const Polynomial &p)
{
    Polynomial out = p;
    for (unsigned step = 0; step < i && !out.is_zero(); ++step) {
        out = apply(op, out);
    }
    return out;
}

ShearExpansion shear_expand(const Polynomial &p, ShearDirection dir)
{
    const unsigned n = p.context_n();
    std::vector<Series> images;
    for (unsigned j = 0; j <= n; ++j) {
        images.push_back(shear_image(n, j, dir));
    }
    // powers[j][e] = images[j]^e, grown on demand.
    std::vector<std::vector<Series>> powers(n + 1, std::vector<Series>{Series{Polynomial::constant(n, 1)}});
    auto power_of = [&](unsigned j, unsigned e) -> const Series & {
        auto &cache = powers[j];
        while (cache.size() <= e) {
            cache.push_back(series_mul(cache.back(), images[j], n));
        }
        return cache[e];
    };

    Series total;
    for (const auto &[mono, c] : p.terms()) {
        Series term{Polynomial::constant(n, c)};
        for (unsigned j = 0; j <= n; ++j) {
            if (mono[j] > 0) {
                term = series_mul(term, power_of(j, mono[j]), n);
            }
        }
        if (total.size() < term.size()) {
            total.resize(term.size(), Polynomial(n));
        }
        for (std::size_t t = 0; t < term.size(); ++t) {
            total[t] = total[t] + term[t];
        }
    }
    while (!total.empty() && total.back().is_zero()) {
        total.pop_back();
    }
    return {n, dir, std::move(total)};
}

TaylorReport taylor_check(const Polynomial &p, ShearDirection dir)
{
    const Op op = dir == ShearDirection::horizontal ? Op::D : Op::Delta;
    const auto expansion = shear_expand(p, dir);
    const auto &coeffs = expansion.coefficients;
    Polynomial power = p;
    unsigned i = 0;
    for (; i < coeffs.size() || !power.is_zero(); ++i) {
        const Polynomial expected = power / Rational(factorial(i));
        const Polynomial actual = i < coeffs.size() ? coeffs[i] : Polynomial(p.context_n());
        if (!(actual == expected)) {
            return {false, i, actual - expected, i + 1};
        }
        power = apply(op, power);
    }
    return {true, std::nullopt, Polynomial(p.context_n()), i};
}

Polynomial hilbert_commutator_residual(const BoxPartition &lambda, unsigned i)
{
    if (i < 1) {
        throw std::invalid_argument("Hilbert identity needs i >= 1");
    }
    const auto a = Polynomial::from_monomial(partition_monomial(lambda));
    const SpaceSignature sig{lambda.box_n(), lambda.box_k(), lambda.size()};
    const long c = sig.c();
    const long li = i;
    const Polynomial delta_prev = operator_power(Op::Delta, i - 1, a);
    const Polynomial lhs = apply_D(apply_Delta(delta_prev)) - operator_power(Op::Delta, i, apply_D(a));
    return lhs - Rational(li * (c - li + 1)) * delta_prev;
}

Polynomial second_hilbert_residual(const BoxPartition &lambda, unsigned i)
{
    if (i < 1) {
        throw std::invalid_argument("Hilbert identity needs i >= 1");
    }
    const auto a = Polynomial::from_monomial(partition_monomial(lambda));
    const SpaceSignature sig{lambda.box_n(), lambda.box_k(), lambda.size()};
    const long c = sig.c();
    const long li = i;
    const Polynomial d_prev = operator_power(Op::D, i - 1, a);
    const Polynomial lhs = operator_power(Op::D, i, apply_Delta(a)) - apply_Delta(apply_D(d_prev));
    return lhs - Rational(li * (c + li - 1)) * d_prev;
}

bool cayley_check(const Polynomial &I, const SpaceSignature &sig, unsigned i)
{
    if (i < 1) {
        throw std::invalid_argument("Cayley relation needs i >= 1");
    }
    if (I.context_n() != sig.n) {
        throw std::invalid_argument("polynomial context n=" + std::to_string(I.context_n())
                                    + " does not match signature n=" + std::to_string(sig.n));
    }
    if (2 * static_cast<unsigned long>(sig.m) > static_cast<unsigned long>(sig.n) * sig.k) {
        throw std::invalid_argument("Cayley relation needs m <= nk/2");
    }
    if (!I.is_zero()) {
        const auto h = homogeneity(I);
        if (!h || h->degree != sig.k || h->weight != sig.m) {
            throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(sig.k)
                                        + " and weight " + std::to_string(sig.m));
        }
    }
    if (!apply_D(I).is_zero()) {
        throw std::invalid_argument("polynomial is not a semi-invariant: D(I) != 0");
    }
    const long c = sig.c();
    const long li = i;
    const Polynomial delta_prev = operator_power(Op::Delta, i - 1, I);
    return apply_D(apply_Delta(delta_prev)) == Rational(li * (c - li + 1)) * delta_prev;
}

} // namespace semiform
