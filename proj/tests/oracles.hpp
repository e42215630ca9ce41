#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <semiform/box_partition.hpp>
#include <semiform/polynomial.hpp>
#include <semiform/rational.hpp>

namespace oracle
{

using semiform::Integer;
using semiform::Monomial;
using semiform::Polynomial;
using semiform::Rational;

// Odometer over [0, n]^k keeping weakly decreasing tuples summing to m, then
// sorted descending.
inline std::vector<std::vector<unsigned>> box_partitions(unsigned k, unsigned n, unsigned m)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> t(k, 0);
    while (true) {
        unsigned sum = 0;
        bool decreasing = true;
        for (unsigned i = 0; i < k; ++i) {
            sum += t[i];
            if (i > 0 && t[i] > t[i - 1]) {
                decreasing = false;
            }
        }
        if (decreasing && sum == m) {
            out.push_back(t);
        }
        unsigned pos = 0;
        while (pos < k && t[pos] == n) {
            t[pos++] = 0;
        }
        if (pos == k) {
            break;
        }
        ++t[pos];
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline std::vector<Integer> gaussian_by_enumeration(unsigned n, unsigned k)
{
    std::vector<Integer> c(static_cast<std::size_t>(n) * k + 1);
    for (unsigned m = 0; m <= n * k; ++m) {
        c[m] = static_cast<unsigned long>(box_partitions(k, n, m).size());
    }
    return c;
}

// d/da_j, term by term.
inline Polynomial partial(const Polynomial &p, unsigned j)
{
    Polynomial out(p.context_n());
    for (const auto &[mono, c] : p.terms()) {
        const unsigned e = mono[j];
        if (e == 0) {
            continue;
        }
        std::vector<unsigned> exps(mono.exponents().begin(), mono.exponents().end());
        --exps[j];
        out = out + Polynomial::from_monomial(Monomial(exps), c * e);
    }
    return out;
}

// D written directly as sum_j j a_{j-1} d/da_j with ring operations.
inline Polynomial D(const Polynomial &p)
{
    const unsigned n = p.context_n();
    Polynomial out(n);
    for (unsigned j = 1; j <= n; ++j) {
        out = out + Rational(j) * (Polynomial::variable(n, j - 1) * partial(p, j));
    }
    return out;
}

// Delta = sum_j (n-j) a_{j+1} d/da_j.
inline Polynomial Delta(const Polynomial &p)
{
    const unsigned n = p.context_n();
    Polynomial out(n);
    for (unsigned j = 0; j < n; ++j) {
        out = out + Rational(n - j) * (Polynomial::variable(n, j + 1) * partial(p, j));
    }
    return out;
}

inline Rational frac(long num, long den)
{
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

inline Rational evaluate(const Polynomial &p, const std::vector<Rational> &a)
{
    Rational total = 0;
    for (const auto &[mono, c] : p.terms()) {
        Rational term = c;
        for (std::size_t j = 0; j < a.size(); ++j) {
            for (unsigned e = 0; e < mono[j]; ++e) {
                term *= a[j];
            }
        }
        total += term;
    }
    return total;
}

inline Integer binom(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

// Numeric values of the sheared coefficients a'_j (horizontal) or a''_j
// (vertical) at a concrete point a and shear parameter z.
inline std::vector<Rational> sheared_point(const std::vector<Rational> &a, const Rational &z, bool horizontal)
{
    const auto n = static_cast<unsigned>(a.size() - 1);
    std::vector<Rational> out(a.size());
    for (unsigned j = 0; j <= n; ++j) {
        Rational v = 0;
        Rational zp = 1;
        const unsigned top = horizontal ? j : n - j;
        for (unsigned t = 0; t <= top; ++t) {
            v += Rational(binom(top, t)) * (horizontal ? a[j - t] : a[j + t]) * zp;
            zp *= z;
        }
        out[j] = v;
    }
    return out;
}

// Random homogeneous polynomial of degree k and weight m with small integer
// coefficients; uses only the odometer enumeration above for its support.
inline Polynomial random_isobaric(std::mt19937_64 &rng, unsigned n, unsigned k, unsigned m)
{
    Polynomial out(n);
    for (const auto &parts : box_partitions(k, n, m)) {
        if (rng() % 3 == 0) {
            continue;
        }
        std::vector<unsigned> e(n + 1, 0);
        for (auto p : parts) {
            ++e[p];
        }
        const long c = static_cast<long>(rng() % 11) - 5;
        out = out + Polynomial::from_monomial(Monomial(e), frac(c, 1 + static_cast<long>(rng() % 3)));
    }
    return out;
}

} // namespace oracle
